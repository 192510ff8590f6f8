#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "stf/vec.hpp"

namespace stf {

/// Precomputed quadrature weights for the truncated fractional derivative of
/// order q, evaluated from a stream of past velocities sampled at a fixed dt.
///
/// `interior[k]` is the weight of the sample at lag k behind the current step
/// (k = 0 is the current step, weight exactly 1). These weights depend only on
/// the lag, so once the window is full they are stationary and can be reused
/// every step. While the window still reaches back to the very first sample
/// (step index n <= d), the oldest sample instead takes the dedicated
/// first-sample weight from weight_p0().
struct FracWeights {
    double q = 0.5;       // derivative order, 0 < q < 1
    long d = 0;           // window length in timesteps (lags 1..d kept)
    double dt = 0.0;      // sample spacing, seconds
    double prefactor = 0; // dt^(1-q) / Gamma(3-q)
    std::vector<double> interior;  // size d+1, interior[0] == 1

    /// Sum of all interior weights; closed form (d+1)^(2-q) - d^(2-q).
    double window_weight_sum() const;
};

/// Builds the weight table. Throws std::invalid_argument for q outside (0,1),
/// d < 0 or dt <= 0.
FracWeights make_weights(double q, long d, double dt);

/// Weight of the very first sample (p = 0) when evaluating at step n >= 1 with
/// an untruncated window: (n-1)^(2-q) - n^(1-q)·(n+q-2).
double weight_p0(double q, long n);

/// Ring buffer of the most recent velocity samples, newest last. Pushing past
/// capacity evicts the oldest entry. Entries correspond to consecutive
/// timesteps with no gaps.
template <int D>
class VelocityHistory {
  public:
    VelocityHistory() = default;
    explicit VelocityHistory(std::size_t capacity)
        : buf_(capacity > 0 ? capacity : 1) {}

    std::size_t capacity() const { return buf_.size(); }
    std::size_t count() const { return count_; }
    bool empty() const { return count_ == 0; }

    void push(const Vec<D>& v) {
        if (count_ < buf_.size()) {
            buf_[(head_ + count_) % buf_.size()] = v;
            ++count_;
        } else {
            buf_[head_] = v;
            head_ = (head_ + 1) % buf_.size();
        }
    }

    /// i-th entry, oldest first (0 <= i < count()).
    const Vec<D>& entry(std::size_t i) const {
        return buf_[(head_ + i) % buf_.size()];
    }

    void clear() {
        head_ = 0;
        count_ = 0;
    }

    /// Contiguous storage split: entries appear oldest-to-newest as first()
    /// followed by second(). Lets hot loops run without per-access modulo.
    std::span<const Vec<D>> first() const {
        std::size_t len = std::min(count_, buf_.size() - head_);
        return {buf_.data() + head_, len};
    }
    std::span<const Vec<D>> second() const {
        std::size_t len = std::min(count_, buf_.size() - head_);
        return {buf_.data(), count_ - len};
    }

  private:
    std::vector<Vec<D>> buf_{Vec<D>{}};
    std::size_t head_ = 0;
    std::size_t count_ = 0;
};

/// Weighted sum of the history window at step n, without the prefactor:
/// sum over stored samples p of a_{p,n} · v_p, oldest to newest. The history
/// must hold exactly the samples for steps max(0, n-d) .. n.
///
/// The summation order is fixed so results are bit-reproducible.
template <int D>
Vec<D> weighted_window_sum(const VelocityHistory<D>& h, const FracWeights& w,
                           long n) {
    Vec<D> acc{};
    const long count = static_cast<long>(h.count());
    if (count == 0) return acc;
    // Oldest stored sample is step p0 = n - count + 1; lag runs count-1 .. 0.
    const long p0 = n - count + 1;
    long lag = count - 1;
    long p = p0;
    auto run = [&](std::span<const Vec<D>> part) {
        for (const Vec<D>& v : part) {
            double a;
            if (p == 0 && n >= 1)
                a = weight_p0(w.q, n);
            else
                a = w.interior[static_cast<std::size_t>(lag)];
            acc += a * v;
            --lag;
            ++p;
        }
    };
    run(h.first());
    run(h.second());
    return acc;
}

/// Truncated-history fractional derivative of the sampled position stream at
/// step n: prefactor · weighted_window_sum. Empty history yields zero.
template <int D>
Vec<D> frac_deriv(const VelocityHistory<D>& h, const FracWeights& w, long n) {
    return w.prefactor * weighted_window_sum(h, w, n);
}

}  // namespace stf
