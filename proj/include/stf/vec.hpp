#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace stf {

/// Small fixed-dimension vector used for positions, velocities and forces.
/// D is 2 or 3 for simulations; 1 is allowed for scalar probe signals.
template <int D>
struct Vec {
    std::array<double, D> c{};

    constexpr double& operator[](int i) { return c[i]; }
    constexpr double operator[](int i) const { return c[i]; }

    constexpr Vec& operator+=(const Vec& o) {
        for (int i = 0; i < D; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr Vec& operator-=(const Vec& o) {
        for (int i = 0; i < D; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr Vec& operator*=(double s) {
        for (int i = 0; i < D; ++i) c[i] *= s;
        return *this;
    }

    friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend constexpr Vec operator*(Vec a, double s) { return a *= s; }
    friend constexpr Vec operator*(double s, Vec a) { return a *= s; }
    friend constexpr Vec operator/(Vec a, double s) {
        for (int i = 0; i < D; ++i) a.c[i] /= s;
        return a;
    }
    friend constexpr Vec operator-(Vec a) {
        for (int i = 0; i < D; ++i) a.c[i] = -a.c[i];
        return a;
    }
    friend constexpr bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }

    friend constexpr double dot(const Vec& a, const Vec& b) {
        double s = 0.0;
        for (int i = 0; i < D; ++i) s += a.c[i] * b.c[i];
        return s;
    }
    friend double norm(const Vec& v) { return std::sqrt(dot(v, v)); }
    friend constexpr double norm2(const Vec& v) { return dot(v, v); }

    bool finite() const {
        for (int i = 0; i < D; ++i)
            if (!std::isfinite(c[i])) return false;
        return true;
    }

    static constexpr Vec zero() { return Vec{}; }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

}  // namespace stf
