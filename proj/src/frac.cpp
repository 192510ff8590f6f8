#include "stf/frac.hpp"

#include <cmath>

namespace stf {

double weight_p0(double q, long n) {
    const double s = 2.0 - q;
    const double nn = static_cast<double>(n);
    return std::pow(nn - 1.0, s) - std::pow(nn, 1.0 - q) * (nn + q - 2.0);
}

FracWeights make_weights(double q, long d, double dt) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("fractional order q must lie in (0,1)");
    if (d < 0) throw std::invalid_argument("history window d must be >= 0");
    if (!(dt > 0.0)) throw std::invalid_argument("timestep dt must be > 0");

    FracWeights w;
    w.q = q;
    w.d = d;
    w.dt = dt;
    w.prefactor = std::pow(dt, 1.0 - q) / std::tgamma(3.0 - q);
    w.interior.resize(static_cast<std::size_t>(d) + 1);
    w.interior[0] = 1.0;
    const double s = 2.0 - q;
    for (long k = 1; k <= d; ++k) {
        const double kk = static_cast<double>(k);
        // second difference of x^(2-q); pow(0, s) is exactly 0 as required
        w.interior[static_cast<std::size_t>(k)] =
            std::pow(kk - 1.0, s) - 2.0 * std::pow(kk, s) + std::pow(kk + 1.0, s);
    }
    return w;
}

double FracWeights::window_weight_sum() const {
    double s = 0.0;
    for (std::size_t k = interior.size(); k-- > 0;) s += interior[k];
    return s;
}

}  // namespace stf
