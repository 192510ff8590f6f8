#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "stf/vec.hpp"

namespace stf {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Deterministic unit direction used to separate exactly coincident pairs.
/// Depends only on (seed, a, b) with a < b, so every code path (parallel
/// kernels, serial reference) resolves the same pair the same way.
template <int D>
Vec<D> coincident_dir(std::uint64_t seed, std::uint32_t a, std::uint32_t b) {
    std::uint64_t h = splitmix64(seed ^ (static_cast<std::uint64_t>(a) << 32 |
                                         static_cast<std::uint64_t>(b)));
    Vec<D> dir{};
    if constexpr (D == 1) {
        dir[0] = (h & 1) ? 1.0 : -1.0;
    } else if constexpr (D == 2) {
        const double ang = 2.0 * std::numbers::pi * uniform01(h);
        dir[0] = std::cos(ang);
        dir[1] = std::sin(ang);
    } else {
        const double z = 2.0 * uniform01(h) - 1.0;
        const double ang = 2.0 * std::numbers::pi * uniform01(splitmix64(h));
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        dir[0] = r * std::cos(ang);
        dir[1] = r * std::sin(ang);
        dir[2] = z;
    }
    return dir;
}

/// Antisymmetric coincident direction playing the role of unit(x_a - x_b):
/// swapping the arguments flips the sign exactly.
template <int D>
Vec<D> coincident_unit(std::uint64_t seed, std::uint32_t from,
                       std::uint32_t to) {
    return from < to ? coincident_dir<D>(seed, from, to)
                     : -coincident_dir<D>(seed, to, from);
}

}  // namespace stf
