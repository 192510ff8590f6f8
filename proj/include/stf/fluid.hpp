#pragma once

#include <cstdint>
#include <vector>

#include "stf/frac.hpp"
#include "stf/vec.hpp"

namespace stf {

/// Clavet-style fluid parameters. Densities are in kernel units (sums of
/// (1 - r/h)^2 over neighbors), not kg/m^3; particles carry unit mass.
template <int D>
struct FluidParams {
    double h = 0.06;           // interaction radius, m
    double rho0 = 4.0;         // rest density, kernel units
    double k_pressure = 30.0;  // far-pressure stiffness
    double k_near = 300.0;     // near-pressure stiffness
    double sigma = 0.1;        // linear viscosity
    double beta = 0.2;         // quadratic viscosity
    double dt = 0.01;          // timestep, s
    Vec<D> g{};                // gravity, m/s^2

    bool valid() const {
        return h > 0 && dt > 0 && rho0 > 0 && sigma >= 0 && beta >= 0;
    }
};

struct SpringParams {
    double k_min = 25.0;   // base spring stiffness
    double k_hist = 250.0; // history-stiffness gain
    double q = 0.5;        // fractional order
    long d = 100;          // history window, timesteps
    double alpha = 0.3;    // plasticity constant, 1/s
    double gamma = 0.1;    // yield ratio

    bool valid() const {
        return k_min >= 0 && k_hist >= 0 && q > 0 && q < 1 && d >= 0 &&
               alpha >= 0 && gamma >= 0 && gamma < 1;
    }
};

/// Structure-of-arrays particle store. All per-particle fields are kept in
/// parallel vectors indexed by particle id; ids are stable for a run.
template <int D>
struct ParticleSystem {
    std::vector<Vec<D>> pos;
    std::vector<Vec<D>> prev_pos;
    std::vector<Vec<D>> vel;
    std::vector<VelocityHistory<D>> history;
    std::vector<std::uint8_t> boundary_flag;
    std::vector<double> avg_hist_stiffness;  // mean cached spring stiffness

    std::size_t size() const { return pos.size(); }

    void add(const Vec<D>& p, const Vec<D>& v, std::size_t history_capacity) {
        pos.push_back(p);
        prev_pos.push_back(p);
        vel.push_back(v);
        history.emplace_back(history_capacity);
        history.back().push(v);  // step-0 velocity
        boundary_flag.push_back(0);
        avg_hist_stiffness.push_back(0.0);
    }
};

template <int D>
struct Container {
    Vec<D> min{};
    Vec<D> max{};
    double band = 0.03;  // wall proximity band for boundary handling, m

    bool valid() const {
        if (!(band > 0)) return false;
        for (int a = 0; a < D; ++a)
            if (!(min[a] < max[a])) return false;
        return true;
    }
    bool contains(const Vec<D>& p) const {
        for (int a = 0; a < D; ++a)
            if (p[a] < min[a] || p[a] > max[a]) return false;
        return true;
    }
};

struct StepDiagnostics {
    long coincident_pairs = 0;  // exactly-overlapping pairs resolved by jitter
    double ms_step = 0.0;
    double ms_history = 0.0;
};

}  // namespace stf
