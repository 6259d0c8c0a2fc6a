#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "safereach/apollonius.hpp"
#include "safereach/errors.hpp"
#include "safereach/rng.hpp"
#include "safereach/safe_set.hpp"

namespace safereach {

/// Brute-force verifiers, deliberately independent of the closed-form paths
/// they check: area by rejection sampling, gradients by central differences,
/// arc ranges by dense angular membership tests.

struct McEstimate {
    double mean{0.0};
    double std_error{0.0};
    std::int64_t samples{0};
    std::uint64_t seed{0};
};

/// Monte Carlo area of the intersection of discs: uniform rejection sampling
/// over the bounding box of the smallest disc (a superset of the
/// intersection), counting points inside every disc.  Deterministic for a
/// given seed.
inline McEstimate mc_area(const std::vector<ApolloniusDisc>& discs, std::int64_t samples,
                          std::uint64_t seed) {
    if (discs.empty()) throw Error("mc_area requires at least one disc");
    if (samples < 1000) throw Error("mc_area requires at least 1000 samples");

    const ApolloniusDisc* smallest = &discs.front();
    for (const auto& d : discs) {
        if (d.radius < smallest->radius) smallest = &d;
    }
    const double r = smallest->radius;
    const Vec2 lo = smallest->center - Vec2{r, r};
    const double side = 2.0 * r;
    const double box_area = side * side;

    SplitMix64 rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t k = 0; k < samples; ++k) {
        const double x = lo.x + side * rng.uniform01();
        const double y = lo.y + side * rng.uniform01();
        bool inside = true;
        for (const auto& d : discs) {
            const double dx = x - d.center.x;
            const double dy = y - d.center.y;
            if (dx * dx + dy * dy > d.radius * d.radius) {
                inside = false;
                break;
            }
        }
        if (inside) ++hits;
    }

    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate est;
    est.mean = p * box_area;
    est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) * box_area;
    est.samples = samples;
    est.seed = seed;
    return est;
}

/// Which agent a finite-difference probe displaces.
struct AgentSelector {
    bool is_evader{true};
    std::size_t pursuer_index{0};

    static AgentSelector evader() { return {true, 0}; }
    static AgentSelector pursuer(std::size_t i) { return {false, i}; }
};

/// Central-difference gradient of the safe-set area with respect to the
/// selected agent's position.  Probe states that fail to evaluate are
/// reported as DegenerateProbe.
inline Vec2 fd_gradient(const AgentConfig& evader, const std::vector<AgentConfig>& pursuers,
                        const AgentSelector& selector, double h) {
    if (!(h > 0.0)) throw Error("fd_gradient requires h > 0");
    auto area_at = [&](const Vec2& delta) {
        AgentConfig e = evader;
        std::vector<AgentConfig> ps = pursuers;
        if (selector.is_evader) {
            e.position += delta;
        } else {
            ps.at(selector.pursuer_index).position += delta;
        }
        try {
            return boundary(e, ps).area;
        } catch (const Error& err) {
            throw DegenerateProbe("finite-difference probe failed: " + std::string(err.what()));
        }
    };
    return {(area_at({h, 0.0}) - area_at({-h, 0.0})) / (2.0 * h),
            (area_at({0.0, h}) - area_at({0.0, -h})) / (2.0 * h)};
}

/// Angles (2*pi*k/resolution) at which the point of circle i lies inside all
/// other active discs — the sampled counterpart of arc_range.
inline std::vector<double> arc_range_oracle(std::size_t i,
                                            const std::vector<ApolloniusDisc>& discs,
                                            int resolution) {
    if (resolution < 360) throw Error("arc_range_oracle requires resolution >= 360");
    const std::vector<std::size_t> active = active_set(discs);

    double scale = 0.0;
    for (const auto& d : discs) scale = std::max(scale, d.radius);
    const double tol = 1e-12 * scale;

    std::vector<double> accepted;
    for (int k = 0; k < resolution; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(resolution);
        const Vec2 q = point_on_circle(discs[i], theta);
        bool inside = true;
        for (std::size_t j : active) {
            if (j == i) continue;
            if (distance(q, discs[j].center) > discs[j].radius + tol) {
                inside = false;
                break;
            }
        }
        if (inside) accepted.push_back(theta);
    }
    return accepted;
}

} // namespace safereach
