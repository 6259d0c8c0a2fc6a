#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "safereach/apollonius.hpp"
#include "safereach/errors.hpp"

namespace safereach {

/// Full description of one engagement to simulate.  Numeric fields left at
/// zero are filled by with_defaults() from the initial geometry.
struct ScenarioConfig {
    AgentConfig evader;
    std::vector<AgentConfig> pursuers;
    double dt{0.0};
    double t_max{0.0};
    double capture_radius{0.0};
    double area_threshold{0.0};
    std::size_t sample_stride{1};
    std::uint64_t seed{0};
};

/// Fill unset simulation parameters from the initial geometry:
///   dt             = 1e-3 * scale / max agent speed
///   capture_radius = 1e-2 * scale
///   area_threshold = 1e-4 * scale^2
///   t_max          = 20 * scale / min speed advantage
/// with scale the largest initial evader-pursuer separation.
inline ScenarioConfig with_defaults(ScenarioConfig cfg) {
    const double scale = config_scale(cfg.evader, cfg.pursuers);
    double v_max = cfg.evader.speed;
    double min_gain = std::numeric_limits<double>::infinity();
    for (const auto& p : cfg.pursuers) {
        v_max = std::max(v_max, p.speed);
        min_gain = std::min(min_gain, p.speed - cfg.evader.speed);
    }
    if (cfg.dt <= 0.0 && scale > 0.0 && v_max > 0.0) cfg.dt = 1e-3 * scale / v_max;
    if (cfg.capture_radius <= 0.0) cfg.capture_radius = 1e-2 * scale;
    if (cfg.area_threshold <= 0.0) cfg.area_threshold = 1e-4 * scale * scale;
    if (cfg.t_max <= 0.0 && min_gain > 0.0) cfg.t_max = 20.0 * scale / min_gain;
    if (cfg.sample_stride == 0) cfg.sample_stride = 1;
    return cfg;
}

/// Validate a fully-populated scenario; throws InvalidScenario naming the
/// offending field (and pursuer index where applicable).
inline void validate(const ScenarioConfig& cfg) {
    if (cfg.pursuers.empty()) throw InvalidScenario("pursuers: at least one is required");
    require_finite(cfg.evader.position, "evader.position");
    if (!(cfg.evader.speed > 0.0)) throw InvalidScenario("evader.speed: must be > 0");
    for (std::size_t i = 0; i < cfg.pursuers.size(); ++i) {
        const auto& p = cfg.pursuers[i];
        require_finite(p.position, "pursuer position");
        if (!(p.speed > 0.0)) {
            throw InvalidScenario("pursuers[" + std::to_string(i) + "].speed: must be > 0");
        }
        if (!(p.speed > cfg.evader.speed)) {
            throw InvalidScenario("pursuers[" + std::to_string(i) +
                                  "].speed: must exceed the evader speed (" +
                                  std::to_string(p.speed) + " vs " +
                                  std::to_string(cfg.evader.speed) + ")");
        }
    }
    if (!(cfg.dt > 0.0)) throw InvalidScenario("dt: must be > 0");
    if (!(cfg.t_max >= 0.0)) throw InvalidScenario("t_max: must be >= 0");
    if (!(cfg.capture_radius > 0.0)) throw InvalidScenario("capture_radius: must be > 0");
    if (!(cfg.area_threshold > 0.0)) throw InvalidScenario("area_threshold: must be > 0");
    if (cfg.sample_stride == 0) throw InvalidScenario("sample_stride: must be >= 1");
}

} // namespace safereach
