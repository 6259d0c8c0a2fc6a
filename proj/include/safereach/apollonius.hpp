#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "safereach/errors.hpp"
#include "safereach/vec2.hpp"

namespace safereach {

/// A point agent with a fixed maximum speed.
struct AgentConfig {
    Vec2 position;
    double speed{1.0}; // length/time, strictly positive
};

/// The disc of points the evader reaches no later than one faster pursuer.
///
/// For evader position e, pursuer position p and speed ratio
/// a = V_e / V_i in (0,1):
///
///   center = (e - a^2 p) / (1 - a^2)
///   radius = a * |e - p| / (1 - a^2)
///
/// The evader always lies strictly inside (distance to center is
/// a^2 |e - p| / (1 - a^2) < radius whenever e != p); radius is zero only
/// for coincident agents.
struct ApolloniusDisc {
    Vec2 center;
    double radius{0.0};
    double speed_ratio{0.5}; // V_e / V_i, in (0,1)
    std::size_t pursuer_index{0};
};

/// Speed ratio of one engagement pair; throws SpeedOrderViolation unless the
/// pursuer is strictly faster.
inline double speed_ratio(const AgentConfig& evader, const AgentConfig& pursuer,
                          std::size_t pursuer_index) {
    if (!(evader.speed > 0.0) || !(pursuer.speed > 0.0)) {
        throw Error("agent speeds must be strictly positive");
    }
    if (!(pursuer.speed > evader.speed)) {
        throw SpeedOrderViolation("pursuer " + std::to_string(pursuer_index) +
                                  " is not faster than the evader (V=" +
                                  std::to_string(pursuer.speed) + " vs " +
                                  std::to_string(evader.speed) + ")");
    }
    return evader.speed / pursuer.speed;
}

/// Build the reachable disc for one pursuer-evader pair.  Coincident agents
/// yield the degenerate radius-zero disc; capture detection is the caller's
/// concern.
inline ApolloniusDisc apollonius_disc(const AgentConfig& evader, const AgentConfig& pursuer,
                                      std::size_t pursuer_index) {
    require_finite(evader.position, "evader position");
    require_finite(pursuer.position, "pursuer position");
    const double a = speed_ratio(evader, pursuer, pursuer_index);
    const double a2 = a * a;
    const double denom = 1.0 - a2;
    ApolloniusDisc disc;
    disc.center = (evader.position - pursuer.position * a2) / denom;
    disc.radius = a * distance(evader.position, pursuer.position) / denom;
    disc.speed_ratio = a;
    disc.pursuer_index = pursuer_index;
    return disc;
}

inline std::vector<ApolloniusDisc> apollonius_discs(const AgentConfig& evader,
                                                    const std::vector<AgentConfig>& pursuers) {
    std::vector<ApolloniusDisc> discs;
    discs.reserve(pursuers.size());
    for (std::size_t i = 0; i < pursuers.size(); ++i) {
        discs.push_back(apollonius_disc(evader, pursuers[i], i));
    }
    return discs;
}

/// Time by which the evader beats the pursuer to q:
///
///   |q - e| / V_e  -  |q - p| / V_i
///
/// Negative iff q is strictly interior to the pair's disc, zero on its
/// boundary.  Serves as the semantic oracle for apollonius_disc.
inline double time_advantage(const Vec2& q, const AgentConfig& evader,
                             const AgentConfig& pursuer) {
    require_finite(q, "query point");
    require_finite(evader.position, "evader position");
    require_finite(pursuer.position, "pursuer position");
    if (!(evader.speed > 0.0) || !(pursuer.speed > 0.0)) {
        throw Error("agent speeds must be strictly positive");
    }
    return distance(q, evader.position) / evader.speed -
           distance(q, pursuer.position) / pursuer.speed;
}

/// Largest evader-pursuer separation; the length scale all relative
/// tolerances refer to.
inline double config_scale(const AgentConfig& evader, const std::vector<AgentConfig>& pursuers) {
    double scale = 0.0;
    for (const auto& p : pursuers) {
        scale = std::max(scale, distance(evader.position, p.position));
    }
    return scale;
}

} // namespace safereach
