#pragma once

#include <cstddef>

#include "safereach/gradients.hpp"
#include "safereach/vec2.hpp"

namespace safereach {

/// Heading threshold: gradients smaller than this (in area-per-length units,
/// derived from the configuration length scale) command a standstill instead
/// of an arbitrary unit vector.
inline double gradient_zero_threshold(double scale) { return 1e-12 * scale; }

/// An instantaneous heading: either a unit vector or exactly zero (agents
/// may stand still, their speed bound is an upper limit).
struct HeadingCommand {
    Vec2 direction;

    bool is_zero() const { return direction.x == 0.0 && direction.y == 0.0; }
};

/// Best-response pursuer heading: straight down the area gradient, which
/// points the pursuer at the centroid of its boundary arc.  An inactive or
/// arc-less pursuer (vanishing gradient) holds position.
inline HeadingCommand pursuer_heading(std::size_t i, const AreaGradients& gradients,
                                      double zero_threshold) {
    const Vec2& g = gradients.per_pursuer[i];
    if (g.norm() <= zero_threshold) return {{0.0, 0.0}};
    return {(-g).normalized()};
}

/// Best-response evader heading: straight up the area gradient, a weighted
/// pull toward the centroids of all boundary arcs.  Zero when the gradient
/// vanishes (symmetric encirclement).
inline HeadingCommand evader_heading(const AreaGradients& gradients, double zero_threshold) {
    const Vec2& g = gradients.evader;
    if (g.norm() <= zero_threshold) return {{0.0, 0.0}};
    return {g.normalized()};
}

} // namespace safereach
