#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "safereach/apollonius.hpp"
#include "safereach/safe_set.hpp"
#include "safereach/vec2.hpp"

namespace safereach {

/// Gradients of the implicit circle function F(q) = |q - c|^2 - r^2 with
/// respect to the query point and the two agent positions it depends on.
struct LevelSetGradients {
    Vec2 wrt_point;   // 2 (q - c)
    Vec2 wrt_pursuer; // 2 a^2 / (1 - a^2) * (q - p)
    Vec2 wrt_evader;  // 2 / (1 - a^2) * (e - q)
};

/// Closed-form level-set gradients for one disc.  The gradient with respect
/// to any other pursuer's position is identically zero, so it is not
/// represented.
inline LevelSetGradients levelset_gradients(const ApolloniusDisc& disc,
                                            const AgentConfig& evader,
                                            const AgentConfig& pursuer, const Vec2& q) {
    const double a2 = disc.speed_ratio * disc.speed_ratio;
    const double denom = 1.0 - a2;
    LevelSetGradients g;
    g.wrt_point = (q - disc.center) * 2.0;
    g.wrt_pursuer = (q - pursuer.position) * (2.0 * a2 / denom);
    g.wrt_evader = (evader.position - q) * (2.0 / denom);
    return g;
}

/// Derived per-arc quantities: angular width, arc length, chord length,
/// chord-midpoint direction, and the arc centroid
///
///   centroid = c + r * (chord / arc_length) * unit(mid_angle),
///
/// which for the full circle degenerates to the center (chord = 0).
struct ArcGeometry {
    std::size_t disc_index{0};
    double delta_theta{0.0};
    double arc_length{0.0};
    double chord_length{0.0};
    double mid_angle{0.0};
    Vec2 mid_unit;
    Vec2 centroid;
};

inline ArcGeometry arc_geometry(const ApolloniusDisc& disc, const BoundaryArc& arc) {
    ArcGeometry g;
    g.disc_index = arc.disc_index;
    g.delta_theta = arc.width();
    g.arc_length = disc.radius * g.delta_theta;
    g.chord_length = 2.0 * disc.radius * std::sin(0.5 * g.delta_theta);
    g.mid_angle = arc.mid_angle();
    g.mid_unit = unit_at(g.mid_angle);
    if (g.delta_theta > 0.0 && g.arc_length > 0.0) {
        g.centroid = disc.center + g.mid_unit * (disc.radius * g.chord_length / g.arc_length);
    } else {
        g.centroid = disc.center;
    }
    return g;
}

/// Which closed form of the area gradients to evaluate.
///
/// Integral is the ground truth: prefactors fall straight out of the
/// boundary-flux integral and are confirmed by finite differences and by the
/// exact single-disc case.  RadiusArcLength replaces each arc's weight with
/// (1 - a^2) r L, which rescales every term by the squared evader-pursuer
/// separation; directions agree but magnitudes do not, and it is kept only
/// so the two can be compared.
enum class GradientForm {
    Integral,
    RadiusArcLength,
};

/// Area gradients with respect to every agent position.  Pursuers without a
/// boundary arc get the zero vector; the per-agent vectors always satisfy
/// sum(per_pursuer) + evader == 0 up to roundoff, because a rigid
/// translation of all agents leaves the area unchanged.
struct AreaGradients {
    std::vector<Vec2> per_pursuer;
    Vec2 evader;
};

namespace detail {

inline std::optional<BoundaryArc> arc_of_disc(const SafeSetBoundary& boundary,
                                              std::size_t disc_index) {
    for (const auto& arc : boundary.arcs) {
        if (arc.disc_index == disc_index) return arc;
    }
    return std::nullopt;
}

} // namespace detail

/// Gradient of the safe-set area with respect to pursuer i's position.
///
/// Only pursuer i's own circle moves with p_i, so a single arc contributes:
///
///   grad = - a^2 * dtheta / (1 - a^2) * (centroid - p_i)
///
/// i.e. the negative gradient points from the pursuer straight at its arc's
/// centroid.  Pursuers with no boundary arc contribute nothing and get zero.
inline Vec2 grad_pursuer(std::size_t i, const AgentConfig& /*evader*/,
                         const std::vector<AgentConfig>& pursuers,
                         const SafeSetBoundary& boundary,
                         GradientForm form = GradientForm::Integral) {
    const auto arc = detail::arc_of_disc(boundary, i);
    if (!arc) return {0.0, 0.0};

    const ApolloniusDisc& disc = boundary.discs[i];
    const ArcGeometry geom = arc_geometry(disc, *arc);
    const Vec2 to_centroid = geom.centroid - pursuers[i].position;
    const double a2 = disc.speed_ratio * disc.speed_ratio;

    if (form == GradientForm::RadiusArcLength) {
        return to_centroid * (-(1.0 - a2) * disc.radius * geom.arc_length);
    }
    return to_centroid * (-a2 * geom.delta_theta / (1.0 - a2));
}

/// Gradient of the safe-set area with respect to the evader's position:
/// every boundary arc contributes a vector toward its centroid,
///
///   grad = sum_i dtheta_i / (1 - a_i^2) * (centroid_i - e).
inline Vec2 grad_evader(const AgentConfig& evader,
                        const std::vector<AgentConfig>& /*pursuers*/,
                        const SafeSetBoundary& boundary,
                        GradientForm form = GradientForm::Integral) {
    Vec2 total{0.0, 0.0};
    for (const auto& arc : boundary.arcs) {
        const ApolloniusDisc& disc = boundary.discs[arc.disc_index];
        const ArcGeometry geom = arc_geometry(disc, arc);
        const Vec2 to_centroid = geom.centroid - evader.position;
        const double a2 = disc.speed_ratio * disc.speed_ratio;
        if (form == GradientForm::RadiusArcLength) {
            total += to_centroid * ((1.0 - a2) / a2 * disc.radius * geom.arc_length);
        } else {
            total += to_centroid * (geom.delta_theta / (1.0 - a2));
        }
    }
    return total;
}

/// All area gradients for one boundary.
inline AreaGradients area_gradients(const AgentConfig& evader,
                                    const std::vector<AgentConfig>& pursuers,
                                    const SafeSetBoundary& boundary) {
    AreaGradients g;
    g.per_pursuer.resize(pursuers.size());
    for (std::size_t i = 0; i < pursuers.size(); ++i) {
        g.per_pursuer[i] = grad_pursuer(i, evader, pursuers, boundary);
    }
    g.evader = grad_evader(evader, pursuers, boundary);
    return g;
}

/// Area rate under mutual best response:
///
///   dA/dt = V_e |F_e| - sum_i V_i |F_{p_i}|
///
/// The evader expands along its gradient at full speed while every pursuer
/// descends its own; the sign says which side is winning.
inline double optimal_area_rate(const AgentConfig& evader,
                                const std::vector<AgentConfig>& pursuers,
                                const AreaGradients& gradients) {
    double rate = evader.speed * gradients.evader.norm();
    for (std::size_t i = 0; i < pursuers.size(); ++i) {
        rate -= pursuers[i].speed * gradients.per_pursuer[i].norm();
    }
    return rate;
}

} // namespace safereach
