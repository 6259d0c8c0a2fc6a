#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "safereach/apollonius.hpp"
#include "safereach/arc_interval.hpp"
#include "safereach/errors.hpp"
#include "safereach/vec2.hpp"

namespace safereach {

/// Relative guard below which two disc centers are treated as coincident.
inline constexpr double kCoincidentCenterTol = 1e-12;

/// Slack allowed when the arccos argument leaves [-1, 1]; larger excursions
/// are resolved as the corresponding degenerate case.
inline constexpr double kCosClampGuard = 1e-9;

/// Relative closure tolerance for consecutive boundary arc endpoints.
inline constexpr double kClosureTol = 1e-9;

/// One circular arc of the safe-set boundary: the piece of circle
/// `disc_index` between theta_min and theta_max = theta_min + width,
/// width in (0, 2*pi].
struct BoundaryArc {
    std::size_t disc_index{0};
    double theta_min{0.0};
    double theta_max{0.0};

    double width() const { return theta_max - theta_min; }
    double mid_angle() const { return 0.5 * (theta_min + theta_max); }
};

/// Point on a disc's bounding circle at parameter angle theta.
inline Vec2 point_on_circle(const ApolloniusDisc& disc, double theta) {
    return disc.center + unit_at(theta) * disc.radius;
}

/// The intersection-of-discs region: its boundary arcs in counterclockwise
/// order, the discs they refer to, the active disc indices, and the enclosed
/// area.
struct SafeSetBoundary {
    std::vector<BoundaryArc> arcs;       // counterclockwise around the evader
    std::vector<ApolloniusDisc> discs;   // indexed by pursuer
    std::vector<std::size_t> active;     // discs not wholly containing another
    double area{0.0};
};

/// Indices of discs that may contribute to the intersection boundary.
///
/// Disc i survives iff it does not wholly contain any other disc:
/// |c_i - c_j| + r_j >= r_i for all j.  Ties (internal tangency, identical
/// discs) are retained; the resulting zero-width arcs are dropped later.
/// Near-coincident centers are resolved in favour of the smaller disc.
inline std::vector<std::size_t> active_set(const std::vector<ApolloniusDisc>& discs) {
    if (discs.empty()) throw Error("active_set requires at least one disc");
    double scale = 0.0;
    for (const auto& d : discs) scale = std::max(scale, d.radius);
    const double coincident = kCoincidentCenterTol * scale;

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < discs.size(); ++i) {
        bool active = true;
        for (std::size_t j = 0; j < discs.size() && active; ++j) {
            if (j == i) continue;
            const double d = distance(discs[i].center, discs[j].center);
            if (d <= coincident) {
                active = !(discs[i].radius > discs[j].radius);
            } else {
                active = d + discs[j].radius >= discs[i].radius;
            }
        }
        if (active) kept.push_back(i);
    }
    return kept;
}

/// Angles on circle i whose points lie inside disc j.
///
/// With d = |c_j - c_i|, phi the angle of c_j - c_i, and
/// cos(half_width) = (d^2 + r_i^2 - r_j^2) / (2 r_i d), the constraint is
/// the interval [phi - half_width, phi + half_width].  Full circle when disc
/// j swallows circle i; EmptyOverlap when the discs do not meet at all,
/// which valid inputs (discs sharing an interior point) can never produce.
inline ArcInterval pairwise_constraint_interval(const ApolloniusDisc& disc_i,
                                                const ApolloniusDisc& disc_j) {
    const Vec2 offset = disc_j.center - disc_i.center;
    const double d = offset.norm();
    const double ri = disc_i.radius;
    const double rj = disc_j.radius;

    const double coincident = kCoincidentCenterTol * std::max(ri, rj);
    if (d <= coincident) {
        if (ri <= rj + d) return full_circle();
        throw EmptyOverlap("concentric discs with the outer circle outside the inner disc");
    }
    if (ri <= 0.0) {
        // Degenerate point "circle": inside j iff the point is.
        return d <= rj ? full_circle()
                       : throw EmptyOverlap("degenerate circle lies outside the other disc");
    }

    const double cos_arg = (d * d + ri * ri - rj * rj) / (2.0 * ri * d);
    if (cos_arg > 1.0 + kCosClampGuard) {
        throw EmptyOverlap("circle constraint is empty (separation " + std::to_string(d) +
                           " vs radii " + std::to_string(ri) + ", " + std::to_string(rj) + ")");
    }
    if (cos_arg < -1.0 - kCosClampGuard) return full_circle(); // containment, d + ri < rj

    const double clamped = std::clamp(cos_arg, -1.0, 1.0);
    const double half_width = std::acos(clamped);
    const double phi = angle_of(offset);
    return interval_from_bounds(phi - half_width, phi + half_width);
}

/// Angular range of circle i that lies inside every other active disc: the
/// intersection of all pairwise constraints, a single interval or empty.
inline ArcInterval arc_range(std::size_t i, const std::vector<ApolloniusDisc>& discs,
                             const std::vector<std::size_t>& active) {
    std::vector<ArcInterval> constraints;
    constraints.reserve(active.size());
    for (std::size_t j : active) {
        if (j == i) continue;
        constraints.push_back(pairwise_constraint_interval(discs[i], discs[j]));
    }
    return intersect_intervals(constraints);
}

namespace detail {

// Closed-form contribution of one circular arc to (1/2) * closed-path
// integral of (x dy - y dx).
inline double green_arc_term(const ApolloniusDisc& disc, double a, double b) {
    const double r = disc.radius;
    const double cx = disc.center.x;
    const double cy = disc.center.y;
    return 0.5 * (r * r * (b - a) +
                  r * (cx * (std::sin(b) - std::sin(a)) - cy * (std::cos(b) - std::cos(a))));
}

} // namespace detail

/// Enclosed area of an assembled boundary, by the per-arc closed form of
/// Green's theorem.  Counterclockwise ordering makes every valid result
/// non-negative; a negative total means the cycle is corrupt.
inline double area(const SafeSetBoundary& boundary) {
    double total = 0.0;
    for (const auto& arc : boundary.arcs) {
        total += detail::green_arc_term(boundary.discs[arc.disc_index], arc.theta_min,
                                        arc.theta_max);
    }
    if (total < 0.0) {
        throw GeometryAssertionFailure("boundary arcs enclose a negative area (ordering bug)");
    }
    return total;
}

/// Build the full safe-set boundary for one engagement state.
///
/// Discs are constructed per pursuer, wholly-containing discs are filtered
/// out, each surviving circle's contributing interval is intersected from
/// the pairwise constraints, and the non-empty arcs are ordered
/// counterclockwise by the bearing of their midpoints from the evader (an
/// interior point of every disc).  Endpoint closure of the resulting cycle
/// is verified before the area is evaluated.
inline SafeSetBoundary boundary(const AgentConfig& evader,
                                const std::vector<AgentConfig>& pursuers) {
    if (pursuers.empty()) throw InvalidScenario("at least one pursuer is required");
    const double scale = config_scale(evader, pursuers);
    if (scale <= 0.0) throw CaptureDegenerate("all pursuers coincide with the evader");
    for (std::size_t i = 0; i < pursuers.size(); ++i) {
        if (distance(evader.position, pursuers[i].position) < kCoincidentCenterTol * scale) {
            throw CaptureDegenerate("pursuer " + std::to_string(i) +
                                    " coincides with the evader");
        }
    }

    SafeSetBoundary result;
    result.discs = apollonius_discs(evader, pursuers);
    result.active = active_set(result.discs);

    for (std::size_t i : result.active) {
        const ArcInterval range = arc_range(i, result.discs, result.active);
        if (range.width > kArcWidthTol) {
            result.arcs.push_back({i, range.start, range.start + range.width});
        }
    }
    if (result.arcs.empty()) {
        throw GeometryAssertionFailure("no boundary arcs despite a non-degenerate state");
    }

    std::sort(result.arcs.begin(), result.arcs.end(),
              [&](const BoundaryArc& a, const BoundaryArc& b) {
                  const Vec2 ma =
                      point_on_circle(result.discs[a.disc_index], a.mid_angle()) - evader.position;
                  const Vec2 mb =
                      point_on_circle(result.discs[b.disc_index], b.mid_angle()) - evader.position;
                  const double aa = angle_of(ma);
                  const double ab = angle_of(mb);
                  if (aa != ab) return aa < ab;
                  return a.disc_index < b.disc_index;
              });

    const double closure_tol = kClosureTol * scale;
    const std::size_t n = result.arcs.size();
    for (std::size_t k = 0; k < n; ++k) {
        const BoundaryArc& cur = result.arcs[k];
        const BoundaryArc& nxt = result.arcs[(k + 1) % n];
        const Vec2 tail = point_on_circle(result.discs[cur.disc_index], cur.theta_max);
        const Vec2 head = point_on_circle(result.discs[nxt.disc_index], nxt.theta_min);
        if (distance(tail, head) > closure_tol) {
            throw GeometryAssertionFailure(
                "boundary cycle does not close between arcs " + std::to_string(k) + " and " +
                std::to_string((k + 1) % n) + " (gap " + std::to_string(distance(tail, head)) +
                ")");
        }
    }

    result.area = area(result);
    return result;
}

} // namespace safereach
