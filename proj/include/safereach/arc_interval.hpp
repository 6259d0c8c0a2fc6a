#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "safereach/errors.hpp"

namespace safereach {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Arcs narrower than this (radians) are treated as empty.
inline constexpr double kArcWidthTol = 1e-12;

/// Width a spurious extra intersection component may have before it is
/// reported as a geometry failure instead of being discarded as noise.
inline constexpr double kComponentNoiseTol = 1e-9;

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

/// A closed angular interval on the circle, [start, start + width] mod 2*pi.
///
/// start lies in [0, 2*pi); width in [0, 2*pi].  width == 2*pi encodes the
/// full circle, width == 0 the empty interval.  Membership: theta is inside
/// iff ((theta - start) mod 2*pi) <= width.
struct ArcInterval {
    double start{0.0};
    double width{0.0};

    bool empty() const { return width <= 0.0; }
    bool full() const { return width >= kTwoPi; }
    double end() const { return start + width; }
    double midpoint() const { return start + 0.5 * width; }

    bool contains(double theta, double tol = 0.0) const {
        if (full()) return true;
        if (empty() && tol <= 0.0) return false;
        const double offset = wrap_angle(theta - start);
        return offset <= width + tol || offset >= kTwoPi - tol;
    }
};

inline ArcInterval full_circle() { return {0.0, kTwoPi}; }
inline ArcInterval empty_interval() { return {0.0, 0.0}; }

/// Interval from angular bounds lo..hi (hi >= lo, hi - lo <= 2*pi).
inline ArcInterval interval_from_bounds(double lo, double hi) {
    return {wrap_angle(lo), std::min(hi - lo, kTwoPi)};
}

namespace detail {

// Linear sub-segment of [0, 2*pi] used while folding circular intersections.
struct Segment {
    double lo;
    double hi;
};

// A circular interval unrolls to at most two linear segments.
inline void unroll(const ArcInterval& iv, std::vector<Segment>& out) {
    const double s = wrap_angle(iv.start);
    const double e = s + iv.width;
    if (e <= kTwoPi) {
        out.push_back({s, e});
    } else {
        out.push_back({s, kTwoPi});
        out.push_back({0.0, e - kTwoPi});
    }
}

} // namespace detail

/// Intersect circular intervals into the single interval they bound.
///
/// The fold clips linear segments of [0, 2*pi], merges the survivors across
/// the wrap point, and discards sub-tolerance slivers.  Geometrically valid
/// inputs (constraint arcs of mutually overlapping discs) always reduce to
/// one component or nothing; two or more components wider than
/// kComponentNoiseTol mean the inputs were corrupted, and that is reported
/// as GeometryAssertionFailure rather than silently resolved.
inline ArcInterval intersect_intervals(std::span<const ArcInterval> intervals) {
    std::vector<detail::Segment> pieces{{0.0, kTwoPi}};
    bool constrained = false;

    for (const ArcInterval& iv : intervals) {
        if (iv.full()) continue;
        constrained = true;
        if (iv.empty()) return empty_interval();

        std::vector<detail::Segment> clip;
        detail::unroll(iv, clip);

        std::vector<detail::Segment> next;
        next.reserve(pieces.size() + 1);
        for (const auto& p : pieces) {
            for (const auto& c : clip) {
                const double lo = std::max(p.lo, c.lo);
                const double hi = std::min(p.hi, c.hi);
                if (hi >= lo) next.push_back({lo, hi});
            }
        }
        if (next.empty()) return empty_interval();
        pieces = std::move(next);
    }

    if (!constrained) return full_circle();

    std::sort(pieces.begin(), pieces.end(),
              [](const detail::Segment& a, const detail::Segment& b) { return a.lo < b.lo; });

    // Merge touching segments (contacts only arise at clip boundaries).
    std::vector<detail::Segment> merged;
    for (const auto& p : pieces) {
        if (!merged.empty() && p.lo <= merged.back().hi + kArcWidthTol) {
            merged.back().hi = std::max(merged.back().hi, p.hi);
        } else {
            merged.push_back(p);
        }
    }

    // Rejoin across the wrap point.
    bool wraps = false;
    double wrap_lo = 0.0, wrap_width = 0.0;
    if (merged.size() >= 2 && merged.front().lo <= kArcWidthTol &&
        merged.back().hi >= kTwoPi - kArcWidthTol) {
        wraps = true;
        wrap_lo = merged.back().lo;
        wrap_width = (kTwoPi - merged.back().lo) + merged.front().hi;
        merged.erase(merged.begin());
        merged.pop_back();
    }

    std::vector<ArcInterval> components;
    if (wraps) components.push_back({wrap_angle(wrap_lo), std::min(wrap_width, kTwoPi)});
    for (const auto& m : merged) {
        components.push_back({wrap_angle(m.lo), m.hi - m.lo});
    }

    std::erase_if(components, [](const ArcInterval& c) { return c.width < kArcWidthTol; });

    if (components.empty()) return empty_interval();
    auto widest = std::max_element(
        components.begin(), components.end(),
        [](const ArcInterval& a, const ArcInterval& b) { return a.width < b.width; });
    for (const auto& c : components) {
        if (&c != &*widest && c.width > kComponentNoiseTol) {
            throw GeometryAssertionFailure(
                "circular intersection produced multiple components beyond tolerance");
        }
    }
    return *widest;
}

} // namespace safereach
