#pragma once

#include <cmath>
#include <string>

#include "safereach/errors.hpp"

namespace safereach {

/// Planar point/vector with double components.  All geometry in the library
/// is built from this type; operations are value-semantic and allocation-free.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double xv, double yv) : x(xv), y(yv) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr bool operator==(const Vec2& r) const = default;

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }

    /// Perpendicular vector, rotated +90 degrees.
    constexpr Vec2 perp() const { return {-y, x}; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }

    /// Unit vector in the same direction, or {0,0} when the norm is <= eps.
    Vec2 normalized(double eps = 0.0) const {
        const double n = norm();
        if (n <= eps || n == 0.0) return {0.0, 0.0};
        return {x / n, y / n};
    }

    /// Counterclockwise rotation by the given angle in radians.
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Angle of the vector in (-pi, pi].
inline double angle_of(const Vec2& v) { return std::atan2(v.y, v.x); }

/// Unit vector at the given angle.
inline Vec2 unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Non-finite components are never admitted into public geometric operations.
inline void require_finite(const Vec2& v, const char* what) {
    if (!v.finite()) {
        throw Error(std::string(what) + " has a non-finite component");
    }
}

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw Error(std::string(what) + " is not finite");
    }
}

} // namespace safereach
