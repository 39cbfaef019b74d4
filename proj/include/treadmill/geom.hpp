// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace treadmill {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Row-major 2x2 matrix.
struct Mat2 {
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    Vec2 apply(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
};

/// Rotation convention used throughout: A(tau) = [[cos tau, sin tau],
/// [-sin tau, cos tau]] turns vectors clockwise for tau > 0, and satisfies
/// A(t1 + t2) = A(t1) A(t2) and dA/dtau = -A(tau) J.
inline Mat2 rotation(double tau) {
    const double c = std::cos(tau), s = std::sin(tau);
    return {c, s, -s, c};
}

/// The complex structure J = [[0, -1], [1, 0]]; J v rotates v counterclockwise
/// by a quarter turn (multiplication by i).
inline constexpr Mat2 kJ{0.0, -1.0, 1.0, 0.0};

inline Vec2 applyJ(Vec2 v) { return {-v.y, v.x}; }

} // namespace treadmill
