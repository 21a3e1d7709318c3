#pragma once

#include <cmath>

namespace passplan {

/// 2D vector in field coordinates (metres). X runs toward the opponent goal,
/// Y to the left; the field centre is the origin.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  /// Z component of the cross product, positive when `o` lies to the left.
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::sqrt(x * x + y * y); }
  constexpr double norm2() const { return x * x + y * y; }

  /// Unit vector; the zero vector is returned unchanged.
  Vec2 normalized() const {
    const double n = norm();
    if (n == 0.0) return *this;
    return {x / n, y / n};
  }

  /// Perpendicular obtained by rotating 90 degrees counter-clockwise.
  constexpr Vec2 perp_left() const { return {-y, x}; }
  /// Perpendicular obtained by rotating 90 degrees clockwise.
  constexpr Vec2 perp_right() const { return {y, -x}; }

  double angle() const { return std::atan2(y, x); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Distance from point p to the segment [a, b].
inline double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) return distance(p, a);
  double t = (p - a).dot(ab) / len2;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return distance(p, a + ab * t);
}

}  // namespace passplan
