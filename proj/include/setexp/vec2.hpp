#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace setexp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline bool is_inf(double v) { return v == kInf; }

// Product on (-inf, inf] with the support-function convention 0 * inf = 0.
inline double ext_mul(double c, double v) { return c == 0.0 ? 0.0 : c * v; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double c) {
    x *= c;
    y *= c;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double c) { return {c * a.x, c * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr Vec2 rot_ccw(Vec2 a) { return {-a.y, a.x}; }
constexpr Vec2 rot_cw(Vec2 a) { return {a.y, -a.x}; }

inline Vec2 unit(Vec2 a) {
  const double n = norm(a);
  return {a.x / n, a.y / n};
}

inline Vec2 from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Angle in [0, 2pi).
inline double angle_of(Vec2 a) {
  double t = std::atan2(a.y, a.x);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

// Reduce an angle difference into [0, 2pi).
inline double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

}  // namespace setexp
