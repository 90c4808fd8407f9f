#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace elastica {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default geometric tolerances. Curves carry their own copies so callers can
// loosen or tighten them per instance.
inline constexpr double kPosTol = 1e-9;
inline constexpr double kAngTol = 1e-9;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Rotate by +pi/2 (left normal of a direction vector).
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

inline Vec2 unit_from_angle(double theta) { return Vec2(std::cos(theta), std::sin(theta)); }

inline double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

// Map an angle to [0, 2*pi).
inline double wrap_positive(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Map an angle to (-pi, pi].
inline double wrap_signed(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

// Smallest absolute difference between two directions (radians).
inline double angle_distance(double a, double b) { return std::abs(wrap_signed(a - b)); }

// Rigid motion x -> R(theta) x + t.
struct RigidMotion {
  double theta = 0.0;
  Vec2 translation = Vec2::Zero();

  Vec2 operator()(const Vec2& p) const {
    return Eigen::Rotation2Dd(theta) * p + translation;
  }
};

}  // namespace elastica
