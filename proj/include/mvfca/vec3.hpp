#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace mvfca {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// A 3-vector with |v| = 1 to within 1e-12.
class UnitVector {
public:
  static constexpr double tolerance = 1e-12;

  /// Accepts an already-normalized vector; throws if it is not.
  explicit UnitVector(Vec3 v) : v_(v) {
    if (!(std::abs(norm(v) - 1.0) <= tolerance))
      throw ConfigError("vector is not unit-normalized (|v| = " +
                        std::to_string(norm(v)) + ")");
  }

  static UnitVector normalize(Vec3 v) {
    const double n = norm(v);
    if (!(n > 0) || !std::isfinite(n))
      throw ConfigError("cannot normalize a zero or non-finite vector");
    return UnitVector((1.0 / n) * v);
  }

  const Vec3 &vec() const noexcept { return v_; }
  double x() const noexcept { return v_.x; }
  double y() const noexcept { return v_.y; }
  double z() const noexcept { return v_.z; }

  friend double dot(const UnitVector &a, const UnitVector &b) { return dot(a.v_, b.v_); }

private:
  Vec3 v_;
};

} // namespace mvfca
