#pragma once

// Coordinates on the unit-area disk, the cylinder S^1 x (0,1] and the circle
// S^1 = R/Z, together with the area- and symmetry-preserving map between the
// punctured disk and the cylinder:
//
//     (r, phi) -> (phi / 2pi, pi r^2)
//
// Angles are radians throughout. Circle coordinates are fractions of a turn.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace yinyang {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// Radius of the disk of unit area.
inline const double kDiskRadius = 1.0 / std::sqrt(std::numbers::pi);

/// Representative of x mod 1 in [0, 1).
inline double wrap_unit(double x) noexcept {
  double y = x - std::floor(x);
  // x - floor(x) can round up to 1 for tiny negative x.
  return y >= 1.0 ? 0.0 : y;
}

/// Representative of x mod 1 in (0, 1].
inline double wrap_unit_upper(double x) noexcept {
  double y = wrap_unit(x);
  return y == 0.0 ? 1.0 : y;
}

/// Representative of phi mod 2pi in (0, 2pi].
inline double wrap_angle_upper(double phi) noexcept {
  double y = phi - kTwoPi * std::floor(phi / kTwoPi);
  if (y <= 0.0 || y > kTwoPi) y = kTwoPi;
  return y;
}

/// A point of S^1 = R/Z, normalized to [0, 1).
class CirclePoint {
 public:
  constexpr CirclePoint() = default;
  explicit CirclePoint(double x) noexcept : value_(wrap_unit(x)) {}

  double value() const noexcept { return value_; }

  friend CirclePoint operator+(CirclePoint a, CirclePoint b) noexcept {
    return CirclePoint(a.value_ + b.value_);
  }
  friend CirclePoint operator-(CirclePoint a, CirclePoint b) noexcept {
    return CirclePoint(a.value_ - b.value_);
  }
  CirclePoint operator-() const noexcept { return CirclePoint(-value_); }
  friend bool operator==(CirclePoint, CirclePoint) = default;

 private:
  double value_ = 0.0;
};

/// Polar point of the punctured unit-area disk: 0 < r <= 1/sqrt(pi),
/// phi in (0, 2pi].
struct DiskPoint {
  double r = 0.0;
  double phi = 0.0;

  /// Builds a point with phi reduced to (0, 2pi]. Throws on r outside
  /// (0, 1/sqrt(pi)] (a small relative slack absorbs rounding at the rim).
  static DiskPoint make(double r, double phi) {
    if (!(r > 0.0)) throw std::domain_error("disk point: r must be positive (center excluded)");
    if (r > kDiskRadius * (1.0 + 1e-12))
      throw std::domain_error("disk point: r exceeds the unit-area disk radius");
    return DiskPoint{r, wrap_angle_upper(phi)};
  }

  double x() const noexcept { return r * std::cos(phi); }
  double y() const noexcept { return r * std::sin(phi); }
};

/// Point of the cylinder S^1 x (0, 1]; u is in (0, 1] and taken mod 1.
struct CylinderPoint {
  double u = 1.0;
  double v = 1.0;

  static CylinderPoint make(double u, double v) {
    if (!(v > 0.0) || v > 1.0 + 1e-12)
      throw std::domain_error("cylinder point: v must lie in (0, 1]");
    return CylinderPoint{wrap_unit_upper(u), std::min(v, 1.0)};
  }
};

/// F(r, phi) = (phi / 2pi, pi r^2).
inline CylinderPoint disk_to_cylinder(const DiskPoint& p) {
  if (!(p.r > 0.0)) throw std::domain_error("disk_to_cylinder: the center has no image");
  return CylinderPoint{wrap_unit_upper(p.phi / kTwoPi), kPi * p.r * p.r};
}

inline DiskPoint cylinder_to_disk(const CylinderPoint& p) noexcept {
  return DiskPoint{std::sqrt(p.v / kPi), wrap_angle_upper(kTwoPi * p.u)};
}

/// Reflection s_g(u, v) = (g - u, v); the image of the disk reflection in
/// the diameter phi = pi g.
inline CylinderPoint reflect_u(CirclePoint g, const CylinderPoint& p) noexcept {
  return CylinderPoint{wrap_unit_upper(g.value() - p.u), p.v};
}

/// Rotation (u, v) -> (u + h, v); the image of the disk rotation by 2pi h.
inline CylinderPoint rotate_u(CirclePoint h, const CylinderPoint& p) noexcept {
  return CylinderPoint{wrap_unit_upper(p.u + h.value()), p.v};
}

/// Reflection of the disk in the diameter at angle pi g.
inline DiskPoint reflect_disk(CirclePoint g, const DiskPoint& p) noexcept {
  return DiskPoint{p.r, wrap_angle_upper(kTwoPi * g.value() - p.phi)};
}

/// Rotation of the disk by angle 2pi h.
inline DiskPoint rotate_disk(CirclePoint h, const DiskPoint& p) noexcept {
  return DiskPoint{p.r, wrap_angle_upper(p.phi + kTwoPi * h.value())};
}

}  // namespace yinyang
