#pragma once

// Spiral curves described through their alpha profile: the image of one
// branch under (r, phi) -> (phi / 2pi, pi r^2) is the graph v = alpha(u),
// u in (0, turns / 2], with alpha increasing from 0 to 1. The remaining
// branches are rotations by 1/parts of a turn, and the section of the
// dark part at height v is the arc [alpha^-1(v), alpha^-1(v) + 1/parts).

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yinyang/circle_set.hpp"
#include "yinyang/geometry.hpp"

namespace yinyang {

enum class Family { fermat, sine_variant, ck_variant, custom };

inline std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::fermat: return "fermat";
    case Family::sine_variant: return "sine";
    case Family::ck_variant: return "ck";
    case Family::custom: return "custom";
  }
  return "fermat";
}

inline std::optional<Family> family_from_string(std::string_view s) noexcept {
  if (s == "fermat") return Family::fermat;
  if (s == "sine" || s == "sine_variant") return Family::sine_variant;
  if (s == "ck" || s == "ck_variant") return Family::ck_variant;
  if (s == "custom") return Family::custom;
  return std::nullopt;
}

/// Invalid curve parameters. When the failure is located at a specific
/// abscissa (a monotonicity violation), witness_u holds it.
class ProfileError : public std::invalid_argument {
 public:
  explicit ProfileError(const std::string& what, std::optional<double> witness_u = std::nullopt)
      : std::invalid_argument(what), witness_u_(witness_u) {}
  std::optional<double> witness_u() const noexcept { return witness_u_; }

 private:
  std::optional<double> witness_u_;
};

/// Declarative description of a curve family instance.
struct CurveSpec {
  Family family = Family::fermat;
  double turns = 1.0;
  double lambda = 0.0;
  int k = 0;
  int parts = 2;
  /// (u, v) table for Family::custom.
  std::vector<std::array<double, 2>> samples;
};

namespace detail {

struct FermatAlpha {
  double turns;
  double eval(double u) const noexcept { return 2.0 * u / turns; }
  double inverse(double v) const noexcept { return 0.5 * turns * v; }
};

struct SineAlpha {
  double lambda;
  double eval(double u) const noexcept {
    return 2.0 * u + lambda / kPi * std::sin(8.0 * kPi * u);
  }
};

// f1(u) = 2u + lambda u^(k+1) (1/4 - u)^(k+1) on [0, 1/4],
// f2(u) = 1/2 + f1(u - 1/4) on [1/4, 1/2].
struct CkAlpha {
  double lambda;
  int k;
  double f1(double u) const noexcept {
    const double bump = std::pow(u * (0.25 - u), k + 1);
    return 2.0 * u + lambda * bump;
  }
  double df1(double u) const noexcept {
    return 2.0 + lambda * (k + 1) * std::pow(u * (0.25 - u), k) * (0.25 - 2.0 * u);
  }
  double eval(double u) const noexcept { return u <= 0.25 ? f1(u) : 0.5 + f1(u - 0.25); }
};

struct TableAlpha {
  std::vector<double> us;
  std::vector<double> vs;

  static double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
  }
  double eval(double u) const { return interp(us, vs, u); }
  double inverse(double v) const { return interp(vs, us, v); }
};

}  // namespace detail

/// The monotone function alpha of one spiral branch.
class AlphaProfile {
 public:
  static AlphaProfile fermat(double turns) {
    if (!(turns > 0.0) || !std::isfinite(turns))
      throw ProfileError("fermat: turns must be positive");
    return AlphaProfile(Family::fermat, turns, detail::FermatAlpha{turns});
  }

  static AlphaProfile sine_variant(double lambda) {
    if (!(lambda > 0.0 && lambda < 0.25))
      throw ProfileError("sine variant: lambda must lie in (0, 1/4)");
    return AlphaProfile(Family::sine_variant, 1.0, detail::SineAlpha{lambda});
  }

  /// Validates f1' > 0 on a uniform 10^4-interval grid of [0, 1/4]; the
  /// first failing abscissa is reported as the witness.
  static AlphaProfile ck_variant(double lambda, int k) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw ProfileError("ck variant: lambda must be positive");
    if (k < 0) throw ProfileError("ck variant: k must be non-negative");
    const detail::CkAlpha a{lambda, k};
    constexpr int kGrid = 10000;
    for (int i = 0; i <= kGrid; ++i) {
      const double u = 0.25 * i / kGrid;
      if (!(a.df1(u) > 0.0)) {
        throw ProfileError("ck variant: f1' is not positive at u = " + std::to_string(u) +
                               "; lambda too large for k = " + std::to_string(k),
                           u);
      }
    }
    return AlphaProfile(Family::ck_variant, 1.0, a);
  }

  /// Piecewise-linear profile through (u, v) samples. The table must start
  /// at (0, 0), end at v = 1, and be strictly increasing in both columns;
  /// the turn count is twice the last abscissa.
  static AlphaProfile table(const std::vector<std::array<double, 2>>& samples) {
    if (samples.size() < 2) throw ProfileError("custom profile: need at least two samples");
    detail::TableAlpha t;
    t.us.reserve(samples.size());
    t.vs.reserve(samples.size());
    for (const auto& s : samples) {
      if (!std::isfinite(s[0]) || !std::isfinite(s[1]))
        throw ProfileError("custom profile: non-finite sample");
      t.us.push_back(s[0]);
      t.vs.push_back(s[1]);
    }
    if (std::abs(t.us.front()) > 1e-12 || std::abs(t.vs.front()) > 1e-12)
      throw ProfileError("custom profile: first sample must be (0, 0)");
    if (std::abs(t.vs.back() - 1.0) > 1e-12)
      throw ProfileError("custom profile: last sample must have v = 1");
    t.us.front() = 0.0;
    t.vs.front() = 0.0;
    t.vs.back() = 1.0;
    for (std::size_t i = 1; i < t.us.size(); ++i) {
      if (!(t.us[i] > t.us[i - 1]))
        throw ProfileError("custom profile: u not strictly increasing", t.us[i]);
      if (!(t.vs[i] > t.vs[i - 1]))
        throw ProfileError("custom profile: alpha not strictly increasing", t.us[i]);
    }
    const double turns = 2.0 * t.us.back();
    return AlphaProfile(Family::custom, turns, std::move(t));
  }

  Family family() const noexcept { return family_; }
  double turns() const noexcept { return turns_; }
  double domain_end() const noexcept { return 0.5 * turns_; }
  bool is_closed_form() const noexcept { return family_ != Family::custom; }

  double operator()(double u) const {
    return std::visit([u](const auto& a) { return a.eval(u); }, impl_);
  }

  /// The unique u in [0, domain_end] with alpha(u) = v; v is clamped to [0, 1].
  double inverse(double v) const {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return domain_end();
    return std::visit(
        [this, v](const auto& a) -> double {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, detail::FermatAlpha> ||
                        std::is_same_v<T, detail::TableAlpha>) {
            return a.inverse(v);
          } else {
            return bisect(a, v);
          }
        },
        impl_);
  }

 private:
  using Impl = std::variant<detail::FermatAlpha, detail::SineAlpha, detail::CkAlpha,
                            detail::TableAlpha>;

  AlphaProfile(Family family, double turns, Impl impl)
      : family_(family), turns_(turns), impl_(std::move(impl)) {}

  template <class A>
  double bisect(const A& a, double v) const {
    double lo = 0.0;
    double hi = domain_end();
    // Bracket halves until it stops shrinking in double precision.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (a.eval(mid) < v) lo = mid; else hi = mid;
    }
    return std::abs(a.eval(lo) - v) <= std::abs(a.eval(hi) - v) ? lo : hi;
  }

  Family family_;
  double turns_;
  Impl impl_;
};

inline AlphaProfile make_fermat(double turns) { return AlphaProfile::fermat(turns); }
inline AlphaProfile make_sine_variant(double lambda) { return AlphaProfile::sine_variant(lambda); }
inline AlphaProfile make_ck_variant(double lambda, int k) { return AlphaProfile::ck_variant(lambda, k); }

inline AlphaProfile make_profile(const CurveSpec& spec) {
  switch (spec.family) {
    case Family::fermat: return make_fermat(spec.turns);
    case Family::sine_variant: return make_sine_variant(spec.lambda);
    case Family::ck_variant: return make_ck_variant(spec.lambda, spec.k);
    case Family::custom: return AlphaProfile::table(spec.samples);
  }
  throw ProfileError("unknown family");
}

/// A validated spec together with its profile.
class Curve {
 public:
  explicit Curve(CurveSpec spec) : spec_(std::move(spec)), alpha_(make_profile(spec_)) {
    if (spec_.parts < 2) throw ProfileError("parts must be at least 2");
    if ((spec_.family == Family::sine_variant || spec_.family == Family::ck_variant) &&
        spec_.turns != 1.0)
      throw ProfileError(std::string(to_string(spec_.family)) + " variant is a one-turn curve");
    spec_.turns = alpha_.turns();
  }

  const CurveSpec& spec() const noexcept { return spec_; }
  const AlphaProfile& alpha() const noexcept { return alpha_; }
  int parts() const noexcept { return spec_.parts; }
  double part_width() const noexcept { return 1.0 / spec_.parts; }

 private:
  CurveSpec spec_;
  AlphaProfile alpha_;
};

inline double alpha_inverse(const AlphaProfile& profile, double v) { return profile.inverse(v); }

/// Section A_v as a single arc.
inline Arc section_arc(const Curve& curve, double v) {
  return Arc{CirclePoint(curve.alpha().inverse(v)), curve.part_width()};
}

/// Section A_v = [alpha^-1(v), alpha^-1(v) + 1/parts) as a canonical set.
inline CircleSet section(const Curve& curve, double v) {
  const Arc a = section_arc(curve, v);
  return CircleSet::normalize({a});
}

/// Whether p lies in the dark part (the part whose sections start at the
/// first branch).
inline bool contains(const Curve& curve, const DiskPoint& p) {
  const CylinderPoint c = disk_to_cylinder(p);
  const double start = curve.alpha().inverse(c.v);
  return wrap_unit(c.u - start) < curve.part_width();
}

/// Sampled branches of the curve in the disk, n points per branch from just
/// off the centre out to the rim. Branch i is branch 0 rotated by i/parts
/// of a turn.
inline std::vector<std::vector<DiskPoint>> beta_polyline(const Curve& curve, int n) {
  if (n < 2) throw std::invalid_argument("beta_polyline: n must be at least 2");
  const AlphaProfile& alpha = curve.alpha();
  std::vector<std::vector<DiskPoint>> branches(static_cast<std::size_t>(curve.parts()));
  auto& first = branches[0];
  first.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const double u = alpha.domain_end() * j / n;
    const double v = std::min(alpha(u), 1.0);
    first.push_back(DiskPoint{std::sqrt(v / kPi), wrap_angle_upper(kTwoPi * u)});
  }
  for (int i = 1; i < curve.parts(); ++i) {
    const CirclePoint h(static_cast<double>(i) / curve.parts());
    auto& b = branches[static_cast<std::size_t>(i)];
    b.reserve(first.size());
    for (const DiskPoint& p : first) b.push_back(rotate_disk(h, p));
  }
  return branches;
}

/// Largest angle between consecutive chords of a sampled branch, radians.
inline double max_turning_angle(const std::vector<DiskPoint>& branch) {
  double worst = 0.0;
  for (std::size_t i = 2; i < branch.size(); ++i) {
    const double ax = branch[i - 1].x() - branch[i - 2].x();
    const double ay = branch[i - 1].y() - branch[i - 2].y();
    const double bx = branch[i].x() - branch[i - 1].x();
    const double by = branch[i].y() - branch[i - 1].y();
    const double angle = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    worst = std::max(worst, std::abs(angle));
  }
  return worst;
}

}  // namespace yinyang
