#pragma once

// Finite unions of half-open arcs on S^1 = R/Z.
//
// A CircleSet is stored as sorted, pairwise disjoint, non-adjacent intervals
// [lo, hi) with 0 <= lo < hi <= 1. An arc crossing the wrap point is kept as
// two intervals, [s, 1) and [0, e), which is the canonical form. Single points
// carry no measure and are never represented.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "yinyang/geometry.hpp"

namespace yinyang {

/// Absolute tolerance for endpoint comparisons in the set algebra. Endpoints
/// closer than this are merged, intervals shorter than this are dropped.
inline constexpr double kSetEps = 1e-12;

/// Half-open arc [start, start + length) on the circle, 0 < length <= 1.
struct Arc {
  CirclePoint start;
  double length = 0.0;
};

class CircleSet {
 public:
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const noexcept { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  CircleSet() = default;

  static CircleSet full() { return CircleSet(std::vector<Interval>{{0.0, 1.0}}); }

  static CircleSet arc(double start, double length) {
    const Arc a{CirclePoint(start), length};
    return normalize(std::span<const Arc>(&a, 1));
  }

  /// Canonical form of an arbitrary list of arcs. Arcs with length >= 1 cover
  /// the whole circle; non-positive lengths are ignored.
  static CircleSet normalize(std::span<const Arc> arcs) {
    std::vector<Interval> raw;
    raw.reserve(arcs.size() * 2);
    for (const Arc& a : arcs) {
      if (!(a.length > 0.0)) continue;
      if (a.length >= 1.0) return full();
      push_wrapped(raw, a.start.value(), a.start.value() + a.length);
    }
    return CircleSet(std::move(raw));
  }

  static CircleSet normalize(std::initializer_list<Arc> arcs) {
    return normalize(std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(intervals_.size());
    for (const Interval& i : intervals_) out.push_back(Arc{CirclePoint(i.lo), i.length()});
    return out;
  }

  bool empty() const noexcept { return intervals_.empty(); }

  double measure() const noexcept {
    double m = 0.0;
    for (const Interval& i : intervals_) m += i.length();
    return m;
  }

  bool contains(double x) const noexcept {
    const double y = wrap_unit(x);
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), y,
                               [](double val, const Interval& i) { return val < i.lo; });
    if (it == intervals_.begin()) return false;
    --it;
    return y < it->hi;
  }

  // Endpoints compare at the set tolerance, so arithmetic round-off does not split equal sets.
  friend bool operator==(const CircleSet& a, const CircleSet& b) noexcept {
    if (a.intervals_.size() != b.intervals_.size()) return false;
    for (std::size_t i = 0; i < a.intervals_.size(); ++i) {
      if (std::abs(a.intervals_[i].lo - b.intervals_[i].lo) > kSetEps) return false;
      if (std::abs(a.intervals_[i].hi - b.intervals_[i].hi) > kSetEps) return false;
    }
    return true;
  }

  friend CircleSet intersect(const CircleSet& a, const CircleSet& b);
  friend CircleSet complement(const CircleSet& s);
  friend CircleSet translate(const CircleSet& s, CirclePoint h);
  friend CircleSet reflect(const CircleSet& s, CirclePoint g);

 private:
  explicit CircleSet(std::vector<Interval> raw) : intervals_(canonical(std::move(raw))) {}

  // Appends [lo, hi) taken mod 1, splitting at the wrap point. Requires
  // 0 <= lo < 1 and hi - lo < 1.
  static void push_wrapped(std::vector<Interval>& out, double lo, double hi) {
    if (hi <= 1.0) {
      out.push_back({lo, hi});
    } else {
      out.push_back({lo, 1.0});
      out.push_back({0.0, hi - 1.0});
    }
  }

  static std::vector<Interval> canonical(std::vector<Interval> raw) {
    for (Interval& i : raw) {
      if (i.lo < kSetEps) i.lo = 0.0;
      if (i.hi > 1.0 - kSetEps) i.hi = 1.0;
    }
    std::erase_if(raw, [](const Interval& i) { return !(i.hi - i.lo > kSetEps); });
    std::sort(raw.begin(), raw.end(), [](const Interval& x, const Interval& y) {
      return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    });
    std::vector<Interval> out;
    out.reserve(raw.size());
    for (const Interval& i : raw) {
      if (!out.empty() && i.lo <= out.back().hi + kSetEps) {
        out.back().hi = std::max(out.back().hi, i.hi);
      } else {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<Interval> intervals_;
};

inline CircleSet intersect(const CircleSet& a, const CircleSet& b) {
  std::vector<CircleSet::Interval> out;
  const auto& x = a.intervals_;
  const auto& y = b.intervals_;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].lo, y[j].lo);
    const double hi = std::min(x[i].hi, y[j].hi);
    if (hi > lo) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) ++i; else ++j;
  }
  return CircleSet(std::move(out));
}

inline CircleSet complement(const CircleSet& s) {
  std::vector<CircleSet::Interval> out;
  double cursor = 0.0;
  for (const auto& i : s.intervals_) {
    if (i.lo > cursor) out.push_back({cursor, i.lo});
    cursor = i.hi;
  }
  if (cursor < 1.0) out.push_back({cursor, 1.0});
  return CircleSet(std::move(out));
}

/// {x + h : x in s}.
inline CircleSet translate(const CircleSet& s, CirclePoint h) {
  std::vector<CircleSet::Interval> out;
  out.reserve(s.intervals_.size() + 1);
  for (const auto& i : s.intervals_) {
    if (i.lo == 0.0 && i.hi == 1.0) return CircleSet::full();
    const double lo = wrap_unit(i.lo + h.value());
    CircleSet::push_wrapped(out, lo, lo + i.length());
  }
  return CircleSet(std::move(out));
}

/// {g - x : x in s}. [lo, hi) maps to (g - hi, g - lo], stored as
/// [g - hi, g - lo); the endpoints differ by a null set.
inline CircleSet reflect(const CircleSet& s, CirclePoint g) {
  std::vector<CircleSet::Interval> out;
  out.reserve(s.intervals_.size() + 1);
  for (const auto& i : s.intervals_) {
    if (i.lo == 0.0 && i.hi == 1.0) return CircleSet::full();
    const double lo = wrap_unit(g.value() - i.hi);
    CircleSet::push_wrapped(out, lo, lo + i.length());
  }
  return CircleSet(std::move(out));
}

/// lambda(S ∩ (g - S)): measure of the largest subset of S fixed by the
/// reflection x -> g - x. Computed through the set operations.
inline double reflection_overlap(const CircleSet& s, CirclePoint g) {
  return intersect(s, reflect(s, g)).measure();
}

namespace detail {

// lambda([a, b) ∩ (g - [c, d))) on the circle, with all endpoints in [0, 1].
// As a function of g this is the periodized trapezoid chi_[a,b) * chi_[c,d),
// with kinks at the four endpoint sums.
inline double interval_pair_overlap(double a, double b, double c, double d, double g) noexcept {
  double total = 0.0;
  for (int n = -1; n <= 2; ++n) {
    const double shifted = g + n;
    const double len = std::min(b, shifted - c) - std::max(a, shifted - d);
    if (len > 0.0) total += len;
  }
  return total;
}

}  // namespace detail

/// Closed-form reflection overlap of a single arc: the periodized triangle
/// chi_A * chi_A evaluated at g. Agrees with reflection_overlap(arc, g).
inline double arc_reflection_overlap(const Arc& arc, CirclePoint g) noexcept {
  if (arc.length >= 1.0) return 1.0;
  // Translating the arc by a moves the reflection centre by 2a.
  const double x = wrap_unit(g.value() - 2.0 * arc.start.value());
  return detail::interval_pair_overlap(0.0, arc.length, 0.0, arc.length, x);
}

/// f(g) = lambda(S ∩ (g - S)) as an exact piecewise-linear function of g on
/// [0, 1], with f(1) = f(0).
class OverlapProfile {
 public:
  OverlapProfile(std::vector<double> breakpoints, std::vector<double> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {}

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double operator()(CirclePoint g) const noexcept {
    const double x = g.value();
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.end()) return values_.back();
    const std::size_t hi = static_cast<std::size_t>(it - breakpoints_.begin());
    const std::size_t lo = hi - 1;
    const double w = breakpoints_[hi] - breakpoints_[lo];
    const double t = w > 0.0 ? (x - breakpoints_[lo]) / w : 0.0;
    return values_[lo] + t * (values_[hi] - values_[lo]);
  }

  /// Exact integral over the circle (trapezoid rule on the breakpoints).
  double integral() const noexcept {
    double sum = 0.0;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
      sum += 0.5 * (breakpoints_[i] - breakpoints_[i - 1]) * (values_[i] + values_[i - 1]);
    return sum;
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Exact overlap profile from the pairwise interval convolutions.
inline OverlapProfile overlap_profile(const CircleSet& s) {
  const auto& iv = s.intervals();
  std::vector<double> bps{0.0, 1.0};
  for (const auto& x : iv)
    for (const auto& y : iv)
      for (double p : {x.lo, x.hi})
        for (double q : {y.lo, y.hi}) bps.push_back(wrap_unit(p + q));
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<double> values;
  values.reserve(bps.size());
  for (double g : bps) {
    double f = 0.0;
    for (const auto& x : iv)
      for (const auto& y : iv) f += detail::interval_pair_overlap(x.lo, x.hi, y.lo, y.hi, g);
    values.push_back(f);
  }
  return OverlapProfile(std::move(bps), std::move(values));
}

/// Average of f over the circle; equals measure(S)^2 for every S.
inline double mean_overlap(const CircleSet& s) { return overlap_profile(s).integral(); }

struct OverlapMaximum {
  CirclePoint g;
  double value = 0.0;
};

/// Maximum of f, attained at a breakpoint. Requires 0 < measure(S) < 1.
inline OverlapMaximum max_overlap(const CircleSet& s) {
  const double m = s.measure();
  if (m <= kSetEps || m >= 1.0 - kSetEps)
    throw std::domain_error("max_overlap: requires 0 < measure(S) < 1");
  const OverlapProfile prof = overlap_profile(s);
  const auto& vals = prof.values();
  const auto it = std::max_element(vals.begin(), vals.end());
  const auto idx = static_cast<std::size_t>(it - vals.begin());
  return OverlapMaximum{CirclePoint(prof.breakpoints()[idx]), *it};
}

/// Largest subset of S invariant under rotation by p/q:
/// the intersection of S + n p/q over n = 0..q-1.
inline CircleSet rotation_invariant_part(const CircleSet& s, int p, int q) {
  if (q < 2) throw std::invalid_argument("rotation_invariant_part: q must be at least 2");
  if (p <= 0 || p >= q || std::gcd(p, q) != 1)
    throw std::invalid_argument("rotation_invariant_part: need 0 < p < q with gcd(p, q) = 1");
  CircleSet out = s;
  for (int n = 1; n < q && !out.empty(); ++n) {
    out = intersect(out, translate(s, CirclePoint(static_cast<double>(n) * p / q)));
  }
  return out;
}

}  // namespace yinyang
