#pragma once

// Axiom checks for spiral curves.
//
//   A1  the curve splits the disk into congruent parts
//   A2  it crosses every concentric circle `parts` times
//   A3  it crosses every radius once (A3pp: twice)
//   A4  every part is perfect: mu(A ∩ s_g A) = 1/parts^2 for all g
//   A5  smoothness, checked only as a sampling sanity bound
//
// A4 is decided by the overlap profile
//
//   f(g) = ∫_0^1 lambda(A_v ∩ (g - A_v)) dv,
//
// with every fiber overlap exact and Simpson's rule in v. A Monte-Carlo
// estimate of the same quantity in the disk serves as an independent oracle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "yinyang/circle_set.hpp"
#include "yinyang/curves.hpp"
#include "yinyang/geometry.hpp"
#include "yinyang/quadrature.hpp"

namespace yinyang {

inline constexpr int kDefaultGGrid = 512;
inline constexpr int kDefaultVQuadrature = 100000;
inline constexpr double kClosedFormA4Tolerance = 1e-6;
inline constexpr double kTableA4Tolerance = 1e-4;
inline constexpr double kRotationTolerance = 1e-12;
inline constexpr int kRelationGrid = 10000;

/// f(g) sampled on g = i / grid, i = 0..grid-1.
struct SampledProfile {
  std::vector<double> g;
  std::vector<double> f;
  double target = 0.25;
  double max_dev = 0.0;
  double witness_g = 0.0;
  double mean = 0.0;
  int v_quadrature = 0;
};

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled by exactly one worker, so results written per index do not
/// depend on the thread count.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// Overlap profile of the dark part on a uniform g grid.
inline SampledProfile perfect_profile(const Curve& curve, int g_grid = kDefaultGGrid,
                                      int v_quadrature = kDefaultVQuadrature,
                                      unsigned threads = 0) {
  if (g_grid < 2) throw std::invalid_argument("perfect_profile: g_grid must be at least 2");
  if (v_quadrature < 2) throw std::invalid_argument("perfect_profile: v_quadrature must be at least 2");

  const QuadratureRule rule = simpson_rule(0.0, 1.0, v_quadrature);
  std::vector<Arc> fibers;
  fibers.reserve(rule.nodes.size());
  for (double v : rule.nodes) fibers.push_back(section_arc(curve, v));

  SampledProfile out;
  out.v_quadrature = static_cast<int>(rule.nodes.size()) - 1;
  out.target = 1.0 / (static_cast<double>(curve.parts()) * curve.parts());
  out.g.resize(static_cast<std::size_t>(g_grid));
  out.f.resize(static_cast<std::size_t>(g_grid));
  parallel_for(out.g.size(), threads, [&](std::size_t i) {
    const double g = static_cast<double>(i) / g_grid;
    const CirclePoint gp(g);
    double sum = 0.0;
    for (std::size_t j = 0; j < fibers.size(); ++j)
      sum += rule.weights[j] * arc_reflection_overlap(fibers[j], gp);
    out.g[i] = g;
    out.f[i] = sum;
  });

  for (std::size_t i = 0; i < out.f.size(); ++i) {
    const double dev = std::abs(out.f[i] - out.target);
    if (dev > out.max_dev) {
      out.max_dev = dev;
      out.witness_g = out.g[i];
    }
  }
  out.mean = std::accumulate(out.f.begin(), out.f.end(), 0.0) / static_cast<double>(out.f.size());
  return out;
}

/// f(g) at a single reflection axis, by the same quadrature as perfect_profile.
inline double profile_value(const Curve& curve, CirclePoint g, int v_quadrature = kDefaultVQuadrature) {
  const QuadratureRule rule = simpson_rule(0.0, 1.0, v_quadrature);
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    sum += rule.weights[j] * arc_reflection_overlap(section_arc(curve, rule.nodes[j]), g);
  return sum;
}

// ---------------------------------------------------------------------------
// Functional relations on alpha

enum class Relation { alal, mm, alalal, sigma, al3 };

inline std::string relation_id(Relation r) {
  switch (r) {
    case Relation::alal: return "eq_alal";
    case Relation::mm: return "eq_mm";
    case Relation::alalal: return "eq_alalal";
    case Relation::sigma: return "eq_sigma";
    case Relation::al3: return "eq_al3";
  }
  return "";
}

inline std::optional<Relation> relation_from_id(const std::string& id) {
  for (Relation r : {Relation::alal, Relation::mm, Relation::alalal, Relation::sigma, Relation::al3})
    if (relation_id(r) == id) return r;
  return std::nullopt;
}

/// Turn count a relation is stated for.
inline double relation_turns(Relation r) noexcept {
  switch (r) {
    case Relation::alal:
    case Relation::mm: return 1.0;
    case Relation::alalal:
    case Relation::sigma: return 2.0;
    case Relation::al3: return 1.5;
  }
  return 1.0;
}

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require_turns(const AlphaProfile& profile, double turns, const char* what) {
  if (std::abs(profile.turns() - turns) > 1e-12) {
    throw DomainError(std::string(what) + " requires a profile with turns = " +
                      std::to_string(turns) + ", got " + std::to_string(profile.turns()));
  }
}

/// Fiber measure m(u) of the transposed region, u in (0, 1], with
/// abar(u) = alpha(u/2):
///   m(u)       = abar(u) + 1 - abar(u + 1/2)   for u <= 1/2
///   m(u)       = abar(u) - abar(u - 1/2)       for u >  1/2
inline double m_function(const AlphaProfile& profile, double u) {
  require_turns(profile, 1.0, "m_function");
  if (!(u > 0.0 && u <= 1.0)) throw DomainError("m_function: u must lie in (0, 1]");
  auto abar = [&](double x) { return profile(0.5 * x); };
  if (u <= 0.5) return abar(u) + (1.0 - abar(u + 0.5));
  return abar(u) - abar(u - 0.5);
}

/// Supremum of |lhs - rhs| over a 10^4-point grid of the relation's domain.
inline double relation_residual(const AlphaProfile& profile, Relation relation) {
  require_turns(profile, relation_turns(relation), relation_id(relation).c_str());
  const AlphaProfile& a = profile;
  double worst = 0.0;
  // Grid u_i = i * span / N, i = 1..N, on (0, span].
  const double span = relation == Relation::mm ? 0.5 : 0.25;
  for (int i = 1; i <= kRelationGrid; ++i) {
    const double u = span * i / kRelationGrid;
    double r = 0.0;
    switch (relation) {
      case Relation::alal:
        r = a(u + 0.25) - a(u) - 0.5;
        break;
      case Relation::mm:
        r = m_function(a, u) - m_function(a, u + 0.5);
        break;
      case Relation::alalal:
        r = 0.5 + a(u) + a(u + 0.5) - a(u + 0.25) - a(u + 0.75);
        break;
      case Relation::sigma: {
        auto sigma = [&](double x) { return a(x + 0.25) - a(x); };
        r = sigma(u + 0.5) - (0.5 - sigma(u));
        break;
      }
      case Relation::al3:
        r = a(u) + a(u + 0.5) - a(u + 0.25) - 0.5;
        break;
    }
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

/// Relations stated for the profile's turn count.
inline std::vector<Relation> applicable_relations(const AlphaProfile& profile) {
  std::vector<Relation> out;
  for (Relation r : {Relation::alal, Relation::mm, Relation::alalal, Relation::sigma, Relation::al3})
    if (std::abs(profile.turns() - relation_turns(r)) <= 1e-12) out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Crossing counts

struct CrossingRange {
  int min = 0;
  int max = 0;
};

/// Number of times the branches cross a radius, minimised and maximised over
/// the radius direction. Branch i sweeps the angles (i/parts, i/parts + turns/2]
/// (in turns), so a ray at angle u0 meets it once per lift of u0 in that range.
inline CrossingRange radial_crossings(double turns, int parts) {
  std::vector<double> cuts;
  for (int i = 0; i < parts; ++i) {
    const double s = static_cast<double>(i) / parts;
    cuts.push_back(wrap_unit(s));
    cuts.push_back(wrap_unit(s + 0.5 * turns));
  }
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  CrossingRange out{std::numeric_limits<int>::max(), 0};
  for (std::size_t j = 1; j < cuts.size(); ++j) {
    if (cuts[j] - cuts[j - 1] < 1e-12) continue;
    const double u0 = 0.5 * (cuts[j] + cuts[j - 1]);
    int count = 0;
    for (int i = 0; i < parts; ++i) {
      const double s = static_cast<double>(i) / parts;
      count += static_cast<int>(std::floor(s + 0.5 * turns - u0) - std::floor(s - u0));
    }
    out.min = std::min(out.min, count);
    out.max = std::max(out.max, count);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rotations

struct RotationEntry {
  int p = 0;
  int q = 0;
  double integral = 0.0;
};

struct RotationReport {
  std::vector<RotationEntry> entries;
  double tolerance = kRotationTolerance;
  bool pass = true;
};

/// For every reduced p/q with 2 <= q <= q_max, the measure of the part of the
/// region invariant under rotation by p/q, integrated over v with Simpson's
/// rule. `sections` maps a height v to the section A_v.
inline RotationReport rotation_check(const std::function<CircleSet(double)>& sections, int q_max,
                                     int v_quadrature = kDefaultVQuadrature,
                                     double tolerance = kRotationTolerance) {
  if (q_max < 2) throw std::invalid_argument("rotation_check: q_max must be at least 2");
  const QuadratureRule rule = simpson_rule(0.0, 1.0, v_quadrature);
  std::vector<CircleSet> fibers;
  fibers.reserve(rule.nodes.size());
  for (double v : rule.nodes) fibers.push_back(sections(v));

  RotationReport out;
  out.tolerance = tolerance;
  for (int q = 2; q <= q_max; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      double sum = 0.0;
      for (std::size_t j = 0; j < fibers.size(); ++j)
        sum += rule.weights[j] * rotation_invariant_part(fibers[j], p, q).measure();
      out.entries.push_back({p, q, sum});
      if (!(sum <= tolerance)) out.pass = false;
    }
  }
  return out;
}

inline RotationReport rotation_check(const Curve& curve, int q_max,
                                     int v_quadrature = kDefaultVQuadrature,
                                     double tolerance = kRotationTolerance) {
  return rotation_check([&curve](double v) { return section(curve, v); }, q_max, v_quadrature,
                        tolerance);
}

// ---------------------------------------------------------------------------
// Monte-Carlo oracle

struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Uniform double in (0, 1) from the top 53 bits.
inline double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

}  // namespace detail

/// Estimates mu(A ∩ s_g A) by sampling the disk uniformly: r = sqrt(U / pi),
/// phi = 2 pi U'. Deterministic for a given seed.
inline OracleEstimate monte_carlo_overlap(const Curve& curve, CirclePoint g, std::int64_t samples,
                                          std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_overlap: samples must be positive");
  std::mt19937_64 rng(seed);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double r = std::sqrt(detail::open_unit(rng) / kPi);
    const double phi = kTwoPi * detail::open_unit(rng);
    const DiskPoint p{r, phi};
    if (contains(curve, p) && contains(curve, reflect_disk(g, p))) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double mean = static_cast<double>(hits) / n;
  // Sample variance of a 0/1 variable.
  const double var = samples > 1 ? mean * (1.0 - mean) * n / (n - 1.0) : 0.0;
  return OracleEstimate{mean, std::sqrt(var / n), samples, seed};
}

// ---------------------------------------------------------------------------
// Axioms

struct AxiomVerdict {
  bool pass = false;
  bool requested = false;
  std::string detail;
  /// Location of the worst case, when the check has one (g for A4).
  std::optional<double> witness;
  std::optional<double> value;
};

struct Tolerances {
  double a4 = kClosedFormA4Tolerance;
  double relation = 1e-12;
  double rotation = kRotationTolerance;
  double a5_turning = 0.5;
};

struct VerifyOptions {
  int g_grid = kDefaultGGrid;
  int v_quadrature = kDefaultVQuadrature;
  std::optional<double> a4_tolerance;
  /// 0 skips the rotation check.
  int q_max = 0;
  std::uint64_t seed = 0;
  /// 0 skips the Monte-Carlo spot check at the A4 witness.
  std::int64_t mc_samples = 0;
  std::vector<std::string> axioms{"A1", "A2", "A3", "A4"};
  unsigned threads = 0;
};

inline const std::vector<std::string>& known_axioms() {
  static const std::vector<std::string> ids{"A1", "A2", "A3", "A3pp", "A4", "A5"};
  return ids;
}

struct VerifyReport {
  CurveSpec spec;
  std::map<std::string, AxiomVerdict> axioms;
  SampledProfile profile;
  std::map<std::string, double> residuals;
  Tolerances tolerances;
  std::optional<RotationReport> rotation;
  std::optional<OracleEstimate> oracle;
  std::optional<double> oracle_g;
  std::uint64_t seed = 0;
  /// The flat target 1/parts^2 for parts > 2 comes from the averaging
  /// argument, not from a proven lemma.
  bool a4_target_conjectural = false;

  /// True iff every requested axiom passes and the rotation check, when run,
  /// passes.
  bool passed() const {
    for (const auto& [id, v] : axioms)
      if (v.requested && !v.pass) return false;
    if (rotation && !rotation->pass) return false;
    return true;
  }
};

inline VerifyReport check_axioms(const CurveSpec& spec, const VerifyOptions& opt = {}) {
  for (const auto& id : opt.axioms) {
    if (std::find(known_axioms().begin(), known_axioms().end(), id) == known_axioms().end())
      throw std::invalid_argument("unknown axiom id: " + id);
  }
  const Curve curve(spec);
  const AlphaProfile& alpha = curve.alpha();

  VerifyReport rep;
  rep.spec = curve.spec();
  rep.seed = opt.seed;
  rep.a4_target_conjectural = curve.parts() > 2;
  rep.tolerances.a4 = opt.a4_tolerance.value_or(alpha.is_closed_form() ? kClosedFormA4Tolerance
                                                                       : kTableA4Tolerance);
  auto requested = [&](const std::string& id) {
    return std::find(opt.axioms.begin(), opt.axioms.end(), id) != opt.axioms.end();
  };

  {
    AxiomVerdict v;
    v.pass = true;
    v.detail = "structural: branch i is branch 0 rotated by i/" + std::to_string(curve.parts()) +
               " of a turn, so the parts are congruent by construction";
    rep.axioms["A1"] = v;
  }

  {
    AxiomVerdict v;
    constexpr int kGrid = 10000;
    bool monotone = true;
    double prev = alpha(0.0);
    double at_zero = prev;
    for (int i = 1; i <= kGrid && monotone; ++i) {
      const double u = alpha.domain_end() * i / kGrid;
      const double cur = alpha(u);
      if (!(cur > prev)) {
        monotone = false;
        v.witness = u;
      }
      prev = cur;
    }
    const bool ends = std::abs(at_zero) <= 1e-12 && std::abs(prev - 1.0) <= 1e-12;
    v.pass = monotone && ends;
    v.value = curve.parts();
    v.detail = v.pass ? "alpha strictly increasing from 0 to 1: each concentric circle is crossed " +
                            std::to_string(curve.parts()) + " times"
                      : (monotone ? "alpha does not run from 0 to 1" : "alpha not strictly increasing");
    rep.axioms["A2"] = v;
  }

  {
    const CrossingRange c = radial_crossings(alpha.turns(), curve.parts());
    const std::string counts = "radial crossings between " + std::to_string(c.min) + " and " +
                               std::to_string(c.max);
    AxiomVerdict a3;
    a3.pass = c.min == 1 && c.max == 1;
    a3.value = c.max;
    a3.detail = counts;
    rep.axioms["A3"] = a3;
    AxiomVerdict a3pp;
    a3pp.pass = c.min == 2 && c.max == 2;
    a3pp.value = c.max;
    a3pp.detail = counts;
    rep.axioms["A3pp"] = a3pp;
  }

  rep.profile = perfect_profile(curve, opt.g_grid, opt.v_quadrature, opt.threads);
  {
    AxiomVerdict v;
    v.pass = rep.profile.max_dev <= rep.tolerances.a4;
    v.witness = rep.profile.witness_g;
    v.value = rep.profile.max_dev;
    v.detail = "max |f(g) - " + std::to_string(rep.profile.target) + "| over " +
               std::to_string(opt.g_grid) + " values of g";
    if (rep.a4_target_conjectural) v.detail += " (target for parts > 2 is not a proven bound)";
    rep.axioms["A4"] = v;
  }

  {
    AxiomVerdict v;
    double worst = 0.0;
    for (const auto& b : beta_polyline(curve, 4096)) worst = std::max(worst, max_turning_angle(b));
    v.value = worst;
    v.pass = worst <= rep.tolerances.a5_turning;
    v.detail = "sampling sanity only: max turning angle between consecutive chords (rad)";
    rep.axioms["A5"] = v;
  }

  for (auto& [id, v] : rep.axioms) v.requested = requested(id);

  for (Relation r : applicable_relations(alpha)) rep.residuals[relation_id(r)] = relation_residual(alpha, r);

  if (opt.q_max >= 2) rep.rotation = rotation_check(curve, opt.q_max, opt.v_quadrature);
  if (opt.mc_samples > 0) {
    rep.oracle_g = rep.profile.witness_g;
    rep.oracle = monte_carlo_overlap(curve, CirclePoint(rep.profile.witness_g), opt.mc_samples, opt.seed);
  }
  return rep;
}

}  // namespace yinyang
