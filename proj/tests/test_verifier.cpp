#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "yinyang/json_io.hpp"
#include "yinyang/verifier.hpp"

namespace {

using namespace yinyang;

// Unit-test grids are coarser than the defaults; the acceptance binary uses
// the full settings.
constexpr int kG = 128;
constexpr int kV = 20000;

CurveSpec fermat_spec(double turns = 1.0, int parts = 2) {
  CurveSpec s;
  s.turns = turns;
  s.parts = parts;
  return s;
}

CurveSpec sine_spec(double lambda) {
  CurveSpec s;
  s.family = Family::sine_variant;
  s.lambda = lambda;
  return s;
}

CurveSpec table_spec(double (*alpha)(double), int n = 4000) {
  CurveSpec s;
  s.family = Family::custom;
  for (int i = 0; i <= n; ++i) {
    const double u = 0.5 * i / n;
    s.samples.push_back({u, alpha(u)});
  }
  s.samples.back()[1] = 1.0;
  return s;
}

double quadratic(double u) { return 4.0 * u * u; }
// Monotone, alpha(1/2) = 1, but alpha(u + 1/4) - alpha(u) = 1/2 - 0.1 sin 4 pi u.
double half_wave(double u) { return 2.0 * u + 0.05 * std::sin(4.0 * kPi * u); }
// Period 1/4 wobble: satisfies the quarter-shift relation.
double quarter_wave(double u) { return 2.0 * u + 0.05 * std::sin(8.0 * kPi * u); }

TEST(PerfectProfile, FermatIsFlat) {
  const SampledProfile p = perfect_profile(Curve(fermat_spec()), kG, kV);
  EXPECT_EQ(p.g.size(), static_cast<std::size_t>(kG));
  EXPECT_EQ(p.target, 0.25);
  EXPECT_LE(p.max_dev, 1e-6);
}

TEST(PerfectProfile, SineAndCkAreFlat) {
  for (double l : {0.05, 0.1, 0.2}) EXPECT_LE(perfect_profile(Curve(sine_spec(l)), kG, kV).max_dev, 1e-6);
  for (auto [lambda, k] : {std::pair{4.0, 0}, {300.0, 1}, {20000.0, 2}}) {
    CurveSpec s;
    s.family = Family::ck_variant;
    s.lambda = lambda;
    s.k = k;
    EXPECT_LE(perfect_profile(Curve(s), kG, kV).max_dev, 1e-6);
  }
}

// Cylinder grid brute force and a 10^7-sample disk estimate both put the
// extremes at g = 1/4 (5/16) and g = 3/4 (3/16).
TEST(PerfectProfile, QuadraticCounterexample) {
  const Curve c(table_spec(quadratic));
  const SampledProfile p = perfect_profile(c, kG, kV);
  EXPECT_GE(p.max_dev, 1e-2);
  EXPECT_NEAR(p.max_dev, 0.0625, 1e-4);
  EXPECT_TRUE(std::abs(p.witness_g - 0.25) < 1e-9 || std::abs(p.witness_g - 0.75) < 1e-9);
  EXPECT_NEAR(profile_value(c, CirclePoint(0.25), kV), 0.3125, 1e-4);
  EXPECT_NEAR(profile_value(c, CirclePoint(0.75), kV), 0.1875, 1e-4);
}

TEST(PerfectProfile, ThreadCountDoesNotChangeResult) {
  const Curve c(sine_spec(0.2));
  const SampledProfile a = perfect_profile(c, 64, 4000, 1);
  const SampledProfile b = perfect_profile(c, 64, 4000, 4);
  EXPECT_EQ(a.f, b.f);
  EXPECT_EQ(a.max_dev, b.max_dev);
}

TEST(PerfectProfile, RejectsTinyGrids) {
  const Curve c(fermat_spec());
  EXPECT_THROW(perfect_profile(c, 1, kV), std::invalid_argument);
  EXPECT_THROW(perfect_profile(c, kG, 1), std::invalid_argument);
}

TEST(PerfectProfile, AveragesToSquaredPartMeasure) {
  for (int parts : {2, 3, 4}) {
    const SampledProfile p = perfect_profile(Curve(fermat_spec(1.0, parts)), kG, kV);
    EXPECT_NEAR(p.mean, 1.0 / (parts * parts), 1e-9);
  }
  EXPECT_NEAR(perfect_profile(Curve(table_spec(quadratic)), kG, kV).mean, 0.25, 1e-9);
  EXPECT_NEAR(perfect_profile(Curve(fermat_spec(1.5)), kG, kV).mean, 0.25, 1e-9);
}

TEST(PerfectProfile, FlatIffQuarterShiftRelation) {
  const std::vector<CurveSpec> specs{fermat_spec(), sine_spec(0.1), table_spec(quarter_wave),
                                     table_spec(quadratic), table_spec(half_wave)};
  int flat = 0, bent = 0;
  for (const CurveSpec& s : specs) {
    const Curve c(s);
    const bool relation = relation_residual(c.alpha(), Relation::alal) <= 1e-9;
    const bool profile_flat = perfect_profile(c, kG, kV).max_dev <= kTableA4Tolerance;
    EXPECT_EQ(relation, profile_flat) << to_string(s.family);
    (profile_flat ? flat : bent)++;
  }
  EXPECT_EQ(flat, 3);
  EXPECT_EQ(bent, 2);
}

TEST(Relations, FermatResidualsVanish) {
  EXPECT_LE(relation_residual(make_fermat(1.0), Relation::alal), 1e-12);
  EXPECT_LE(relation_residual(make_fermat(1.0), Relation::mm), 1e-12);
  EXPECT_LE(relation_residual(make_fermat(2.0), Relation::sigma), 1e-12);
  EXPECT_LE(relation_residual(make_fermat(2.0), Relation::alalal), 1e-12);
  EXPECT_GT(relation_residual(make_fermat(1.5), Relation::al3), 0.1);
}

TEST(Relations, DomainMismatchNamesRequiredTurns) {
  try {
    relation_residual(make_fermat(2.0), Relation::alal);
    FAIL() << "expected a domain error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find('1'), std::string::npos);
  }
  EXPECT_THROW(relation_residual(make_fermat(1.0), Relation::sigma), DomainError);
  EXPECT_THROW(relation_residual(make_fermat(1.0), Relation::al3), DomainError);
  EXPECT_THROW(relation_residual(make_fermat(1.5), Relation::alalal), DomainError);
}

TEST(Relations, IdsRoundTrip) {
  for (Relation r : {Relation::alal, Relation::mm, Relation::alalal, Relation::sigma, Relation::al3})
    EXPECT_EQ(relation_from_id(relation_id(r)), r);
  EXPECT_EQ(relation_id(Relation::alal), "eq_alal");
  EXPECT_FALSE(relation_from_id("eq_nope").has_value());
}

TEST(MFunction, FermatIsConstantHalf) {
  const AlphaProfile a = make_fermat(1.0);
  for (int i = 1; i <= 1000; ++i) EXPECT_NEAR(m_function(a, i / 1000.0), 0.5, 1e-12);
  EXPECT_NEAR(m_function(a, 0.3), m_function(a, 0.8), 1e-12);
  EXPECT_THROW(m_function(a, 0.0), std::domain_error);
  EXPECT_THROW(m_function(a, 1.5), std::domain_error);
  EXPECT_THROW(m_function(make_fermat(2.0), 0.5), DomainError);
}

TEST(MFunction, HalfPeriodicExactlyWhenQuarterShiftHolds) {
  const AlphaProfile s = make_sine_variant(0.1);
  for (int i = 1; i <= 1000; ++i) {
    const double u = 0.5 * i / 1000;
    EXPECT_NEAR(m_function(s, u), m_function(s, u + 0.5), 1e-12);
  }
  for (auto fn : {quadratic, half_wave, quarter_wave}) {
    const Curve c(table_spec(fn));
    const bool alal = relation_residual(c.alpha(), Relation::alal) <= 1e-12;
    const bool mm = relation_residual(c.alpha(), Relation::mm) <= 1e-12;
    EXPECT_EQ(alal, mm);
  }
}

TEST(RadialCrossings, CountsPerTurnsAndParts) {
  const CrossingRange one = radial_crossings(1.0, 2);
  EXPECT_EQ(one.min, 1);
  EXPECT_EQ(one.max, 1);
  const CrossingRange two = radial_crossings(2.0, 2);
  EXPECT_EQ(two.min, 2);
  EXPECT_EQ(two.max, 2);
  const CrossingRange three_halves = radial_crossings(1.5, 2);
  EXPECT_EQ(three_halves.min, 1);
  EXPECT_EQ(three_halves.max, 2);
}

TEST(CheckAxioms, FermatOneTurn) {
  VerifyOptions o;
  o.g_grid = kG;
  o.v_quadrature = kV;
  const VerifyReport r = check_axioms(fermat_spec(), o);
  for (const char* id : {"A1", "A2", "A3", "A4", "A5"}) EXPECT_TRUE(r.axioms.at(id).pass) << id;
  EXPECT_FALSE(r.axioms.at("A3pp").pass);
  EXPECT_TRUE(r.axioms.at("A4").requested);
  EXPECT_FALSE(r.axioms.at("A5").requested);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.residuals.at("eq_alal"), 1e-12);
  EXPECT_FALSE(r.a4_target_conjectural);
}

TEST(CheckAxioms, FermatTwoTurns) {
  VerifyOptions o;
  o.g_grid = kG;
  o.v_quadrature = kV;
  o.axioms = {"A1", "A2", "A3pp", "A4"};
  const VerifyReport r = check_axioms(fermat_spec(2.0), o);
  for (const char* id : {"A1", "A2", "A3pp", "A4"}) EXPECT_TRUE(r.axioms.at(id).pass) << id;
  EXPECT_FALSE(r.axioms.at("A3").pass);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.residuals.at("eq_sigma"), 1e-12);
  EXPECT_LE(r.residuals.at("eq_alalal"), 1e-12);
}

TEST(CheckAxioms, QuadraticFailsOnlyA4) {
  VerifyOptions o;
  o.g_grid = kG;
  o.v_quadrature = kV;
  const VerifyReport r = check_axioms(table_spec(quadratic), o);
  for (const char* id : {"A1", "A2", "A3"}) EXPECT_TRUE(r.axioms.at(id).pass) << id;
  const AxiomVerdict& a4 = r.axioms.at("A4");
  EXPECT_FALSE(a4.pass);
  ASSERT_TRUE(a4.witness.has_value());
  EXPECT_TRUE(std::abs(*a4.witness - 0.25) < 1e-9 || std::abs(*a4.witness - 0.75) < 1e-9);
  EXPECT_EQ(r.tolerances.a4, kTableA4Tolerance);
  EXPECT_FALSE(r.passed());
}

TEST(CheckAxioms, FlagsConjecturalTargetForManyParts) {
  VerifyOptions o;
  o.g_grid = 32;
  o.v_quadrature = 2000;
  const VerifyReport r = check_axioms(fermat_spec(1.0, 3), o);
  EXPECT_TRUE(r.a4_target_conjectural);
  EXPECT_NEAR(r.profile.target, 1.0 / 9.0, 1e-15);
  EXPECT_TRUE(r.axioms.at("A4").pass);
}

TEST(CheckAxioms, RejectsUnknownAxiom) {
  VerifyOptions o;
  o.axioms = {"A9"};
  EXPECT_THROW(check_axioms(fermat_spec(), o), std::invalid_argument);
}

TEST(CheckAxioms, ToleranceBoundaryPasses) {
  VerifyOptions o;
  o.g_grid = kG;
  o.v_quadrature = kV;
  const VerifyReport probe = check_axioms(table_spec(quadratic), o);
  o.a4_tolerance = probe.profile.max_dev;
  EXPECT_TRUE(check_axioms(table_spec(quadratic), o).axioms.at("A4").pass);
}

TEST(RotationCheck, FermatHasNoRotationInvariantPart) {
  const RotationReport r = rotation_check(Curve(fermat_spec()), 6, 2000);
  EXPECT_TRUE(r.pass);
  // Reduced fractions with q <= 6: 1+2+2+4+2.
  EXPECT_EQ(r.entries.size(), 11u);
  for (const auto& e : r.entries) EXPECT_LE(e.integral, 1e-12);
}

TEST(RotationCheck, ThreePartsAtOneThird) {
  const RotationReport r = rotation_check(Curve(fermat_spec(1.0, 3)), 3, 2000);
  for (const auto& e : r.entries)
    if (e.q == 3) {
      EXPECT_LE(e.integral, 1e-12);
    }
}

TEST(RotationCheck, FullDiskIsInvariantUnderEveryRotation) {
  const RotationReport r = rotation_check([](double) { return CircleSet::full(); }, 6, 2000);
  EXPECT_FALSE(r.pass);
  for (const auto& e : r.entries) EXPECT_NEAR(e.integral, 1.0, 1e-12);
}

TEST(MonteCarlo, AgreesWithQuadrature) {
  const Curve f(fermat_spec());
  for (double g : {0.3, 0.8}) {
    const OracleEstimate e = monte_carlo_overlap(f, CirclePoint(g), 1000000, 12345);
    EXPECT_LE(std::abs(e.value - 0.25), 3.0 * e.std_error) << g;
    EXPECT_EQ(e.samples, 1000000);
    EXPECT_EQ(e.seed, 12345u);
  }
  const Curve q(table_spec(quadratic));
  for (double g : {0.25, 0.75}) {
    const OracleEstimate e = monte_carlo_overlap(q, CirclePoint(g), 1000000, 99);
    EXPECT_LE(std::abs(e.value - profile_value(q, CirclePoint(g), kV)), 3.0 * e.std_error) << g;
  }
}

TEST(MonteCarlo, DeterministicForSeed) {
  const Curve f(fermat_spec());
  const OracleEstimate a = monte_carlo_overlap(f, CirclePoint(0.4), 10000, 7);
  const OracleEstimate b = monte_carlo_overlap(f, CirclePoint(0.4), 10000, 7);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
  const double p = a.value;
  EXPECT_NEAR(a.std_error, std::sqrt(p * (1 - p) / (10000 - 1)), 1e-15);
  EXPECT_THROW(monte_carlo_overlap(f, CirclePoint(0.4), 0, 7), std::invalid_argument);
}

TEST(ReportJson, CarriesSchemaAndSettings) {
  VerifyOptions o;
  o.g_grid = 16;
  o.v_quadrature = 1000;
  o.seed = 5;
  o.q_max = 3;
  o.mc_samples = 1000;
  const json j = report_to_json(check_axioms(fermat_spec(), o));
  EXPECT_EQ(j.at("version"), 1);
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(j.at("profile").at("grid"), 16);
  EXPECT_EQ(j.at("profile").at("values").size(), 16u);
  EXPECT_TRUE(j.at("axioms").contains("A3pp"));
  EXPECT_TRUE(j.at("residuals").contains("eq_alal"));
  EXPECT_TRUE(j.at("rotation").at("pass"));
  EXPECT_EQ(j.at("oracle").at("samples"), 1000);
  EXPECT_TRUE(j.at("passed"));
  EXPECT_EQ(j.dump(), report_to_json(check_axioms(fermat_spec(), o)).dump());
}

}  // namespace
