// Prints f(g) = |A_v ∩ s_g A_v| integrated over v, for the Fermat curve and for
// the quadratic profile alpha(u) = 4u^2, on a coarse grid of g.
#include <cstdio>

#include "yinyang/verifier.hpp"

int main() {
  using namespace yinyang;
  const Curve fermat(CurveSpec{});
  std::vector<std::array<double, 2>> table;
  for (int i = 0; i <= 1000; ++i) {
    const double u = 0.5 * i / 1000.0;
    table.push_back({u, 4.0 * u * u});
  }
  CurveSpec q;
  q.family = Family::custom;
  q.samples = table;
  const Curve quad(q);

  std::printf("%6s  %10s  %10s\n", "g", "fermat", "4u^2");
  for (int i = 0; i <= 8; ++i) {
    const double g = i / 8.0;
    std::printf("%6.3f  %10.6f  %10.6f\n", g, profile_value(fermat, CirclePoint(g), 2000),
                profile_value(quad, CirclePoint(g), 2000));
  }
}
