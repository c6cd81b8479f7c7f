#pragma once

#include <stdexcept>
#include <vector>

namespace yinyang {

/// Composite Simpson rule with n panels (n is rounded up to even).
template <class F>
double composite_simpson(F&& f, double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("composite_simpson: need at least two panels");
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < n; ++i) {
    const double y = f(a + i * h);
    if (i % 2 != 0) odd += y; else even += y;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

/// Nodes and weights of the same rule, for integrands evaluated many times
/// against a fixed grid.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline QuadratureRule simpson_rule(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("simpson_rule: need at least two panels");
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n) + 1);
  rule.weights.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    rule.nodes[idx] = i == n ? b : a + i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 != 0 ? 4.0 : 2.0);
    rule.weights[idx] = w * h / 3.0;
  }
  return rule;
}

}  // namespace yinyang
