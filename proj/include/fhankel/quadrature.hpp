#pragma once

#include <memory>
#include <vector>

#include "fhankel/real.hpp"

namespace fhankel {

struct QuadRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

// Gauss-Legendre rule with n points at the current working precision,
// cached per (n, precision).
std::shared_ptr<const QuadRule> gauss_legendre(int n);

// integral of f over [a, b] with an n-point Gauss-Legendre rule.
template <class F>
auto integrate_gl(F&& f, const Real& a, const Real& b, int n) {
  auto rule = gauss_legendre(n);
  Real half = (b - a) / 2, mid = (a + b) / 2;
  auto acc = f(mid + half * rule->nodes[0]) * rule->weights[0];
  for (size_t i = 1; i < rule->nodes.size(); ++i)
    acc += f(mid + half * rule->nodes[i]) * rule->weights[i];
  return acc * half;
}

}  // namespace fhankel
