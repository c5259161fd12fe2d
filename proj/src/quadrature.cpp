#include "fhankel/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace fhankel {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<Real, Real> legendre_pair(int n, const Real& x) {
  Real pm(1), p = x;
  for (int k = 1; k < n; ++k) {
    Real pn = (Real(2 * k + 1) * x * p - Real(k) * pm) / Real(k + 1);
    pm = p;
    p = pn;
  }
  return {p, pm};
}

QuadRule build_gauss_legendre(int n) {
  QuadRule rule;
  rule.nodes.assign(n, Real(0));
  rule.weights.assign(n, Real(0));
  const long prec = static_cast<long>(default_precision());
  const Real tol = ldexp(Real(1), -prec + 8);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the Chebyshev-angle estimate; quadratic convergence makes
    // a handful of full-precision iterations enough.
    Real x(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
    Real dp(0);
    for (int it = 0; it < 64; ++it) {
      auto [p, pm] = legendre_pair(n, x);
      dp = Real(n) * (x * p - pm) / (x * x - 1);
      Real dx = p / dp;
      x -= dx;
      if (abs(dx) < tol) break;
      if (it == 63) throw std::runtime_error("gauss_legendre: Newton did not converge");
    }
    auto [p, pm] = legendre_pair(n, x);
    dp = Real(n) * (x * p - pm) / (x * x - 1);
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.weights[static_cast<size_t>(i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<size_t>(n / 2)] = Real(0);
  return rule;
}

}  // namespace

std::shared_ptr<const QuadRule> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const QuadRule>> cache;
  const mpfr_prec_t p = default_precision();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<QuadRule>(build_gauss_legendre(n));
  cache.emplace(key, rule);
  return rule;
}

}  // namespace fhankel
