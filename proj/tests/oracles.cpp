#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fhankel/quadrature.hpp"

namespace fhankel::oracles {

namespace {

// integrand of the eigenvalue integral at a point
Real integrand(const SymbolSpec& spec, const std::vector<Real>& x) {
  Real v(1);
  for (size_t l = 0; l < x.size(); ++l) {
    v *= weight_eval_log(spec.weight, x[l]).value();
    for (long i = 0; i < spec.m(); ++i) {
      Real base = abs(spec.mu[static_cast<size_t>(i)] - x[l]);
      v *= pow(base, 2 * spec.q[static_cast<size_t>(i)]);
    }
  }
  for (size_t a = 0; a < x.size(); ++a)
    for (size_t b = a + 1; b < x.size(); ++b) v *= (x[b] - x[a]) * (x[b] - x[a]);
  return v;
}

}  // namespace

Real h_bruteforce(long M, const SymbolSpec& spec, int nodes_per_dim) {
  if (M < 1 || M > 2) throw std::invalid_argument("h_bruteforce: only M in {1, 2}");
  const long bits = static_cast<long>(default_precision());
  auto rule = gauss_legendre(nodes_per_dim);

  const bool hermite = spec.weight.kind == WeightKind::Hermite;
  // integration window sized so the discarded weight tail is below 2^-bits
  Real span;
  if (hermite) {
    span = sqrt((Real(bits) * const_log2() + 40) / Real(2 * spec.weight.N));
  } else {
    // after x = u^2 the weight is exp(-4 N u^2) (up to powers of u)
    span = sqrt((Real(bits) * const_log2() + 40) / Real(4 * spec.weight.N));
  }

  // per-dimension nodes mapped to the line (Hermite) or the substituted
  // half-line (Laguerre, x = u^2, dx = 2 u du)
  std::vector<Real> pts, wts;
  for (int k = 0; k < nodes_per_dim; ++k) {
    if (hermite) {
      pts.push_back(span * rule->nodes[static_cast<size_t>(k)]);
      wts.push_back(span * rule->weights[static_cast<size_t>(k)]);
    } else {
      Real u = span / 2 * (rule->nodes[static_cast<size_t>(k)] + 1);
      Real du = span / 2 * rule->weights[static_cast<size_t>(k)];
      pts.push_back(u * u);
      wts.push_back(2 * u * du);
    }
  }

  Real total(0);
  if (M == 1) {
    for (int a = 0; a < nodes_per_dim; ++a) {
      if (!hermite && pts[static_cast<size_t>(a)].is_zero()) continue;
      total += wts[static_cast<size_t>(a)] * integrand(spec, {pts[static_cast<size_t>(a)]});
    }
    return total;
  }
  for (int a = 0; a < nodes_per_dim; ++a) {
    if (!hermite && pts[static_cast<size_t>(a)].is_zero()) continue;
    Real row(0);
    for (int b = 0; b < nodes_per_dim; ++b) {
      if (!hermite && pts[static_cast<size_t>(b)].is_zero()) continue;
      row += wts[static_cast<size_t>(b)] *
             integrand(spec, {pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)]});
    }
    total += wts[static_cast<size_t>(a)] * row;
  }
  return total;
}

Real z2_bruteforce(const Real& a, int nodes_per_dim) {
  const long bits = static_cast<long>(default_precision());
  auto rule = gauss_legendre(nodes_per_dim);
  Real span = sqrt((Real(bits) * const_log2() + 40) / a);
  Real total(0);
  for (int i = 0; i < nodes_per_dim; ++i) {
    Real x = span * rule->nodes[static_cast<size_t>(i)];
    Real wx = span * rule->weights[static_cast<size_t>(i)];
    Real gx = exp(-a * x * x);
    Real row(0);
    for (int j = 0; j < nodes_per_dim; ++j) {
      Real y = span * rule->nodes[static_cast<size_t>(j)];
      Real wy = span * rule->weights[static_cast<size_t>(j)];
      row += wy * (x - y) * (x - y) * exp(-a * y * y);
    }
    total += wx * gx * row;
  }
  return total;
}

double z3_bruteforce(double a, int nodes_per_dim) {
  ScopedPrecision guard(64);
  auto rule = gauss_legendre(nodes_per_dim);
  double span = std::sqrt(46.0 / a);  // exp(-46) tail, ample for 1e-6
  std::vector<double> x(static_cast<size_t>(nodes_per_dim)), w(static_cast<size_t>(nodes_per_dim));
  for (int i = 0; i < nodes_per_dim; ++i) {
    x[static_cast<size_t>(i)] = span * rule->nodes[static_cast<size_t>(i)].to_double();
    w[static_cast<size_t>(i)] =
        span * rule->weights[static_cast<size_t>(i)].to_double() *
        std::exp(-a * x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)]);
  }
  double total = 0;
  for (int i = 0; i < nodes_per_dim; ++i)
    for (int j = 0; j < nodes_per_dim; ++j)
      for (int k = 0; k < nodes_per_dim; ++k) {
        double d = (x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]) *
                   (x[static_cast<size_t>(i)] - x[static_cast<size_t>(k)]) *
                   (x[static_cast<size_t>(j)] - x[static_cast<size_t>(k)]);
        total += w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)] * w[static_cast<size_t>(k)] * d * d;
      }
  return total;
}

}  // namespace fhankel::oracles
