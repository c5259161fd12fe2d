#pragma once

#include <vector>

#include "fhankel/ensembles.hpp"
#include "fhankel/log_signed.hpp"

namespace fhankel {

// Closed-form weighted moments a_n = int x^n a(x) dx, base or
// symbol-applied.
struct MomentTable {
  WeightSpec weight;
  std::vector<Real> values;
  bool symbol_applied = false;

  long n_max() const { return static_cast<long>(values.size()) - 1; }
};

// Coefficients of prod_i (mu_i - x)^{2 q_i}, a monic polynomial of degree
// 2|q| (coeffs[k] multiplies x^k).
struct SymbolPoly {
  std::vector<Real> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

// Exact expansion by repeated binomial convolution; requires natural q.
SymbolPoly symbol_poly(const std::vector<Real>& q, const std::vector<Real>& mu);

// Pure-weight moments in closed form:
//   Hermite  a_{2s} = Gamma(s+1/2) / (2N)^{s+1/2}, odd moments 0;
//   Laguerre a_n    = Gamma(alpha+n+1) / (4N)^{alpha+n+1}.
MomentTable base_moments(const WeightSpec& w, long n_max, const PrecisionContext& ctx);

// a_n = sum_k coeffs[k] base[n+k]; base must cover n_max(out) + degree.
MomentTable symbol_moments(const MomentTable& base, const SymbolPoly& poly);

// ln det[a_{j+k}]_{j,k=0}^{M-1} by pivoted elimination with precision
// escalation.
LogSigned hankel_det_log(const MomentTable& moments, long M, const PrecisionContext& ctx);

// ln H_{M,N,m,q}(mu) = ln M! + ln det of the symbol moments.
LogSigned h_multiple_integral_log(long M, const SymbolSpec& spec, const PrecisionContext& ctx);

// ln of the ratio H_{N,N,m,q}(mu) / H_{N+|q|,N}; the exact finite-N ground
// truth for natural q (practical conditioning bound N + |q| <= 40).
LogSigned calH_oracle(const SymbolSpec& spec, const PrecisionContext& ctx);

}  // namespace fhankel
