#pragma once

#include <vector>

#include "fhankel/ensembles.hpp"
#include "fhankel/real.hpp"

namespace fhankel {

// Value and derivatives of a function at a point: values[i] = f^(i)(mu),
// i = 0..k_max.
struct DerivStream {
  std::vector<Real> values;

  long k_max() const { return static_cast<long>(values.size()) - 1; }
  const Real& deriv(long i) const { return values[static_cast<size_t>(i)]; }
};

DerivStream ds_zero(long k_max);
DerivStream ds_const(const Real& c, long k_max);

// Leibniz product of two streams of equal length.
DerivStream ds_mul(const DerivStream& a, const DerivStream& b);

// Monic three-term recurrence coefficients for the scaled weights:
//   pi_{k+1}(x) = (x - alpha_k) pi_k(x) - beta_k pi_{k-1}(x).
Real recur_alpha(const WeightSpec& w, long k);
Real recur_beta(const WeightSpec& w, long k);  // k >= 1

// pi_degree(mu) and its first k_max derivatives via the recurrence carried
// in derivative-stream arithmetic.
DerivStream orthopoly_eval_derivs(const WeightSpec& w, long degree, const Real& mu, long k_max,
                                  const PrecisionContext& ctx);

// All streams for degrees deg_lo..deg_hi in one recurrence pass (the
// confluent determinant needs a consecutive run of degrees).
std::vector<DerivStream> orthopoly_eval_derivs_range(const WeightSpec& w, long deg_lo, long deg_hi,
                                                     const Real& mu, long k_max);

// Derivative stream of exp(-2 N mu^2) (the reciprocal of zeta_N, Hermite).
DerivStream hermite_inv_zeta_stream(long N, const Real& mu, long k_max);

}  // namespace fhankel
