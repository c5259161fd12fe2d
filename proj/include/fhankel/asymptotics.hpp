#pragma once

#include "fhankel/ensembles.hpp"
#include "fhankel/log_signed.hpp"

namespace fhankel {

// Leading-order asymptotic value of the Hankel ratio (no correction term),
// with the labeled factor breakdown:
//   log_value = n_exponent ln N + omega_factor + g_factor
//             + vandermonde_factor + rho_factor.
struct FFResult {
  LogSigned log_value;
  Real n_exponent;          // sum_i (q_i^2 - q_i)
  Real omega_factor;        // -sum_i q_i ln w_N(mu_i)
  Real g_factor;            // sum_i [2 ln G(q_i+1) - ln G(2q_i+1) + (q_i^2-q_i) ln 2pi]
  Real vandermonde_factor;  // -2 sum_{j<k} q_j q_k ln|mu_k - mu_j|
  Real rho_factor;          // sum_i q_i^2 ln rho(mu_i)
};

// The Forrester-Frankel asymptotic formula; real q > -1/2, distinct
// interior mu.
FFResult ff_log(const SymbolSpec& spec, const PrecisionContext& ctx);

// Leading saddle coefficient I_0 of the dual integral:
//   I_0 = prod_i C(2q_i, q_i) (-1)^{q_i} Z_{q_i}^2(a_i) * F_q(0),
// F_q(0) = G_q(0) D_q(0) H_q(0); natural q.
LogSigned I0_log(const SymbolSpec& spec, const PrecisionContext& ctx);

// Leading-order Hankel ratio assembled through the I_0 route; identical to
// ff_log for natural q (the universality identity).
LogSigned calH_via_I0_log(const SymbolSpec& spec, const PrecisionContext& ctx);

// |LHS - RHS| of the universality identity relating the saddle data to the
// ensemble data; zero to rounding for natural q.
Real universality_residual(const SymbolSpec& spec, const PrecisionContext& ctx);

// Leading-order one-body density matrix of N+1 harmonically trapped
// impenetrable bosons at fixed x != y in (-1, 1):
//   ln(N+1) + (ln g_N(x) + ln g_N(y))/2 + ff_log at q = (1/2, 1/2).
// Conjecture-level output: the formula is used at half-integer q.
LogSigned boson_rho1_leading(long N, const Real& x, const Real& y, const PrecisionContext& ctx);

}  // namespace fhankel
