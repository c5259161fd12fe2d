#pragma once

#include "fhankel/eigen_support.hpp"
#include "fhankel/ensembles.hpp"
#include "fhankel/log_signed.hpp"

namespace fhankel {

// The 2|q| x 2|q| confluent matrix: entry (j, column block i offset l) is
// d^{l-1}/dmu_i^{l-1} r_{N+j-1}(mu_i) with r = pi^{(N)} / zeta_N. Requires
// natural q; q_i = 0 blocks are dropped.
MatrixR r_deriv_matrix(const SymbolSpec& spec, const PrecisionContext& ctx);

// ln of the confluent limit of the characteristic-polynomial average:
//   prod_{j<k} (mu_k - mu_j)^{-4 q_k q_j} prod_i zeta^{2 q_i}(mu_i)/G(2q_i+1)
//   * det[r_deriv_matrix].
// Equals <prod_i |Z_N(mu_i)|^{2 q_i}> under the N-point eigenvalue measure.
LogSigned lim_F_log(const SymbolSpec& spec, const PrecisionContext& ctx);

// ln of the Hankel ratio through the confluent determinant:
//   selberg_ratio_log(w, N, |q|) + lim_F_log(spec).
// Exact for natural q at any N; cost is independent of N up to the
// polynomial recurrence.
LogSigned calH_duality(const SymbolSpec& spec, const PrecisionContext& ctx);

// ln |h_{N,m,q}| from the closed Barnes-G case formulas; the sign is +1 for
// Hermite and (-1)^{|q|} for Laguerre.
LogSigned h_prefactor_log(const SymbolSpec& spec, const PrecisionContext& ctx);

// ln [ G(x+p) / G(x) ] = sum_{j=0}^{p-1} ln Gamma(x+j), x > 0, p >= 0.
Real log_barnes_ratio_up(const Real& x, long p);

}  // namespace fhankel
