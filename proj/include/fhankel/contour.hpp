#pragma once

#include <vector>

#include "fhankel/complex.hpp"
#include "fhankel/ensembles.hpp"
#include "fhankel/log_signed.hpp"

namespace fhankel {

// Hermite: straight path z = i t, t in [-t_max, t_max], Gauss-Legendre.
// Laguerre: circle of given radius around the origin (radius < 2 keeps the
// z = -2 singularity outside), trapezoid rule.
struct ContourSpec {
  enum class Kind { ImaginaryAxis, Circle };
  Kind kind = Kind::ImaginaryAxis;
  Real extent = Real(8);  // t_max or radius
  int nodes = 128;        // initial node count (doubled until stable)
};

// Contour matched to the weight: t_max sized so the discarded tails are
// negligible at the context precision; Laguerre radius 1.
ContourSpec default_contour(const SymbolSpec& spec, const PrecisionContext& ctx);

// Pointwise integrand of the dual 2|q|-fold integral (for cross-checks):
//   prod_l e^{-N S(z_l, mu_i)} g_{q_i}(z_l) * prod_i Delta^2_{2q_i}(block i)
//   * prod_{j<k} prod prod (z^delta - z^delta).
Cplx dual_integrand(const SymbolSpec& spec, const std::vector<Cplx>& z);

struct IQuadResult {
  LogSigned value;      // signed log of Re(I)
  double im_over_abs;   // residual imaginary part, relative
  int nodes_used;       // per-dimension node count at acceptance
};

// The dual integral I_{N,m,q}(mu) for 2|q| <= 4 by iterated contour
// quadrature, accepted only after node doubling moves the result by less
// than the stability tolerance.
IQuadResult I_quadrature(const SymbolSpec& spec, const ContourSpec& contour,
                         const PrecisionContext& ctx);

// Assembles ln of the Hankel ratio from the dual integral:
//   h_prefactor + sum_i [-ln G(2q_i+1) - ln Gamma(2q_i+1) + 2 q_i ln zeta_i]
//   - 4 sum_{j<k} q_j q_k ln|mu_k - mu_j| + ln I.
LogSigned prop1_assemble(const SymbolSpec& spec, const IQuadResult& i_value,
                         const PrecisionContext& ctx);

// Relative error between the contour-integral representation of the monic
// polynomial pi_{N+j-1}(mu) and its recurrence evaluation.
Real contour_pi_check(const WeightSpec& w, long j, const Real& mu, const ContourSpec& contour,
                      const PrecisionContext& ctx);

}  // namespace fhankel
