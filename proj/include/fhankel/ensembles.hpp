#pragma once

#include <vector>

#include "fhankel/complex.hpp"
#include "fhankel/log_signed.hpp"
#include "fhankel/real.hpp"

namespace fhankel {

enum class WeightKind { Hermite, Laguerre };

// Scaled weight: Hermite  w_N(x) = exp(-2 N x^2)   on R,
//                Laguerre w_N(x) = x^alpha exp(-4 N x) on (0, inf).
struct WeightSpec {
  WeightKind kind = WeightKind::Hermite;
  long N = 1;
  Real alpha = Real(0);  // Laguerre only

  WeightSpec() = default;
  WeightSpec(WeightKind k, long n, Real a = Real(0)) : kind(k), N(n), alpha(std::move(a)) {
    if (N < 1) throw std::invalid_argument("WeightSpec: N must be >= 1");
    if (kind == WeightKind::Laguerre && alpha <= Real(-1))
      throw std::invalid_argument("WeightSpec: Laguerre requires alpha > -1");
  }

  WeightSpec with_N(long n) const { return WeightSpec(kind, n, alpha); }
};

// Fisher-Hartwig symbol data: weight times prod_i |mu_i - x|^{2 q_i}.
struct SymbolSpec {
  WeightSpec weight;
  std::vector<Real> q;
  std::vector<Real> mu;

  SymbolSpec() = default;
  SymbolSpec(WeightSpec w, std::vector<Real> q_in, std::vector<Real> mu_in)
      : weight(std::move(w)), q(std::move(q_in)), mu(std::move(mu_in)) {
    if (q.size() != mu.size()) throw std::invalid_argument("SymbolSpec: q and mu sizes differ");
    for (size_t i = 0; i < mu.size(); ++i)
      for (size_t j = i + 1; j < mu.size(); ++j)
        if (mu[i] == mu[j])
          throw std::invalid_argument("SymbolSpec: mu entries must be pairwise distinct");
  }

  long m() const { return static_cast<long>(q.size()); }

  Real q_total() const {
    Real s(0);
    for (const auto& qi : q) s += qi;
    return s;
  }

  bool q_is_natural() const {
    for (const auto& qi : q)
      if (!qi.is_integer() || qi.sign() < 0) return false;
    return true;
  }

  // 2|q| for natural q: the size of the confluent determinant.
  long big_k() const {
    Real t = 2 * q_total();
    return t.to_long();
  }
};

// Saddle-point data of the action S(z, mu) in the upper half plane.
struct SaddleData {
  Cplx z_plus;
  Cplx S_plus;
  Real re_S, im_S;
  Real a;      // curvature scale, > 0 for interior mu
  Real theta;  // steepest-descent angle, radians
};

// Limiting eigenvalue density at mu; requires mu in supp(rho).
Real rho(const WeightSpec& w, const Real& mu);

// ln w_N(x) as a signed log.
LogSigned weight_eval_log(const WeightSpec& w, const Real& x);

// Action S(z, mu) with the principal log branch; N-independent.
// Hermite: 2 mu z - log z - z^2/2;  Laguerre: 2 mu z + log z - log(z+2).
Cplx action_S(const WeightSpec& w, const Cplx& z, const Real& mu);

// Saddle data at interior mu.
SaddleData saddle_data(const WeightSpec& w, const Real& mu);

// zeta_N(mu): exp(2 N mu^2) for Hermite, 1 for Laguerre (log form).
LogSigned zeta_log(const WeightSpec& w, const Real& mu);

// ln h_k, the squared L^2 norm of the monic orthogonal polynomial of
// degree k under w_N.
LogSigned opnorm_h_log(const WeightSpec& w, long k);

// ln( H_{N,N} / H_{N+p,N} ) where H_{M,N} = M! prod_{k<M} h_k.
LogSigned selberg_ratio_log(const WeightSpec& w, long N, long p);

// ln Z_p(a) for the Gaussian Selberg integral
//   Z_p(a) = int_{R^p} Delta_p^2(x) prod exp(-a x_l^2) dx
//          = (pi / 2^{p-1})^{p/2} G(p+2) / a^{p^2/2}.
LogSigned z_selberg_log(long p, const Real& a);

}  // namespace fhankel
