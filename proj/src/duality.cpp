#include "fhankel/duality.hpp"

#include <stdexcept>

#include "fhankel/gamma.hpp"
#include "fhankel/linalg.hpp"
#include "fhankel/orthopoly.hpp"

namespace fhankel {

namespace {

// Drop q_i = 0 blocks; they contribute empty column blocks.
SymbolSpec reduced(const SymbolSpec& spec) {
  std::vector<Real> q, mu;
  for (size_t i = 0; i < spec.q.size(); ++i) {
    if (spec.q[i].sign() != 0) {
      q.push_back(spec.q[i]);
      mu.push_back(spec.mu[i]);
    }
  }
  return SymbolSpec(spec.weight, std::move(q), std::move(mu));
}

MatrixR r_deriv_matrix_raw(const SymbolSpec& spec) {
  const long big_k = spec.big_k();
  const WeightSpec& w = spec.weight;
  MatrixR mat(big_k, big_k);
  long col = 0;
  for (long i = 0; i < spec.m(); ++i) {
    long two_q = 2 * spec.q[static_cast<size_t>(i)].to_long();
    long k_max = two_q - 1;
    const Real& mu = spec.mu[static_cast<size_t>(i)];
    auto pi_streams = orthopoly_eval_derivs_range(w, w.N, w.N + big_k - 1, mu, k_max);
    DerivStream inv_zeta;
    if (w.kind == WeightKind::Hermite) inv_zeta = hermite_inv_zeta_stream(w.N, mu, k_max);
    for (long j = 0; j < big_k; ++j) {
      DerivStream r = (w.kind == WeightKind::Hermite)
                          ? ds_mul(inv_zeta, pi_streams[static_cast<size_t>(j)])
                          : pi_streams[static_cast<size_t>(j)];
      for (long l = 0; l < two_q; ++l) mat(j, col + l) = r.values[static_cast<size_t>(l)];
    }
    col += two_q;
  }
  return mat;
}

}  // namespace

MatrixR r_deriv_matrix(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("r_deriv_matrix: requires natural q");
  auto guard = ctx.install();
  return r_deriv_matrix_raw(reduced(spec));
}

LogSigned lim_F_log(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("lim_F_log: requires natural q");
  SymbolSpec red = reduced(spec);
  if (red.m() == 0) return LogSigned::one();

  auto build = [&] {
    MatrixR mat = r_deriv_matrix_raw(red);
    LogSigned det = log_det_lu(mat);
    LogSigned pref = LogSigned::one();
    for (long j = 0; j < red.m(); ++j) {
      for (long k = j + 1; k < red.m(); ++k) {
        Real diff = red.mu[static_cast<size_t>(k)] - red.mu[static_cast<size_t>(j)];
        Real e = Real(-4) * red.q[static_cast<size_t>(k)] * red.q[static_cast<size_t>(j)];
        pref *= LogSigned::from_value(diff).pow(e);
      }
    }
    for (long i = 0; i < red.m(); ++i) {
      const Real& qi = red.q[static_cast<size_t>(i)];
      pref *= zeta_log(red.weight, red.mu[static_cast<size_t>(i)]).pow(2 * qi);
      pref /= LogSigned::from_log(1, barnes_g_log_raw(2 * qi + 1));
    }
    return pref * det;
  };
  return escalate_log(ctx, build, "lim_F_log");
}

LogSigned calH_duality(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("calH_duality: requires natural q");
  auto guard = ctx.install();
  long p = spec.q_total().to_long();
  LogSigned ratio = selberg_ratio_log(spec.weight, spec.weight.N, p);
  return ratio * lim_F_log(spec, ctx);
}

Real log_barnes_ratio_up(const Real& x, long p) {
  if (p < 0) throw std::invalid_argument("log_barnes_ratio_up: p >= 0");
  Real acc(0);
  for (long j = 0; j < p; ++j) acc += lngamma(x + Real(j));
  return acc;
}

LogSigned h_prefactor_log(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("h_prefactor_log: requires natural q");
  auto guard = ctx.install();
  const long p = spec.q_total().to_long();  // |q|
  if (p == 0) return LogSigned::one();
  const long N = spec.weight.N;
  Real sum_2q2(0);  // sum_i 2 q_i^2
  for (const auto& qi : spec.q) sum_2q2 += 2 * qi * qi;
  Real ln2 = const_log2(), lnpi = log(const_pi()), lnN = log(Real(N));
  Real rp(p);

  if (spec.weight.kind == WeightKind::Hermite) {
    Real v = (-rp * rp - 3 * rp / 2 + sum_2q2) * ln2 - 3 * rp / 2 * lnpi +
             (sum_2q2 + rp * rp / 2 + rp * Real(N)) * lnN -
             log_barnes_ratio_up(Real(N + 2), p);
    return LogSigned::from_log(1, v);
  }
  const Real& al = spec.weight.alpha;
  Real v = (-2 * rp + sum_2q2) * ln2 - 2 * rp * lnpi + ((al - rp) * rp + sum_2q2) * lnN;
  v += lngamma(Real(N + 1));                                   // G(N+2)/G(N+1)
  v -= log_barnes_ratio_up(al + Real(N + 1), p);               // G(N+a+1)/G(N+a+|q|+1)
  v += log_barnes_ratio_up(Real(N + p + 2), p - 1);            // G(N+2|q|+1)/G(N+|q|+2)
  int sign = (p % 2 == 0) ? 1 : -1;
  return LogSigned::from_log(sign, v);
}

}  // namespace fhankel
