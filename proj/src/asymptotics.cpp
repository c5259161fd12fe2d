#include "fhankel/asymptotics.hpp"

#include <stdexcept>

#include "fhankel/gamma.hpp"

namespace fhankel {

namespace {

void require_interior(const SymbolSpec& spec) {
  for (const auto& mu : spec.mu) {
    if (spec.weight.kind == WeightKind::Hermite) {
      if (mu <= Real(-1) || mu >= Real(1))
        throw std::domain_error("asymptotics: mu must lie in (-1, 1)");
    } else {
      if (mu <= Real(0) || mu >= Real(1))
        throw std::domain_error("asymptotics: mu must lie in (0, 1)");
    }
  }
}

void require_q_gt_neg_half(const SymbolSpec& spec) {
  for (const auto& qi : spec.q)
    if (qi <= Real(-0.5)) throw std::domain_error("asymptotics: requires q > -1/2");
}

// sign and log magnitude of G_q(0) H_q(0):
//   D-block Vandermonde data of the coalesced saddle configuration.
LogSigned gq0_hq0_log(const SymbolSpec& spec) {
  Real ln2 = const_log2();
  Real abs_q = spec.q_total();
  Real sum_q2(0);
  for (const auto& qi : spec.q) sum_q2 += qi * qi;

  Real v(0);
  int sign = 1;
  for (long j = 0; j < spec.m(); ++j)
    for (long k = j + 1; k < spec.m(); ++k)
      v += 2 * spec.q[static_cast<size_t>(j)] * spec.q[static_cast<size_t>(k)] *
           log(abs(spec.mu[static_cast<size_t>(k)] - spec.mu[static_cast<size_t>(j)]));
  if (spec.weight.kind == WeightKind::Hermite) {
    v += (abs_q * abs_q - sum_q2) * ln2;
  } else {
    for (long i = 0; i < spec.m(); ++i) {
      const Real& qi = spec.q[static_cast<size_t>(i)];
      const Real& mui = spec.mu[static_cast<size_t>(i)];
      v += (2 * qi * qi - spec.weight.alpha * qi) * log(mui);
      if (qi.to_long() % 2 != 0) sign = -sign;
    }
  }
  return LogSigned::from_log(sign, v);
}

// sign and log magnitude of h_0 (the N-free part of the h prefactor
// asymptotics).
LogSigned h0_log(const SymbolSpec& spec) {
  Real ln2 = const_log2(), lnpi = log(const_pi());
  Real abs_q = spec.q_total();
  Real v(0);
  int sign = 1;
  for (const auto& qi : spec.q) v += (2 * qi * qi - 2 * qi) * ln2 - 2 * qi * lnpi;
  if (spec.weight.kind == WeightKind::Hermite) {
    v += abs_q * Real(spec.weight.N) - abs_q * abs_q * ln2;
  } else {
    if (abs_q.to_long() % 2 != 0) sign = -sign;
  }
  return LogSigned::from_log(sign, v);
}

}  // namespace

FFResult ff_log(const SymbolSpec& spec, const PrecisionContext& ctx) {
  auto guard = ctx.install();
  require_interior(spec);
  require_q_gt_neg_half(spec);

  FFResult r;
  Real ln_2pi = log(2 * const_pi());
  r.n_exponent = Real(0);
  r.omega_factor = Real(0);
  r.g_factor = Real(0);
  r.vandermonde_factor = Real(0);
  r.rho_factor = Real(0);
  for (long i = 0; i < spec.m(); ++i) {
    const Real& qi = spec.q[static_cast<size_t>(i)];
    const Real& mui = spec.mu[static_cast<size_t>(i)];
    r.n_exponent += qi * qi - qi;
    r.omega_factor -= qi * weight_eval_log(spec.weight, mui).log_mag();
    r.g_factor += 2 * barnes_g_log_raw(qi + 1) - barnes_g_log_raw(2 * qi + 1) +
                  (qi * qi - qi) * ln_2pi;
    r.rho_factor += qi * qi * log(rho(spec.weight, mui));
  }
  for (long j = 0; j < spec.m(); ++j)
    for (long k = j + 1; k < spec.m(); ++k)
      r.vandermonde_factor -= 2 * spec.q[static_cast<size_t>(j)] * spec.q[static_cast<size_t>(k)] *
                              log(abs(spec.mu[static_cast<size_t>(k)] - spec.mu[static_cast<size_t>(j)]));
  Real total = r.n_exponent * log(Real(spec.weight.N)) + r.omega_factor + r.g_factor +
               r.vandermonde_factor + r.rho_factor;
  r.log_value = LogSigned::from_log(1, total);
  return r;
}

LogSigned I0_log(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("I0_log: requires natural q");
  auto guard = ctx.install();
  require_interior(spec);

  Real lnpi = log(const_pi());
  LogSigned acc = LogSigned::one();
  Real d_log(0);
  int d_sign = 1;
  for (long i = 0; i < spec.m(); ++i) {
    const Real& qi = spec.q[static_cast<size_t>(i)];
    const Real& mui = spec.mu[static_cast<size_t>(i)];
    long qn = qi.to_long();
    SaddleData sd = saddle_data(spec.weight, mui);
    acc *= LogSigned::from_log(1, log_binomial(2 * qn, qn));
    acc *= LogSigned::from_log(1, 2 * z_selberg_log(qn, sd.a).log_mag());
    if (qn % 2 != 0) acc *= LogSigned::from_log(-1, Real(0));
    // D_q(0) = (-1)^{|q|} pi^{2 sum q^2} prod rho^{2 q^2}
    d_log += 2 * qi * qi * (lnpi + log(rho(spec.weight, mui)));
    if (qn % 2 != 0) d_sign = -d_sign;
  }
  acc *= LogSigned::from_log(d_sign, d_log);
  acc *= gq0_hq0_log(spec);
  return acc;
}

LogSigned calH_via_I0_log(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("calH_via_I0_log: requires natural q");
  auto guard = ctx.install();
  require_interior(spec);

  Real ln2 = const_log2(), lnpi = log(const_pi());
  Real lnN = log(Real(spec.weight.N));
  Real v(0);
  for (long i = 0; i < spec.m(); ++i) {
    const Real& qi = spec.q[static_cast<size_t>(i)];
    const Real& mui = spec.mu[static_cast<size_t>(i)];
    SaddleData sd = saddle_data(spec.weight, mui);
    v += qi * (qi - 1) * lnN;
    v += 2 * barnes_g_log_raw(qi + 1) - barnes_g_log_raw(2 * qi + 1);
    v += (-qi * qi + qi) * ln2 + (2 * qi * qi + qi) * lnpi;
    v += 2 * qi * qi * log(rho(spec.weight, mui));
    v += -2 * qi * Real(spec.weight.N) * sd.re_S + 2 * qi * zeta_log(spec.weight, mui).log_mag() -
         qi * qi * log(sd.a);
  }
  for (long j = 0; j < spec.m(); ++j)
    for (long k = j + 1; k < spec.m(); ++k)
      v -= 4 * spec.q[static_cast<size_t>(j)] * spec.q[static_cast<size_t>(k)] *
           log(abs(spec.mu[static_cast<size_t>(k)] - spec.mu[static_cast<size_t>(j)]));
  LogSigned acc = LogSigned::from_log(1, v);
  acc *= gq0_hq0_log(spec);
  acc *= h0_log(spec);
  return acc;
}

Real universality_residual(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural())
    throw std::domain_error("universality_residual: requires natural q");
  auto guard = ctx.install();
  require_interior(spec);

  Real ln2 = const_log2(), lnpi = log(const_pi());
  Real lhs(0), rhs(0);
  for (long i = 0; i < spec.m(); ++i) {
    const Real& qi = spec.q[static_cast<size_t>(i)];
    const Real& mui = spec.mu[static_cast<size_t>(i)];
    SaddleData sd = saddle_data(spec.weight, mui);
    lhs += -2 * qi * Real(spec.weight.N) * sd.re_S + 2 * qi * zeta_log(spec.weight, mui).log_mag() -
           qi * qi * log(sd.a);
    rhs += -qi * weight_eval_log(spec.weight, mui).log_mag() -
           qi * qi * log(rho(spec.weight, mui)) + (2 * qi * qi - 2 * qi) * ln2 -
           (qi * qi + 2 * qi) * lnpi;
  }
  lhs += gq0_hq0_log(spec).log_mag() + h0_log(spec).log_mag();
  for (long j = 0; j < spec.m(); ++j)
    for (long k = j + 1; k < spec.m(); ++k)
      rhs += 2 * spec.q[static_cast<size_t>(j)] * spec.q[static_cast<size_t>(k)] *
             log(abs(spec.mu[static_cast<size_t>(k)] - spec.mu[static_cast<size_t>(j)]));
  return abs(lhs - rhs);
}

LogSigned boson_rho1_leading(long N, const Real& x, const Real& y, const PrecisionContext& ctx) {
  auto guard = ctx.install();
  if (x == y) throw std::domain_error("boson_rho1_leading: x = y is singular");
  WeightSpec w(WeightKind::Hermite, N);
  SymbolSpec spec(w, {Real(0.5), Real(0.5)}, {x, y});
  FFResult ff = ff_log(spec, ctx);
  Real v = log(Real(N + 1)) +
           (weight_eval_log(w, x).log_mag() + weight_eval_log(w, y).log_mag()) / 2 +
           ff.log_value.log_mag();
  return LogSigned::from_log(1, v);
}

}  // namespace fhankel
