#include "fhankel/ensembles.hpp"

#include <stdexcept>

#include "fhankel/gamma.hpp"

namespace fhankel {

Real rho(const WeightSpec& w, const Real& mu) {
  Real pi = const_pi();
  if (w.kind == WeightKind::Hermite) {
    if (mu < Real(-1) || mu > Real(1)) throw std::domain_error("rho: mu outside [-1, 1]");
    return 2 / pi * sqrt(1 - mu * mu);
  }
  if (mu <= Real(0) || mu > Real(1))
    throw std::domain_error("rho: mu outside (0, 1] (density diverges at 0)");
  return 2 / pi * sqrt(1 / mu - 1);
}

LogSigned weight_eval_log(const WeightSpec& w, const Real& x) {
  if (w.kind == WeightKind::Hermite)
    return LogSigned::from_log(1, Real(-2 * w.N) * x * x);
  if (x <= Real(0)) throw std::domain_error("weight_eval_log: Laguerre requires x > 0");
  return LogSigned::from_log(1, w.alpha * log(x) - Real(4 * w.N) * x);
}

Cplx action_S(const WeightSpec& w, const Cplx& z, const Real& mu) {
  if (norm(z).is_zero()) throw std::domain_error("action_S: z = 0 is singular");
  Cplx two_mu_z = Cplx(2 * mu) * z;
  if (w.kind == WeightKind::Hermite) return two_mu_z - log(z) - Real(0.5) * (z * z);
  Cplx zp2 = z + Cplx(Real(2));
  if (norm(zp2).is_zero()) throw std::domain_error("action_S: z = -2 is singular (Laguerre)");
  return two_mu_z + log(z) - log(zp2);
}

SaddleData saddle_data(const WeightSpec& w, const Real& mu) {
  Real pi = const_pi();
  SaddleData s;
  if (w.kind == WeightKind::Hermite) {
    if (mu <= Real(-1) || mu >= Real(1))
      throw std::domain_error("saddle_data: Hermite requires mu in (-1, 1)");
    s.z_plus = Cplx(mu, sqrt(1 - mu * mu));
    s.theta = (pi - asin(mu)) / 2;
    s.a = pi / 2 * rho(w, mu);
  } else {
    if (mu <= Real(0) || mu >= Real(1))
      throw std::domain_error("saddle_data: Laguerre requires mu in (0, 1)");
    s.z_plus = Cplx(Real(-1), sqrt(1 / mu - 1));
    s.theta = pi / 4;
    s.a = pi * mu * mu * rho(w, mu);
  }
  s.S_plus = action_S(w, s.z_plus, mu);
  s.re_S = s.S_plus.re;
  s.im_S = s.S_plus.im;
  return s;
}

LogSigned zeta_log(const WeightSpec& w, const Real& mu) {
  if (w.kind == WeightKind::Hermite)
    return LogSigned::from_log(1, Real(2 * w.N) * mu * mu);
  return LogSigned::one();
}

LogSigned opnorm_h_log(const WeightSpec& w, long k) {
  if (k < 0) throw std::domain_error("opnorm_h_log: k must be >= 0");
  Real pi = const_pi();
  Real ln4N = log(Real(4 * w.N));
  if (w.kind == WeightKind::Hermite) {
    // h_k = sqrt(pi/(2N)) k! / (4N)^k
    Real v = log(pi / Real(2 * w.N)) / 2 + log_factorial(k) - Real(k) * ln4N;
    return LogSigned::from_log(1, v);
  }
  // h_k = k! Gamma(alpha+k+1) / (4N)^{alpha+1+2k}
  Real v = log_factorial(k) + lngamma(w.alpha + Real(k + 1)) - (w.alpha + Real(1 + 2 * k)) * ln4N;
  return LogSigned::from_log(1, v);
}

LogSigned selberg_ratio_log(const WeightSpec& w, long N, long p) {
  if (N < 1 || p < 0) throw std::domain_error("selberg_ratio_log: need N >= 1, p >= 0");
  Real v = log_factorial(N) - log_factorial(N + p);
  for (long k = N; k < N + p; ++k) v -= opnorm_h_log(w.with_N(N), k).log_mag();
  return LogSigned::from_log(1, v);
}

LogSigned z_selberg_log(long p, const Real& a) {
  if (p < 0) throw std::domain_error("z_selberg_log: p must be >= 0");
  if (a.sign() <= 0) throw std::domain_error("z_selberg_log: a must be > 0");
  if (p == 0) return LogSigned::one();
  Real pi = const_pi();
  Real v = Real(p) / 2 * (log(pi) - Real(p - 1) * const_log2()) + barnes_g_log_raw(Real(p + 2)) -
           Real(p) * Real(p) / 2 * log(a);
  return LogSigned::from_log(1, v);
}

}  // namespace fhankel
