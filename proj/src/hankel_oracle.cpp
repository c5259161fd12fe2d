#include "fhankel/hankel_oracle.hpp"

#include <stdexcept>

#include "fhankel/errors.hpp"
#include "fhankel/gamma.hpp"
#include "fhankel/linalg.hpp"

namespace fhankel {

SymbolPoly symbol_poly(const std::vector<Real>& q, const std::vector<Real>& mu) {
  if (q.size() != mu.size()) throw std::invalid_argument("symbol_poly: q and mu sizes differ");
  SymbolPoly p;
  p.coeffs = {Real(1)};
  for (size_t i = 0; i < q.size(); ++i) {
    if (!q[i].is_integer() || q[i].sign() < 0)
      throw std::domain_error("symbol_poly: exact path requires natural q");
    long two_q = 2 * q[i].to_long();
    if (two_q == 0) continue;
    // (mu - x)^{2q} = sum_k C(2q, k) mu^{2q-k} (-1)^k x^k
    std::vector<Real> factor(static_cast<size_t>(two_q) + 1, Real(0));
    long binom = 1;
    for (long k = 0; k <= two_q; ++k) {
      Real c = Real(binom) * pow(mu[i], two_q - k);
      factor[static_cast<size_t>(k)] = (k % 2 == 0) ? c : -c;
      binom = binom * (two_q - k) / (k + 1);
    }
    std::vector<Real> out(p.coeffs.size() + static_cast<size_t>(two_q), Real(0));
    for (size_t a = 0; a < p.coeffs.size(); ++a)
      for (size_t b = 0; b < factor.size(); ++b) out[a + b] += p.coeffs[a] * factor[b];
    p.coeffs = std::move(out);
  }
  return p;
}

namespace {

MomentTable base_moments_raw(const WeightSpec& w, long n_max) {
  if (n_max < 0) throw std::invalid_argument("base_moments: n_max >= 0");
  MomentTable t;
  t.weight = w;
  t.symbol_applied = false;
  t.values.reserve(static_cast<size_t>(n_max) + 1);
  if (w.kind == WeightKind::Hermite) {
    Real ln2N = log(Real(2 * w.N));
    for (long n = 0; n <= n_max; ++n) {
      if (n % 2 == 1) {
        t.values.emplace_back(0);
      } else {
        Real s(n / 2);
        Real half = s + Real(0.5);
        t.values.push_back(exp(lngamma(half) - half * ln2N));
      }
    }
  } else {
    Real ln4N = log(Real(4 * w.N));
    for (long n = 0; n <= n_max; ++n) {
      Real e = w.alpha + Real(n + 1);
      t.values.push_back(exp(lngamma(e) - e * ln4N));
    }
  }
  return t;
}

}  // namespace

MomentTable base_moments(const WeightSpec& w, long n_max, const PrecisionContext& ctx) {
  auto guard = ctx.install();
  return base_moments_raw(w, n_max);
}

MomentTable symbol_moments(const MomentTable& base, const SymbolPoly& poly) {
  long deg = poly.degree();
  if (base.n_max() < deg)
    throw std::invalid_argument("symbol_moments: base table shorter than the symbol degree");
  MomentTable out;
  out.weight = base.weight;
  out.symbol_applied = true;
  long n_out = base.n_max() - deg;
  out.values.reserve(static_cast<size_t>(n_out) + 1);
  for (long n = 0; n <= n_out; ++n) {
    Real acc(0);
    for (long k = 0; k <= deg; ++k)
      acc += poly.coeffs[static_cast<size_t>(k)] * base.values[static_cast<size_t>(n + k)];
    out.values.push_back(acc);
  }
  return out;
}

namespace {

LogSigned hankel_det_raw(const MomentTable& moments, long M) {
  MatrixR a(M, M);
  for (long j = 0; j < M; ++j)
    for (long k = 0; k < M; ++k) a(j, k) = moments.values[static_cast<size_t>(j + k)];
  return log_det_lu(a);
}

}  // namespace

LogSigned hankel_det_log(const MomentTable& moments, long M, const PrecisionContext& ctx) {
  if (M < 1) throw std::invalid_argument("hankel_det_log: M >= 1");
  if (moments.n_max() < 2 * M - 2)
    throw std::invalid_argument("hankel_det_log: moments must cover index 2M-2");
  return escalate_log(ctx, [&] { return hankel_det_raw(moments, M); }, "hankel_det_log");
}

LogSigned h_multiple_integral_log(long M, const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (M < 1) throw std::invalid_argument("h_multiple_integral_log: M >= 1");
  if (!spec.q_is_natural())
    throw std::domain_error("h_multiple_integral_log: exact path requires natural q");
  auto build = [&] {
    SymbolPoly poly = symbol_poly(spec.q, spec.mu);
    MomentTable base = base_moments_raw(spec.weight, 2 * M - 2 + poly.degree());
    MomentTable moms = symbol_moments(base, poly);
    LogSigned det = hankel_det_raw(moms, M);
    return LogSigned::from_log(1, log_factorial(M)) * det;
  };
  return escalate_log(ctx, build, "h_multiple_integral_log");
}

LogSigned calH_oracle(const SymbolSpec& spec, const PrecisionContext& ctx) {
  if (!spec.q_is_natural()) throw std::domain_error("calH_oracle: exact path requires natural q");
  long p = spec.q_total().to_long();
  long N = spec.weight.N;
  if (N + p > 40)
    throw ConditioningError("calH_oracle: N + |q| > 40 exceeds the oracle's conditioning bound");
  LogSigned num = h_multiple_integral_log(N, spec, ctx);
  SymbolSpec empty(spec.weight, {}, {});
  LogSigned den = h_multiple_integral_log(N + p, empty, ctx);
  return num / den;
}

}  // namespace fhankel
