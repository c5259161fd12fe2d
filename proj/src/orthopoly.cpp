#include "fhankel/orthopoly.hpp"

#include <stdexcept>

namespace fhankel {

DerivStream ds_zero(long k_max) {
  DerivStream s;
  s.values.assign(static_cast<size_t>(k_max) + 1, Real(0));
  return s;
}

DerivStream ds_const(const Real& c, long k_max) {
  DerivStream s = ds_zero(k_max);
  s.values[0] = c;
  return s;
}

DerivStream ds_mul(const DerivStream& a, const DerivStream& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("ds_mul: stream lengths differ");
  long k_max = a.k_max();
  DerivStream c = ds_zero(k_max);
  // (fg)^(n) = sum_k C(n,k) f^(k) g^(n-k); orders stay small, binomials fit a long
  for (long n = 0; n <= k_max; ++n) {
    Real acc(0);
    long binom = 1;
    for (long k = 0; k <= n; ++k) {
      acc += Real(binom) * a.values[static_cast<size_t>(k)] * b.values[static_cast<size_t>(n - k)];
      binom = binom * (n - k) / (k + 1);
    }
    c.values[static_cast<size_t>(n)] = acc;
  }
  return c;
}

namespace {

// g = (x - a) f as streams: g^(n) = (mu - a) f^(n) + n f^(n-1).
DerivStream shifted_x_mul(const Real& mu_minus_a, const DerivStream& f) {
  long k_max = f.k_max();
  DerivStream g = ds_zero(k_max);
  for (long n = 0; n <= k_max; ++n) {
    g.values[static_cast<size_t>(n)] = mu_minus_a * f.values[static_cast<size_t>(n)];
    if (n > 0) g.values[static_cast<size_t>(n)] += Real(n) * f.values[static_cast<size_t>(n - 1)];
  }
  return g;
}

}  // namespace

Real recur_alpha(const WeightSpec& w, long k) {
  if (w.kind == WeightKind::Hermite) return Real(0);
  return (Real(2 * k + 1) + w.alpha) / Real(4 * w.N);
}

Real recur_beta(const WeightSpec& w, long k) {
  if (k < 1) throw std::invalid_argument("recur_beta: k >= 1");
  if (w.kind == WeightKind::Hermite) return Real(k) / Real(4 * w.N);
  return Real(k) * (Real(k) + w.alpha) / Real(16 * w.N * w.N);
}

std::vector<DerivStream> orthopoly_eval_derivs_range(const WeightSpec& w, long deg_lo, long deg_hi,
                                                     const Real& mu, long k_max) {
  if (deg_lo < 0 || deg_hi < deg_lo) throw std::invalid_argument("orthopoly: bad degree range");
  if (k_max < 0) throw std::invalid_argument("orthopoly: k_max >= 0");

  std::vector<DerivStream> out;
  out.reserve(static_cast<size_t>(deg_hi - deg_lo) + 1);

  DerivStream prev = ds_zero(k_max);           // pi_{-1} = 0
  DerivStream cur = ds_const(Real(1), k_max);  // pi_0 = 1
  if (deg_lo == 0) out.push_back(cur);
  for (long k = 0; k < deg_hi; ++k) {
    DerivStream next = shifted_x_mul(mu - recur_alpha(w, k), cur);
    if (k >= 1) {
      Real beta = recur_beta(w, k);
      for (long n = 0; n <= k_max; ++n)
        next.values[static_cast<size_t>(n)] -= beta * prev.values[static_cast<size_t>(n)];
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k + 1 >= deg_lo) out.push_back(cur);
  }
  return out;
}

DerivStream orthopoly_eval_derivs(const WeightSpec& w, long degree, const Real& mu, long k_max,
                                  const PrecisionContext& ctx) {
  auto guard = ctx.install();
  auto streams = orthopoly_eval_derivs_range(w, degree, degree, mu, k_max);
  return streams.front();
}

DerivStream hermite_inv_zeta_stream(long N, const Real& mu, long k_max) {
  DerivStream g = ds_zero(k_max);
  g.values[0] = exp(Real(-2 * N) * mu * mu);
  // g' = -4 N mu g  =>  g^(n+1) = -4N (mu g^(n) + n g^(n-1))
  for (long n = 0; n < k_max; ++n) {
    Real v = mu * g.values[static_cast<size_t>(n)];
    if (n > 0) v += Real(n) * g.values[static_cast<size_t>(n - 1)];
    g.values[static_cast<size_t>(n + 1)] = Real(-4 * N) * v;
  }
  return g;
}

}  // namespace fhankel
