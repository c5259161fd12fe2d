#include "fhankel/gamma.hpp"

#include <gmp.h>

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace fhankel {

Real lngamma(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("log_gamma: requires x > 0");
  return Real::lift(mpfr_lngamma, x);
}

Real log_gamma(const Real& x, const PrecisionContext& ctx) {
  auto guard = ctx.install();
  return lngamma(x);
}

Real log_factorial(long n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return lngamma(Real(n + 1));
}

Real log_binomial(long n, long k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

namespace {

// Exact Bernoulli numbers via the defining recurrence
//   sum_{j=0}^{n} C(n+1, j) B_j = 0,  B_0 = 1.
class BernoulliTable {
public:
  ~BernoulliTable() {
    for (auto& q : table_) mpq_clear(q);
  }

  // Returns B_n rounded to the current working precision.
  Real get(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n);
    Real r;
    mpfr_set_q(r.get(), table_[n], MPFR_RNDN);
    return r;
  }

private:
  void extend(unsigned n) {
    while (table_.size() <= n) {
      unsigned m = static_cast<unsigned>(table_.size());
      table_.emplace_back();
      mpq_t& b = table_.back();
      mpq_init(b);
      if (m == 0) {
        mpq_set_ui(b, 1, 1);
        continue;
      }
      mpq_t acc, term;
      mpq_init(acc);
      mpq_init(term);
      mpz_t binom;
      mpz_init(binom);
      for (unsigned j = 0; j + 1 <= m; ++j) {
        mpz_bin_uiui(binom, m + 1, j);
        mpq_set_z(term, binom);
        mpq_mul(term, term, table_[j]);
        mpq_add(acc, acc, term);
      }
      mpq_set_si(term, -1, m + 1);
      mpq_mul(b, acc, term);
      mpq_canonicalize(b);
      mpz_clear(binom);
      mpq_clear(term);
      mpq_clear(acc);
    }
  }

  std::mutex mu_;
  std::deque<mpq_t> table_;  // deque: mpq_t is an array type and must not relocate
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

// zeta'(2) by Euler-Maclaurin on f(x) = ln(x)/x^2.
Real zeta_prime_2() {
  const mpfr_prec_t w = default_precision();
  const long m = std::max<long>(64, static_cast<long>(w) / 4);
  const Real eps = ldexp(Real(1), -static_cast<long>(w) - 8);

  Real s(0);
  for (long n = 2; n < m; ++n) {
    Real rn(n);
    s += log(rn) / (rn * rn);
  }
  Real rm(m), logm = log(rm);
  s += (logm + 1) / rm;           // integral over [m, inf)
  s += logm / (rm * rm) / 2;      // boundary term f(m)/2

  // f^(j)(x) = x^{-2-j} (A ln x + C); advance order by order and pick off
  // the odd-order derivatives Euler-Maclaurin needs.
  Real A(1), C(0);
  Real xpow = Real(1) / (rm * rm);
  Real factorial(1);
  long j = 0;
  Real prev_mag(0);
  bool have_prev = false;
  for (long k = 1; k < 4096; ++k) {
    while (j < 2 * k - 1) {
      Real A1 = Real(-(2 + j)) * A;
      Real C1 = A + Real(-(2 + j)) * C;
      A = A1;
      C = C1;
      xpow /= rm;
      ++j;
      factorial *= Real(j);
    }
    Real deriv = xpow * (A * logm + C);
    Real term = bernoulli_real(static_cast<unsigned>(2 * k)) / (factorial * Real(2 * k)) * deriv;
    s -= term;
    Real mag = abs(term);
    if (mag < eps) break;
    if (have_prev && mag > prev_mag)
      throw std::runtime_error("zeta_prime_2: Euler-Maclaurin did not converge");
    prev_mag = mag;
    have_prev = true;
  }
  return -s;
}

}  // namespace

Real bernoulli_real(unsigned n) { return bernoulli_table().get(n); }

Real glaisher_log() {
  static std::mutex mu;
  static std::map<mpfr_prec_t, Real> cache;
  const mpfr_prec_t p = default_precision();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  Real value;
  {
    ScopedPrecision sp(p + 64);
    Real pi = const_pi();
    Real zp2 = zeta_prime_2();
    value = (const_euler() + log(2 * pi)) / 12 - zp2 / (2 * pi * pi);
  }
  Real rounded = value + Real(0);  // round into precision p
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(p, rounded);
  return rounded;
}

namespace {

// Large-argument expansion of ln G(z+1) (the double-Gamma analogue of
// Stirling), valid for z well away from the origin:
//   z^2/4 + z lnGamma(z+1) - (z(z+1)/2 + 1/12) ln z - ln A
//   + sum_{k>=1} B_{2k+2} / (2k (2k+1) (2k+2) z^{2k}).
Real barnes_asym_lnG_at(const Real& arg_x) {
  const mpfr_prec_t w = default_precision();
  const Real eps = ldexp(Real(1), -static_cast<long>(w) - 8);
  Real z = arg_x - 1;
  Real lz = log(z);
  Real acc = z * z / 4 + z * lngamma(arg_x) - (z * (z + 1) / 2 + Real(1) / 12) * lz - glaisher_log();
  Real z2 = z * z;
  Real zpow = z2;
  Real prev_mag(0);
  bool have_prev = false;
  for (unsigned k = 1; k < 4096; ++k) {
    Real denom = Real(2 * k) * Real(2 * k + 1) * Real(2 * k + 2);
    Real term = bernoulli_real(2 * k + 2) / (denom * zpow);
    acc += term;
    Real mag = abs(term);
    if (mag < eps) return acc;
    if (have_prev && mag > prev_mag)
      throw std::runtime_error("barnes_g_log: asymptotic series diverged (shift too small)");
    prev_mag = mag;
    have_prev = true;
    zpow *= z2;
  }
  throw std::runtime_error("barnes_g_log: asymptotic series did not converge");
}

}  // namespace

Real barnes_g_log_raw(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("barnes_g_log: requires x > 0");
  const mpfr_prec_t w = default_precision();
  if (x.is_integer() && x < Real(4096)) {
    // ln G(n) = sum_{k=1}^{n-2} ln k!
    long n = x.to_long();
    Real acc(0);
    for (long k = 2; k <= n - 2; ++k) acc += log_factorial(k);
    return acc;
  }
  const long z_min = static_cast<long>(0.12 * static_cast<double>(w)) + 16;
  Real shift_needed = Real(z_min + 1) - x;
  long n = shift_needed.sign() > 0 ? shift_needed.to_long() + 1 : 0;
  Real lnG = barnes_asym_lnG_at(x + Real(n));
  for (long j = 0; j < n; ++j) lnG -= lngamma(x + Real(j));
  return lnG;
}

LogSigned barnes_g_log(const Real& x, const PrecisionContext& ctx) {
  ScopedPrecision sp(ctx.bits + 64);
  Real lnG = barnes_g_log_raw(x);
  ScopedPrecision out(ctx.bits);
  return LogSigned::from_log(1, lnG + Real(0));
}

}  // namespace fhankel
