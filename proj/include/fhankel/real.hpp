#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fhankel {

// Working mantissa precision for newly created values, thread-local so
// concurrent evaluations at different precisions do not interfere.
mpfr_prec_t default_precision() noexcept;
void set_default_precision(mpfr_prec_t bits) noexcept;

// RAII guard: raises (or lowers) the thread's working precision for a scope.
class ScopedPrecision {
public:
  explicit ScopedPrecision(mpfr_prec_t bits) : saved_(default_precision()) {
    set_default_precision(bits);
  }
  ~ScopedPrecision() { set_default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
  mpfr_prec_t saved_;
};

struct PrecisionContext {
  long bits = 256;          // working mantissa precision
  int escalation_factor = 2;

  PrecisionContext() = default;
  PrecisionContext(long b, int esc = 2) : bits(b), escalation_factor(esc) {
    if (bits < 64) throw std::invalid_argument("PrecisionContext: bits must be >= 64");
    if (escalation_factor < 2) throw std::invalid_argument("PrecisionContext: escalation_factor must be >= 2");
  }

  ScopedPrecision install() const { return ScopedPrecision(bits); }
};

// Arbitrary-precision real number backed by MPFR. Arithmetic results are
// rounded to the thread's current default precision; operands of any
// precision mix freely (an MPFR value is an exact binary number).
class Real {
public:
  Real() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
  Real(double d) { mpfr_init2(v_, default_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(int i) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(long i) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(unsigned i) { mpfr_init2(v_, default_precision()); mpfr_set_ui(v_, i, MPFR_RNDN); }
  Real(unsigned long i) { mpfr_init2(v_, default_precision()); mpfr_set_ui(v_, i, MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  // Decimal string, rounded into the current working precision.
  static Real from_string(const std::string& s) {
    Real r;
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("Real: unparsable number '" + s + "'");
    return r;
  }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const noexcept { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  std::string to_string(int significant_digits = 20) const;

  Real& operator+=(const Real& o) { return apply2(mpfr_add, o); }
  Real& operator-=(const Real& o) { return apply2(mpfr_sub, o); }
  Real& operator*=(const Real& o) { return apply2(mpfr_mul, o); }
  Real& operator/=(const Real& o) { return apply2(mpfr_div, o); }

  friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binop(mpfr_div, a, b); }
  friend Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a) { return a; }

  friend bool operator==(const Real& a, const Real& b) noexcept { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) noexcept { return mpfr_equal_p(a.v_, b.v_) == 0; }
  friend bool operator<(const Real& a, const Real& b) noexcept { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) noexcept { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) noexcept { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) noexcept { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  // Unary MPFR functions lifted to Real; result at working precision.
  using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Real lift(unary_fn f, const Real& a) {
    Real r;
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

private:
  using binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(binary_fn f, const Real& a, const Real& b) {
    Real r;
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real& apply2(binary_fn f, const Real& o) {
    if (mpfr_get_prec(v_) < default_precision()) {
      Real r;
      f(r.v_, v_, o.v_, MPFR_RNDN);
      mpfr_swap(v_, r.v_);
    } else {
      f(v_, v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  mpfr_t v_;
};

inline Real abs(const Real& a) { return Real::lift(mpfr_abs, a); }
inline Real sqrt(const Real& a) { return Real::lift(mpfr_sqrt, a); }
inline Real exp(const Real& a) { return Real::lift(mpfr_exp, a); }
inline Real expm1(const Real& a) { return Real::lift(mpfr_expm1, a); }
inline Real log(const Real& a) { return Real::lift(mpfr_log, a); }
inline Real log1p(const Real& a) { return Real::lift(mpfr_log1p, a); }
inline Real sin(const Real& a) { return Real::lift(mpfr_sin, a); }
inline Real cos(const Real& a) { return Real::lift(mpfr_cos, a); }
inline Real asin(const Real& a) { return Real::lift(mpfr_asin, a); }
inline Real floor(const Real& a) {
  Real r;
  mpfr_floor(r.get(), a.get());
  return r;
}
inline Real round(const Real& a) {
  Real r;
  mpfr_round(r.get(), a.get());
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& a, long e) {
  Real r;
  mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, const Real& e) {
  Real r;
  mpfr_pow(r.get(), a.get(), e.get(), MPFR_RNDN);
  return r;
}

inline Real ldexp(const Real& a, long e) {
  Real r;
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

inline Real const_pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
inline Real const_euler() {
  Real r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}
inline Real const_log2() {
  Real r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

inline bool isnan(const Real& a) noexcept { return a.is_nan(); }
inline bool isinf(const Real& a) noexcept { return a.is_inf(); }
inline bool isfinite(const Real& a) noexcept { return !a.is_nan() && !a.is_inf(); }

// Riemann zeta on the real line (test oracles only).
inline Real zeta(const Real& a) { return Real::lift(mpfr_zeta, a); }

}  // namespace fhankel
