#pragma once

#include <stdexcept>

#include "fhankel/real.hpp"

namespace fhankel {

// Sign plus natural log of magnitude. Products and ratios of quantities
// growing like exp(c N^2) stay representable and composable; the value is
// zero iff sign == 0 (log_mag is then ignored).
class LogSigned {
public:
  LogSigned() : sign_(0), log_(0) {}

  static LogSigned zero() { return LogSigned(); }
  static LogSigned one() { return from_log(1, Real(0)); }

  static LogSigned from_log(int sign, Real log_mag) {
    LogSigned r;
    r.sign_ = (sign > 0) - (sign < 0);
    if (r.sign_ != 0) r.log_ = std::move(log_mag);
    return r;
  }

  static LogSigned from_value(const Real& x) {
    if (x.is_zero()) return zero();
    return from_log(x.sign(), log(abs(x)));
  }

  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  const Real& log_mag() const {
    if (sign_ == 0) throw std::domain_error("LogSigned: log of zero");
    return log_;
  }

  Real value() const {
    if (sign_ == 0) return Real(0);
    return Real(sign_) * exp(log_);
  }
  double value_d() const { return value().to_double(); }

  LogSigned& operator*=(const LogSigned& o) {
    if (sign_ == 0 || o.sign_ == 0) {
      sign_ = 0;
      log_ = Real(0);
    } else {
      sign_ *= o.sign_;
      log_ += o.log_;
    }
    return *this;
  }
  LogSigned& operator/=(const LogSigned& o) {
    if (o.sign_ == 0) throw std::domain_error("LogSigned: division by zero");
    if (sign_ != 0) {
      sign_ *= o.sign_;
      log_ -= o.log_;
    }
    return *this;
  }

  friend LogSigned operator*(LogSigned a, const LogSigned& b) { return a *= b; }
  friend LogSigned operator/(LogSigned a, const LogSigned& b) { return a /= b; }
  friend LogSigned operator-(LogSigned a) {
    a.sign_ = -a.sign_;
    return a;
  }

  // x^e for real exponent; requires a positive base unless e is an integer.
  LogSigned pow(const Real& e) const {
    if (sign_ == 0) {
      if (e.sign() <= 0) throw std::domain_error("LogSigned: 0^e with e <= 0");
      return zero();
    }
    if (sign_ < 0 && !e.is_integer())
      throw std::domain_error("LogSigned: negative base with non-integer exponent");
    int s = sign_;
    if (s < 0) {
      long ei = e.to_long();
      s = (ei % 2 == 0) ? 1 : -1;
    }
    return from_log(s, log_ * e);
  }

private:
  int sign_;
  Real log_;
};

inline LogSigned pow(const LogSigned& b, const Real& e) { return b.pow(e); }
inline LogSigned exp_log(const Real& log_mag) { return LogSigned::from_log(1, log_mag); }

}  // namespace fhankel
