#pragma once

#include <string>

#include "fhankel/eigen_support.hpp"
#include "fhankel/errors.hpp"
#include "fhankel/log_signed.hpp"
#include "fhankel/real.hpp"

namespace fhankel {

// Sign and log-magnitude of det(A) by partially pivoted elimination,
// destroying A. Works for any scalar with abs() and ordering.
template <class Scalar>
LogSigned log_det_lu(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  const long n = a.rows();
  if (n == 0) return LogSigned::one();
  int sign = 1;
  Real log_acc(0);
  for (long c = 0; c < n; ++c) {
    long piv = c;
    for (long r = c + 1; r < n; ++r)
      if (abs(a(r, c)) > abs(a(piv, c))) piv = r;
    if (a(piv, c).is_zero()) return LogSigned::zero();
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      sign = -sign;
    }
    const Scalar& p = a(c, c);
    if (p.sign() < 0) sign = -sign;
    log_acc += log(abs(p));
    for (long r = c + 1; r < n; ++r) {
      Scalar f = a(r, c) / p;
      for (long k = c + 1; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return LogSigned::from_log(sign, log_acc);
}

inline bool log_signed_agree(const LogSigned& a, const LogSigned& b, long agree_bits) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.sign() != b.sign()) return false;
  Real tol = ldexp(max(Real(1), abs(b.log_mag())), -agree_bits);
  return abs(a.log_mag() - b.log_mag()) <= tol;
}

// Cancellation-prone computations are recomputed at escalated precision and
// accepted once two consecutive rounds agree to 2^{-bits/4}; after three
// escalations the result is rejected as ill-conditioned.
template <class F>
LogSigned escalate_log(const PrecisionContext& ctx, F&& f, const std::string& what) {
  long bits = ctx.bits;
  LogSigned prev;
  {
    ScopedPrecision guard(bits);
    prev = f();
  }
  for (int round = 0; round < 3; ++round) {
    bits *= ctx.escalation_factor;
    ScopedPrecision guard(bits);
    LogSigned cur = f();
    if (log_signed_agree(prev, cur, ctx.bits / 4)) return cur;
    prev = cur;
  }
  throw ConditioningError(what + ": no agreement after precision escalation to " +
                          std::to_string(bits) + " bits");
}

}  // namespace fhankel
