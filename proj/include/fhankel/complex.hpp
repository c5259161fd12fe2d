#pragma once

#include "fhankel/real.hpp"

namespace fhankel {

// Complex number over Real. Just the operations the contour integrals and
// saddle-point bookkeeping need; principal branches throughout.
struct Cplx {
  Real re, im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r) : re(std::move(r)), im(0) {}
  Cplx(double r) : re(r), im(0) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Cplx i() { return Cplx(Real(0), Real(1)); }

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator*(const Real& s, const Cplx& b) { return {s * b.re, s * b.im}; }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
};

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real norm(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return sqrt(norm(z)); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

inline Cplx exp(const Cplx& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// Principal log: Im in (-pi, pi].
inline Cplx log(const Cplx& z) { return {Real(0.5) * log(norm(z)), arg(z)}; }

inline Cplx pow(const Cplx& z, long e) {
  if (e == 0) return Cplx(Real(1));
  long n = e < 0 ? -e : e;
  Cplx acc(Real(1)), base = z;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (e < 0) return Cplx(Real(1)) / acc;
  return acc;
}

// Principal power with real exponent.
inline Cplx pow(const Cplx& z, const Real& e) { return exp(Cplx(e) * log(z)); }

}  // namespace fhankel
