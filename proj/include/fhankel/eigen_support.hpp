#pragma once

#include <Eigen/Core>

#include "fhankel/real.hpp"

// Glue so Eigen dense types can carry the MPFR-backed scalar.

namespace Eigen {

template <>
struct NumTraits<fhankel::Real> : GenericNumTraits<fhankel::Real> {
  using Real = fhankel::Real;
  using NonInteger = fhankel::Real;
  using Nested = fhankel::Real;
  using Literal = long;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32,
  };

  static inline fhankel::Real epsilon() {
    return fhankel::ldexp(fhankel::Real(1), -static_cast<long>(fhankel::default_precision()) + 1);
  }
  static inline fhankel::Real dummy_precision() {
    return fhankel::ldexp(fhankel::Real(1), -static_cast<long>(fhankel::default_precision()) / 2);
  }
  static inline fhankel::Real highest() { return fhankel::exp(fhankel::Real(1e18)); }
  static inline fhankel::Real lowest() { return -highest(); }
  static inline int digits10() { return static_cast<int>(fhankel::default_precision() * 0.301); }
};

}  // namespace Eigen

namespace fhankel {

using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

}  // namespace fhankel
