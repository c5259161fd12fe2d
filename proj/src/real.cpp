#include "fhankel/real.hpp"

#include <cstdio>
#include <vector>

namespace fhankel {

namespace {
thread_local mpfr_prec_t g_default_prec = 256;
}

mpfr_prec_t default_precision() noexcept { return g_default_prec; }

void set_default_precision(mpfr_prec_t bits) noexcept {
  g_default_prec = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

std::string Real::to_string(int significant_digits) const {
  if (significant_digits < 2) significant_digits = 2;
  std::vector<char> buf(significant_digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
  return std::string(buf.data());
}

}  // namespace fhankel
