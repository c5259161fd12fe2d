#pragma once

#include "fhankel/log_signed.hpp"
#include "fhankel/real.hpp"

namespace fhankel {

// ln Gamma(x) for x > 0, accurate to the context's working precision.
Real log_gamma(const Real& x, const PrecisionContext& ctx);

// Same, at the thread's current working precision (for internal composition).
Real lngamma(const Real& x);

// ln n! and ln C(n, k) at the current working precision.
Real log_factorial(long n);
Real log_binomial(long n, long k);

// Bernoulli number B_n (exact rational, rounded to the working precision).
Real bernoulli_real(unsigned n);

// ln of the Glaisher-Kinkelin constant A, cached per working precision.
// A enters the large-argument expansion of Barnes' G.
Real glaisher_log();

// ln G(x) for x > 0 under the standard convention G(1) = G(2) = 1,
// G(z+1) = Gamma(z) G(z). Integer arguments are an exact product of
// log-Gammas; non-integer arguments are shifted up by the recurrence until
// the large-argument expansion converges, then shifted back.
LogSigned barnes_g_log(const Real& x, const PrecisionContext& ctx);

// Internal form of the above at the current working precision.
Real barnes_g_log_raw(const Real& x);

}  // namespace fhankel
