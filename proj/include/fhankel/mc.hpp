#pragma once

#include <cstdint>
#include <vector>

#include "fhankel/ensembles.hpp"

namespace fhankel {

// Eigenvalues (ascending) of one draw from the matrix ensemble with joint
// eigenvalue density |Delta|^2 prod exp(-2 N x^2): Hermitian matrix with
// diagonal variance 1/(4N) and off-diagonal re/im variance 1/(8N) each.
std::vector<double> sample_gue_spectrum(long N, std::uint64_t seed);

struct McResult {
  double mean = 0;
  double stderr_of_mean = 0;
  long samples = 0;
};

// Sample mean and standard error of prod_i prod_l |mu_i - lambda_l|^{2 q_i},
// accumulated in log space per sample and exponentiated after centering.
// Hermite weight only; 2 q_i must be a nonnegative integer. Deterministic in
// the seed regardless of thread count.
McResult mc_expectation(const SymbolSpec& spec, long samples, std::uint64_t seed,
                        int threads = 0);

}  // namespace fhankel
