#pragma once

// Brute-force quadrature oracles for the eigenvalue integrals. Test-only:
// independent of the moment/determinant code paths they validate.

#include "fhankel/ensembles.hpp"
#include "fhankel/real.hpp"

namespace fhankel::oracles {

// M-fold integral of |Delta_M|^2 prod_l w(x_l) prod_i |mu_i - x_l|^{2 q_i}
// by tensor Gauss-Legendre (Laguerre via the substitution x = u^2), M <= 2.
Real h_bruteforce(long M, const SymbolSpec& spec, int nodes_per_dim = 320);

// Gaussian Selberg integral int Delta_p^2 prod exp(-a x^2), p = 2 in high
// precision, p = 3 in double.
Real z2_bruteforce(const Real& a, int nodes_per_dim = 240);
double z3_bruteforce(double a, int nodes_per_dim = 72);

}  // namespace fhankel::oracles
