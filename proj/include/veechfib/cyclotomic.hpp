#pragma once

#include "veechfib/polynomial.hpp"

namespace veechfib {

long euler_phi(long n);
IntPolynomial cyclotomic_polynomial(long n);

// Minimal polynomial of 2cos(2*pi/N), N >= 1. Built from Phi_N through
// x^(phi(N)/2) psi(x + 1/x) = Phi_N(x); N = 1, 2 give x - 2 and x + 2.
IntPolynomial minpoly_two_cos_two_pi_over(long N);

// Minimal polynomial of 2cos(pi/n), n >= 3.
IntPolynomial minpoly_two_cos(long n);

}  // namespace veechfib
