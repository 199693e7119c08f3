#pragma once

#include <cstddef>
#include <vector>

#include "conformal/errors.hpp"

namespace conformal::specfun {

// Gamma function; PoleError at non-positive integers.
double gamma(double x);

// Bessel functions of the first and second kind for real order and z >= 0
// (z > 0 for Y). Negative orders are accepted wherever the value is finite.
double bessel_j(double nu, double z);
double bessel_j_prime(double nu, double z);
double bessel_y(double nu, double z);

struct ZeroTable {
    double nu = 0.0;
    std::vector<double> zeros;  // ascending, k = 1..K
};

// First `count` positive zeros of J_nu, nu > -1. Zeros are located by a
// sign scan that starts from the previous zero, polished by find_root with
// the exact derivative, and cached per order.
ZeroTable bessel_zeros(double nu, std::size_t count);

// The k-th positive zero (k >= 1) of J_nu.
double bessel_zero(double nu, std::size_t k);

// McMahon's large-k estimate of the k-th zero of J_nu.
double mcmahon_zero(double nu, std::size_t k);

// Generalized hypergeometric series 0F1(;b;z) and 1F2(a;b1,b2;z). Heavy
// cancellation (alternating series with large |z|) is detected and the sum
// is redone in extended precision.
double hyp0f1(double b, double z);
double hyp1f2(double a, double b1, double b2, double z);

struct AiryPair {
    double ai;
    double bi;
};

// Ai and Bi for |x| <= 20 from their two 0F1 components, summed in
// extended precision.
AiryPair airy(double x);

}  // namespace conformal::specfun
