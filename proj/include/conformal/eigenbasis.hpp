#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "conformal/core.hpp"
#include "conformal/numerics.hpp"

namespace conformal {

// Orthonormal eigenfunctions of A2alpha on [0,1] with y(0) = y(1) = 0:
// J_n(x) = x^{alpha/2} J_eta(z_n x^{(1+alpha)/2}) / D_n, z_n the n-th zero of
// J_eta, D_n^2 = (eta-1) J_{eta-1}(z_n) J_{eta+1}(z_n).
class JBasis {
public:
    explicit JBasis(Order ord, std::size_t max_n = 32);

    const Order& order() const { return ord_; }
    std::size_t max_n() const { return max_n_; }

    double zero(std::size_t n) const;          // z_n
    double denominator(std::size_t n) const;   // D_n
    double eval(std::size_t n, double x) const;
    double derivative(std::size_t n, double x) const;
    double second_derivative(std::size_t n, double x) const;
    // Function object with exact first and second derivatives.
    numerics::SmoothFn smooth(std::size_t n) const;
    double eigenvalue(std::size_t n) const;   // (1+alpha)^2 z_n^2 / 4

    // int_0^1 f dx for integrands that behave like a product of basis
    // functions at 0 (substitution x = t^{2/(1+alpha)}).
    double integrate(const numerics::RealFn& f, const std::vector<double>& breakpoints = {}) const;

private:
    struct Cache;
    void check_index(std::size_t n) const;
    const Cache& cache() const;

    Order ord_;
    std::size_t max_n_;
    std::shared_ptr<Cache> cache_;
};

// Position of the k-th interior zero of J_n: (z_k/z_n)^{2/(1+alpha)}.
double j_zero_position(const JBasis& basis, std::size_t n, std::size_t k);

struct ScalingFactors {
    double s;
    double amplitude;  // N_s with N_s J_n(s x) = J_{n+1}(x)
};
ScalingFactors scaling_factors(const JBasis& basis, std::size_t n);
// The amplitude factor in the printed form sqrt(s^{-1/2} P_n / P_{n+1}),
// P = J_{eta-1} J_{eta+1} at the zero; kept for comparison only.
double scaling_amplitude_printed(const JBasis& basis, std::size_t n);

struct MomentStats {
    std::vector<double> moments;  // M(1..max_m)
    double std_dev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};
// Moments of the density J_n^2 and its standardized central moments.
MomentStats moment_stats(const JBasis& basis, std::size_t n, std::size_t max_m = 4);

// Integral of J_n^2 between consecutive zeros k and k+1 (0 and n are the ends).
double interzero_area(const JBasis& basis, std::size_t n, std::size_t k);

struct SeriesExpansion {
    double alpha = 1.0;
    std::vector<double> coefficients;  // a_1..a_N
    std::string target_description;
};
SeriesExpansion expand(const JBasis& basis, const numerics::RealFn& f, std::size_t count,
                       const std::vector<double>& breakpoints = {},
                       std::string description = {});
double series_eval(const JBasis& basis, const SeriesExpansion& s, double x,
                   std::size_t terms = 0);

// c_n = int_0^1 z^gamma J_eta(z_n z) dz in closed form.
double fourier_bessel_cn(const JBasis& basis, double gamma_exp, std::size_t n);
// The same with the printed denominator 2^eta Gamma((gamma+eta+2)/2) Gamma(eta+1).
double fourier_bessel_cn_printed(const JBasis& basis, double gamma_exp, std::size_t n);
// Basis coefficient a_n of z^{eta+gamma-1} (z = x^{(1+alpha)/2}): 2 c_n/((1+alpha) D_n).
double fourier_bessel_an(const JBasis& basis, double gamma_exp, std::size_t n);
// gamma for which z^{eta+gamma-1} = x^m.
double monomial_gamma(const Order& ord, double m);
double monomial_gamma_printed(const Order& ord, double m);

// J_n through the standard J-0F1 identity.
double j_eval_hyp(const JBasis& basis, std::size_t n, double x);
// The printed 0F1 form (2^2 in place of 2^eta).
double j_eval_hyp_printed(const JBasis& basis, std::size_t n, double x);

}  // namespace conformal
