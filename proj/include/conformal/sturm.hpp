#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conformal/core.hpp"
#include "conformal/numerics.hpp"

namespace conformal {

enum class SturmVariant {
    plain,     // S y = (x^{1-alpha} x^p y')'
    weighted,  // x^{-p} S y
};

struct SturmSpec {
    Order alpha;
    Order beta;
    double p = 0.0;  // f(x) = x^p
    SturmVariant variant = SturmVariant::plain;
};

// Self-adjoint form x^{beta-1} D^beta f D^alpha y
// = x^{1-alpha+p} y'' + (1-alpha+p) x^{p-alpha} y', divided by x^p when weighted.
double apply_sturm(const SturmSpec& spec, const numerics::SmoothFn& y, double x,
                   numerics::DiffOptions opt = {});

// D^beta [f D^alpha y] by direct composition of difference quotients.
double apply_raw_sturm(const SturmSpec& spec, const numerics::RealFn& y, double x,
                       numerics::DiffOptions opt = {});

// Closed-form solutions of S y + Lambda y = 0 (Lambda > 0), S y = 0 (Lambda = 0).
struct SturmSolution {
    int case_id = 0;
    std::string description;
    numerics::RealFn branch_a;
    numerics::RealFn branch_b;
    numerics::RealFn y;  // A branch_a + B branch_b
};

SturmSolution case_solution(const SturmSpec& spec, double lambda, double a, double b);

// Particular plus homogeneous solution of S y = source (plain variant).
SturmSolution case2_forced(const SturmSpec& spec, double source, double a, double b);

// max over grid of |S y + Lambda y| (weighted variant divides S by x^p).
double sturm_residual(const SturmSpec& spec, double lambda, const numerics::RealFn& y,
                      const std::vector<double>& grid, numerics::DiffOptions opt = {});

// Zero-boundary eigenfunctions for f = x^p, p < alpha:
// y_n = B x^{(alpha-p)/2} J_nu(z_n x^{kappa/2}), kappa = 1+alpha-p,
// nu = (alpha-p)/kappa, Lambda_n = (kappa z_n / 2)^2.
struct SturmEigen {
    double lambda;
    double zero;
    double order;
    double kappa;
    double normalization;      // B from the closed form
    double numeric_norm_sq;    // int_0^1 y^2 by quadrature
    numerics::RealFn y;
};

SturmEigen case4_eigensystem(const SturmSpec& spec, std::size_t n);

struct LambdaDependenceReport {
    double order1, order2;
    double exponent1, exponent2;
    double max_abs_difference;  // over n = 1..3 on a 201-point grid
};

LambdaDependenceReport solution_lambda_dependence_check(double alpha1, double p1, double alpha2,
                                                        double p2);

// Behaviour of the Case 4 form for p beyond alpha.
struct ConjectureEntry {
    double p;
    double lambda_shift;   // alpha - p
    double kappa;
    double order;          // (alpha-p)/|kappa|
    double residual;       // ODE residual of both branches at Lambda = 10
    bool vanishes_at_zero; // does some branch satisfy y(0+) = 0
};

std::vector<ConjectureEntry> sturm_conjecture_report(double alpha,
                                                     const std::vector<double>& p_values);

}  // namespace conformal
