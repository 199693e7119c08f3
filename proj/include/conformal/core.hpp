#pragma once

#include <vector>

#include "conformal/numerics.hpp"

namespace conformal {

// Conformable order alpha in (0, 1].
class Order {
public:
    explicit Order(double alpha);
    double alpha() const { return alpha_; }
    // Bessel order alpha/(1+alpha) of the eigenproblem.
    double eta() const { return alpha_ / (1.0 + alpha_); }

private:
    double alpha_;
};

// Natural variable u = x^alpha/alpha and its inverse.
double to_natural(double x, const Order& ord);
double from_natural(double u, const Order& ord);

// x^{1-alpha} f'(x), using the exact derivative when one is attached.
// Difference stencils never cross 0; opt may add an upper domain edge.
double conformable_derivative(const numerics::SmoothFn& f, const Order& ord, double x,
                              numerics::DiffOptions opt = {});

// Right limit at 0, evaluated at x = 1e-8.
double conformable_derivative_at_zero(const numerics::SmoothFn& f, const Order& ord);

// int_lo^hi f(t) t^{alpha-1} dt, lo >= 0.
double conformable_integral(const numerics::RealFn& f, const Order& ord, numerics::Interval iv);

// (d/dx)[x^{1-alpha} f'] = x^{1-alpha} f'' + (1-alpha) x^{-alpha} f'.
double apply_A2alpha(const numerics::SmoothFn& f, const Order& ord, double x,
                     numerics::DiffOptions opt = {});

// D^alpha D^alpha f = x^{2-2alpha} f'' + (1-alpha) x^{1-2alpha} f'.
double apply_D2alpha(const numerics::SmoothFn& f, const Order& ord, double x,
                     numerics::DiffOptions opt = {});

// p y'' + q y' + r y = s in the natural variable.
struct SoldeSpec {
    numerics::RealFn p, q, r, s;
};

// P y'' + Q y' + R y = S in x.
struct ConformableSolde {
    numerics::RealFn P, Q, R, S;
};

ConformableSolde translate_solde(const SoldeSpec& spec, const Order& ord);

// max over grid of |P y'' + Q y' + R y - S|.
double solde_residual(const ConformableSolde& eq, const numerics::SmoothFn& y,
                      const std::vector<double>& grid, numerics::DiffOptions opt = {});

// u^2 y'' + u y' + (u^2 - v^2) y = 0.
SoldeSpec bessel_solde(double v);
// u y'' + b y' - y = 0, solved by 0F1(;b;u).
SoldeSpec confluent_limit_solde(double b);
// y'' - u y = 0.
SoldeSpec airy_solde();

}  // namespace conformal
