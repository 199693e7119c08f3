#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "conformal/errors.hpp"

namespace conformal::numerics {

using RealFn = std::function<double(double)>;

struct Interval {
    double lo;
    double hi;
    Interval(double lo_, double hi_);
    double width() const { return hi - lo; }
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;
};

// Default tolerance, overridden by CONFORMAL_TOL when that variable holds a
// positive number (applied to both abs_tol and rel_tol).
Tolerance default_tolerance();

// Power-law behaviour (x - edge)^gamma, gamma > -1, declared at an endpoint.
struct EdgeBehaviour {
    std::optional<double> lo_exponent;
    std::optional<double> hi_exponent;
};

// Global adaptive Gauss-Kronrod 7/15 quadrature. A declared endpoint
// exponent gamma triggers the substitution x = edge + L*u^m,
// m = max(1, 2/(1+gamma)), which removes the leading singularity.
QuadResult integrate(const RealFn& f, Interval iv, Tolerance tol = default_tolerance(),
                     EdgeBehaviour edges = {});

// Sum of integrate() over the pieces cut at interior breakpoints (kinks,
// steps). Endpoint behaviour applies to the outer ends only.
QuadResult integrate_piecewise(const RealFn& f, double lo, double hi,
                               const std::vector<double>& breakpoints,
                               Tolerance tol = default_tolerance(), EdgeBehaviour edges = {});

// Bisection down to width 1e-6, then safeguarded Newton steps (at most 50)
// that never leave the current bracket. The returned bracket width is at
// most tol.abs_tol (plus a few ulps of |x|).
double find_root(const RealFn& f, Interval bracket, Tolerance tol = default_tolerance(),
                 const RealFn& derivative = nullptr);

struct DiffOptions {
    std::optional<double> domain_lo;
    std::optional<double> domain_hi;
    double initial_step = 0.0;  // 0 selects 0.1*max(|x|, 0.01)
};

// Ridders-Richardson extrapolated difference quotient. Central stencils are
// used unless x lies within one step of a declared domain edge, in which
// case a one-sided stencil pointing into the domain is used.
double differentiate(const RealFn& f, double x, int order, DiffOptions opt = {});

// A function with optional exact derivatives; missing derivatives fall back
// to differentiate().
struct SmoothFn {
    RealFn f;
    RealFn df;
    RealFn d2f;

    SmoothFn() = default;
    SmoothFn(RealFn f_, RealFn df_ = nullptr, RealFn d2f_ = nullptr)
        : f(std::move(f_)), df(std::move(df_)), d2f(std::move(d2f_)) {}
    template <class F, class = std::enable_if_t<std::is_invocable_r_v<double, F, double> &&
                                                !std::is_same_v<std::decay_t<F>, RealFn> &&
                                                !std::is_same_v<std::decay_t<F>, SmoothFn>>>
    SmoothFn(F fn) : f(std::move(fn)) {}

    double operator()(double x) const { return f(x); }
    double d1(double x, const DiffOptions& opt = {}) const;
    double d2(double x, const DiffOptions& opt = {}) const;
};

// Evenly spaced points including both ends.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace conformal::numerics
