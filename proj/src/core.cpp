#include "conformal/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace conformal {

namespace {

// Closest approach to 0 at which finite differences are trusted.
constexpr double kMinFdX = 1e-5;

numerics::DiffOptions positive_domain(numerics::DiffOptions opt) {
    if (!opt.domain_lo) opt.domain_lo = 0.0;
    return opt;
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(what) + ": x must be positive and finite");
}

}  // namespace

Order::Order(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("Order: alpha must lie in (0, 1], got " + std::to_string(alpha));
}

double to_natural(double x, const Order& ord) {
    if (x < 0.0) throw DomainError("to_natural: negative argument");
    return std::pow(x, ord.alpha()) / ord.alpha();
}

double from_natural(double u, const Order& ord) {
    if (u < 0.0) throw DomainError("from_natural: negative argument");
    return std::pow(ord.alpha() * u, 1.0 / ord.alpha());
}

double conformable_derivative(const numerics::SmoothFn& f, const Order& ord, double x,
                              numerics::DiffOptions opt) {
    require_positive(x, "conformable_derivative");
    const double a = ord.alpha();
    if (!f.df && x < kMinFdX && a < 1.0)
        throw NonFinite("conformable_derivative: x too close to 0 for a difference stencil");
    const double v = std::pow(x, 1.0 - a) * f.d1(x, positive_domain(opt));
    if (!std::isfinite(v)) throw NonFinite("conformable_derivative: non-finite value");
    return v;
}

double conformable_derivative_at_zero(const numerics::SmoothFn& f, const Order& ord) {
    constexpr double x0 = 1e-8;
    const double a = ord.alpha();
    const double d = f.df ? f.df(x0) : numerics::differentiate(f.f, x0, 1, {0.0, {}, 1e-9});
    const double v = std::pow(x0, 1.0 - a) * d;
    if (!std::isfinite(v)) throw NonFinite("conformable_derivative_at_zero: non-finite value");
    return v;
}

double conformable_integral(const numerics::RealFn& f, const Order& ord, numerics::Interval iv) {
    if (iv.lo < 0.0) throw DomainError("conformable_integral: lower limit must be >= 0");
    const double a = ord.alpha();
    auto w = [&](double t) { return f(t) * std::pow(t, a - 1.0); };
    numerics::EdgeBehaviour edges;
    if (iv.lo == 0.0 && a < 1.0) edges.lo_exponent = a - 1.0;
    return numerics::integrate(w, iv, numerics::default_tolerance(), edges).value;
}

double apply_A2alpha(const numerics::SmoothFn& f, const Order& ord, double x,
                     numerics::DiffOptions opt) {
    require_positive(x, "apply_A2alpha");
    const double a = ord.alpha();
    if ((!f.df || !f.d2f) && x < kMinFdX)
        throw NonFinite("apply_A2alpha: x too close to 0 for a difference stencil");
    opt = positive_domain(opt);
    const double v = std::pow(x, 1.0 - a) * f.d2(x, opt) + (1.0 - a) * std::pow(x, -a) * f.d1(x, opt);
    if (!std::isfinite(v)) throw NonFinite("apply_A2alpha: non-finite value");
    return v;
}

double apply_D2alpha(const numerics::SmoothFn& f, const Order& ord, double x,
                     numerics::DiffOptions opt) {
    require_positive(x, "apply_D2alpha");
    const double a = ord.alpha();
    if ((!f.df || !f.d2f) && x < kMinFdX)
        throw NonFinite("apply_D2alpha: x too close to 0 for a difference stencil");
    opt = positive_domain(opt);
    const double v = std::pow(x, 2.0 - 2.0 * a) * f.d2(x, opt) +
                     (1.0 - a) * std::pow(x, 1.0 - 2.0 * a) * f.d1(x, opt);
    if (!std::isfinite(v)) throw NonFinite("apply_D2alpha: non-finite value");
    return v;
}

ConformableSolde translate_solde(const SoldeSpec& spec, const Order& ord) {
    const double a = ord.alpha();
    auto nat = [a](double x) { return std::pow(x, a) / a; };
    ConformableSolde out;
    out.P = [p = spec.p, nat, a](double x) { return p(nat(x)) * std::pow(x, 2.0 - 2.0 * a); };
    out.Q = [p = spec.p, q = spec.q, nat, a](double x) {
        const double u = nat(x);
        return (1.0 - a) * std::pow(x, 1.0 - 2.0 * a) * p(u) + std::pow(x, 1.0 - a) * q(u);
    };
    out.R = [r = spec.r, nat](double x) { return r(nat(x)); };
    out.S = [s = spec.s, nat](double x) { return s ? s(nat(x)) : 0.0; };
    return out;
}

double solde_residual(const ConformableSolde& eq, const numerics::SmoothFn& y,
                      const std::vector<double>& grid, numerics::DiffOptions opt) {
    double worst = 0.0;
    opt = positive_domain(opt);
    for (double x : grid) {
        require_positive(x, "solde_residual");
        const double r = eq.P(x) * y.d2(x, opt) + eq.Q(x) * y.d1(x, opt) + eq.R(x) * y(x) - eq.S(x);
        if (!std::isfinite(r)) throw NonFinite("solde_residual: non-finite residual");
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

SoldeSpec bessel_solde(double v) {
    return {[](double u) { return u * u; }, [](double u) { return u; },
            [v](double u) { return u * u - v * v; }, [](double) { return 0.0; }};
}

SoldeSpec confluent_limit_solde(double b) {
    return {[](double u) { return u; }, [b](double) { return b; }, [](double) { return -1.0; },
            [](double) { return 0.0; }};
}

SoldeSpec airy_solde() {
    return {[](double) { return 1.0; }, [](double) { return 0.0; }, [](double u) { return -u; },
            [](double) { return 0.0; }};
}

}  // namespace conformal
