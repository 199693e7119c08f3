#include "conformal/sturm.hpp"

#include <algorithm>
#include <cmath>

#include "conformal/specfun.hpp"

namespace conformal {

namespace {

constexpr double kSame = 1e-12;

bool is_integer(double v) { return std::abs(v - std::round(v)) < kSame; }

numerics::DiffOptions positive(numerics::DiffOptions opt) {
    if (!opt.domain_lo) opt.domain_lo = 0.0;
    return opt;
}

// x^{shift/2} Z(k x^{q}) for the pair (J_{-nu}, J_nu), Y_nu replacing J_{-nu}
// at integer nu.
struct BesselPair {
    numerics::RealFn a, b;
};

BesselPair bessel_pair(double shift, double nu, double k, double q) {
    nu = std::abs(nu);
    const bool integer = is_integer(nu);
    auto arg = [k, q](double x) { return k * std::pow(x, q); };
    auto pre = [shift](double x) { return std::pow(x, 0.5 * shift); };
    BesselPair out;
    if (integer)
        out.a = [=](double x) { return pre(x) * specfun::bessel_y(std::round(nu), arg(x)); };
    else
        out.a = [=](double x) { return pre(x) * specfun::bessel_j(-nu, arg(x)); };
    out.b = [=](double x) { return pre(x) * specfun::bessel_j(nu, arg(x)); };
    return out;
}

SturmSolution combine(int id, std::string text, numerics::RealFn fa, numerics::RealFn fb,
                      double a, double b) {
    SturmSolution s;
    s.case_id = id;
    s.description = std::move(text);
    s.branch_a = fa;
    s.branch_b = fb;
    s.y = [fa, fb, a, b](double x) { return a * fa(x) + b * fb(x); };
    return s;
}

}  // namespace

double apply_sturm(const SturmSpec& spec, const numerics::SmoothFn& y, double x,
                   numerics::DiffOptions opt) {
    if (!(x > 0.0)) throw DomainError("apply_sturm: x must be positive");
    const double a = spec.alpha.alpha(), p = spec.p;
    opt = positive(opt);
    const double c = 1.0 - a + p;
    double v = std::pow(x, c) * y.d2(x, opt) + c * std::pow(x, c - 1.0) * y.d1(x, opt);
    if (spec.variant == SturmVariant::weighted) v /= std::pow(x, p);
    if (!std::isfinite(v)) throw NonFinite("apply_sturm: non-finite value");
    return v;
}

double apply_raw_sturm(const SturmSpec& spec, const numerics::RealFn& y, double x,
                       numerics::DiffOptions opt) {
    if (!(x > 0.0)) throw DomainError("apply_raw_sturm: x must be positive");
    const double a = spec.alpha.alpha(), b = spec.beta.alpha(), p = spec.p;
    opt = positive(opt);
    auto inner = [&](double t) {
        numerics::DiffOptions o = opt;
        return std::pow(t, p) * std::pow(t, 1.0 - a) * numerics::differentiate(y, t, 1, o);
    };
    // Nested stencils need room on both sides of the outer one.
    numerics::DiffOptions outer = opt;
    outer.initial_step = std::min(0.05, 0.25 * x);
    if (opt.domain_hi) outer.initial_step = std::min(outer.initial_step, 0.25 * (*opt.domain_hi - x));
    double v = std::pow(x, 1.0 - b) * numerics::differentiate(inner, x, 1, outer);
    if (spec.variant == SturmVariant::weighted) v /= std::pow(x, p);
    if (!std::isfinite(v)) throw NonFinite("apply_raw_sturm: non-finite value");
    return v;
}

SturmSolution case_solution(const SturmSpec& spec, double lambda, double a, double b) {
    const double al = spec.alpha.alpha(), p = spec.p;
    if (lambda < 0.0) throw UnmatchedCase("case_solution: Lambda < 0 has no oscillatory closed form");

    if (spec.variant == SturmVariant::weighted) {
        if (lambda == 0.0) throw UnmatchedCase("case_solution: weighted form needs Lambda > 0");
        const double nu = (al - p) / (1.0 + al);
        auto pair = bessel_pair(al - p, nu, 2.0 * std::sqrt(lambda) / (1.0 + al), 0.5 * (1.0 + al));
        return combine(6, "x^{-r} S: x^{(alpha-r)/2} Z_{(alpha-r)/(1+alpha)}", pair.a, pair.b, a, b);
    }

    const double shift = al - p;
    if (lambda == 0.0) {
        numerics::RealFn fa;
        if (std::abs(shift) < kSame)
            fa = [](double x) { return std::log(x); };
        else
            fa = [shift](double x) { return std::pow(x, shift) / shift; };
        const int id = (p == 0.0) ? 1 : 2;
        return combine(id, "S y = 0: x^{alpha-p}/(alpha-p) and 1", fa, [](double) { return 1.0; },
                       a, b);
    }

    const double sq = std::sqrt(lambda);
    if (std::abs(p - (al - 1.0)) < kSame) {
        return combine(5, "f = x^{alpha-1}: cos and sin",
                       [sq](double x) { return std::cos(sq * x); },
                       [sq](double x) { return std::sin(sq * x); }, a, b);
    }
    if (std::abs(shift) < kSame) {
        return combine(3, "f = x^alpha: Y_0 and J_0 of 2 sqrt(Lambda x)",
                       [sq](double x) { return specfun::bessel_y(0.0, 2.0 * sq * std::sqrt(x)); },
                       [sq](double x) { return specfun::bessel_j(0.0, 2.0 * sq * std::sqrt(x)); },
                       a, b);
    }
    const double kappa = 1.0 + shift;
    if (std::abs(kappa) < kSame) throw UnmatchedCase("case_solution: kappa = 0 (p = 1 + alpha)");
    const double nu = shift / kappa;
    auto pair = bessel_pair(shift, nu, 2.0 * sq / std::abs(kappa), 0.5 * kappa);
    int id = 4;
    std::string text = "f = x^p: x^{(alpha-p)/2} Z_{(alpha-p)/kappa}";
    if (p == 0.0) {
        id = 1;
        text = "f = 1: x^{alpha/2} Z_eta";
    } else if (p == 1.0) {
        id = 2;
        text = "f = x: x^{(alpha-1)/2} Z_{(alpha-1)/alpha}";
    }
    return combine(id, text, pair.a, pair.b, a, b);
}

SturmSolution case2_forced(const SturmSpec& spec, double source, double a, double b) {
    if (spec.variant != SturmVariant::plain) throw UnmatchedCase("case2_forced: plain variant only");
    const double shift = spec.alpha.alpha() - spec.p;
    if (std::abs(shift + 1.0) < kSame) throw UnmatchedCase("case2_forced: alpha - p + 1 = 0");
    auto hom = case_solution(spec, 0.0, a, b);
    auto y = [hom, source, shift](double x) {
        return source * std::pow(x, shift + 1.0) / (shift + 1.0) + hom.y(x);
    };
    SturmSolution s = hom;
    s.description = "S y = Lambda: Lambda x^{alpha-p+1}/(alpha-p+1) + homogeneous";
    s.y = y;
    return s;
}

double sturm_residual(const SturmSpec& spec, double lambda, const numerics::RealFn& y,
                      const std::vector<double>& grid, numerics::DiffOptions opt) {
    double worst = 0.0;
    numerics::SmoothFn f(y);
    for (double x : grid) {
        const double r = apply_sturm(spec, f, x, opt) + lambda * y(x);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

SturmEigen case4_eigensystem(const SturmSpec& spec, std::size_t n) {
    if (n == 0) throw IndexError("case4_eigensystem: n starts at 1");
    if (spec.variant != SturmVariant::plain)
        throw UnmatchedCase("case4_eigensystem: plain variant only");
    const double al = spec.alpha.alpha();
    const double shift = al - spec.p;
    if (!(shift > 0.0))
        throw UnmatchedCase("case4_eigensystem: y(0) = 0 needs p < alpha");
    const double kappa = 1.0 + shift;
    const double nu = shift / kappa;
    const double z = specfun::bessel_zero(nu, n);
    const double radicand = (-1.0 / kappa) * specfun::bessel_j(nu - 1.0, z) * specfun::bessel_j(nu + 1.0, z);
    const double norm = 1.0 / std::sqrt(std::abs(radicand));
    SturmEigen e;
    e.lambda = std::pow(0.5 * kappa * z, 2);
    e.zero = z;
    e.order = nu;
    e.kappa = kappa;
    e.normalization = norm;
    e.y = [=](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return norm * std::pow(x, 0.5 * shift) * specfun::bessel_j(nu, z * std::pow(x, 0.5 * kappa));
    };
    numerics::EdgeBehaviour edge;
    edge.lo_exponent = shift;
    auto y = e.y;
    e.numeric_norm_sq = numerics::integrate([&](double x) { return y(x) * y(x); }, {0.0, 1.0},
                                            numerics::default_tolerance(), edge).value;
    return e;
}

LambdaDependenceReport solution_lambda_dependence_check(double alpha1, double p1, double alpha2,
                                                        double p2) {
    if (std::abs((alpha1 - p1) - (alpha2 - p2)) > kSame)
        throw DomainError("solution_lambda_dependence_check: alpha - p must agree");
    const SturmSpec s1{Order(alpha1), Order(alpha1), p1, SturmVariant::plain};
    const SturmSpec s2{Order(alpha2), Order(alpha2), p2, SturmVariant::plain};
    LambdaDependenceReport r{};
    double worst = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto e1 = case4_eigensystem(s1, n);
        auto e2 = case4_eigensystem(s2, n);
        r.order1 = e1.order;
        r.order2 = e2.order;
        for (double x : numerics::linspace(0.0, 1.0, 201)) worst = std::max(worst, std::abs(e1.y(x) - e2.y(x)));
    }
    r.exponent1 = 0.5 * (alpha1 - p1);
    r.exponent2 = 0.5 * (alpha2 - p2);
    r.max_abs_difference = worst;
    return r;
}

std::vector<ConjectureEntry> sturm_conjecture_report(double alpha,
                                                     const std::vector<double>& p_values) {
    std::vector<ConjectureEntry> out;
    const Order ord(alpha);
    const auto grid = numerics::linspace(0.1, 0.9, 17);
    for (double p : p_values) {
        ConjectureEntry e{};
        e.p = p;
        e.lambda_shift = alpha - p;
        e.kappa = 1.0 + e.lambda_shift;
        const SturmSpec spec{ord, ord, p, SturmVariant::plain};
        try {
            auto sol = case_solution(spec, 10.0, 1.0, 0.0);
            e.order = std::abs(e.lambda_shift / e.kappa);
            const numerics::DiffOptions opt{0.0, 1.0, 0.0};
            e.residual = std::max(sturm_residual(spec, 10.0, sol.branch_a, grid, opt),
                                  sturm_residual(spec, 10.0, sol.branch_b, grid, opt));
            // A branch vanishes at 0 when x^{shift/2} Z(k x^{kappa/2}) -> 0 as x -> 0.
            const double tiny = 1e-12, small = 1e-8;
            auto vanishes = [&](const numerics::RealFn& f) {
                const double a = std::abs(f(tiny)), b = std::abs(f(small));
                return std::isfinite(a) && a < b && a < 1e-2 * std::max(1.0, std::abs(f(0.5)));
            };
            e.vanishes_at_zero = vanishes(sol.branch_a) || vanishes(sol.branch_b);
        } catch (const UnmatchedCase&) {
            e.order = NAN;
            e.residual = NAN;
            e.vanishes_at_zero = false;
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace conformal
