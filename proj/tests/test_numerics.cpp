#include <cmath>
#include <random>

#include "conformal/eigenbasis.hpp"
#include "conformal/numerics.hpp"
#include "conformal/specfun.hpp"
#include "doctest.h"

using namespace conformal;
using numerics::Interval;

TEST_CASE("integrate: smooth and endpoint-singular integrands") {
    auto r = numerics::integrate([](double x) { return 2.0 * std::pow(std::sin(M_PI * x), 2); },
                                 Interval(0.0, 1.0));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.abs_error_estimate >= 0.0);
    CHECK(r.evaluations >= 1);

    numerics::EdgeBehaviour edge;
    edge.lo_exponent = -0.5;
    auto s = numerics::integrate([](double x) { return 1.0 / std::sqrt(x); }, Interval(0.0, 1.0),
                                 numerics::default_tolerance(), edge);
    CHECK(std::abs(s.value - 2.0) < 1e-10);
}

TEST_CASE("integrate: squared basis function against composite Simpson in the stretched variable") {
    JBasis b(Order(0.5));
    auto r = b.integrate([&](double x) { return std::pow(b.eval(1, x), 2); });
    // Simpson on z = x^{3/4}: x = z^{4/3}, dx = (4/3) z^{1/3} dz.
    const int panels = 100000;
    const double h = 1.0 / panels;
    double sum = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double z = i * h;
        const double x = std::pow(z, 4.0 / 3.0);
        const double v = z == 0.0 ? 0.0 : std::pow(b.eval(1, std::min(x, 1.0)), 2) * (4.0 / 3.0) * std::cbrt(z);
        sum += (i == 0 || i == panels ? 1.0 : (i % 2 ? 4.0 : 2.0)) * v;
    }
    sum *= h / 3.0;
    CHECK(std::abs(r - sum) < 1e-8);
    CHECK(std::abs(r - 1.0) < 1e-8);
}

TEST_CASE("integrate: linearity and additivity on random polynomials") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double a0 = u(rng), a1 = u(rng), a2 = u(rng), b0 = u(rng), b3 = u(rng);
        auto f = [=](double x) { return a0 + a1 * x + a2 * x * x; };
        auto g = [=](double x) { return b0 + b3 * x * x * x; };
        const double ca = u(rng), cb = u(rng);
        const Interval iv(-0.3, 1.7);
        const double lhs = numerics::integrate([&](double x) { return ca * f(x) + cb * g(x); }, iv).value;
        const double rhs = ca * numerics::integrate(f, iv).value + cb * numerics::integrate(g, iv).value;
        CHECK(std::abs(lhs - rhs) < 1e-9);
        const double whole = numerics::integrate(f, iv).value;
        const double split = numerics::integrate(f, Interval(-0.3, 0.4)).value +
                             numerics::integrate(f, Interval(0.4, 1.7)).value;
        CHECK(std::abs(whole - split) < 2e-9);
    }
}

TEST_CASE("integrate: error reporting") {
    CHECK_THROWS_AS(numerics::integrate([](double) { return NAN; }, Interval(0.0, 1.0)), NonFinite);
    numerics::Tolerance tight;
    tight.max_depth = 2;
    tight.abs_tol = tight.rel_tol = 1e-14;
    CHECK_THROWS_AS(numerics::integrate([](double x) { return std::sin(200.0 * x * x); },
                                        Interval(0.0, 3.0), tight),
                    NonConvergence);
    CHECK_THROWS_AS(Interval(1.0, 0.0), DomainError);
}

TEST_CASE("integrate_piecewise: kink at an interior breakpoint") {
    auto tri = [](double x) { return 0.5 - std::abs(x - 0.5); };
    auto r = numerics::integrate_piecewise(tri, 0.0, 1.0, {0.5});
    CHECK(std::abs(r.value - 0.25) < 1e-14);
}

TEST_CASE("find_root: brackets and residuals") {
    numerics::Tolerance tol;
    tol.abs_tol = 1e-13;
    CHECK(std::abs(numerics::find_root([](double x) { return std::sin(x); }, Interval(3.0, 3.3), tol) - M_PI) < 1e-12);
    const double r2 = numerics::find_root([](double x) { return x * x - 2.0; }, Interval(1.0, 2.0), tol);
    CHECK(std::abs(r2 - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(r2 * r2 - 2.0) <= 10.0 * tol.abs_tol * 2.0 * r2);
    auto j0 = [](double x) { return specfun::bessel_j(0.0, x); };
    CHECK(std::abs(numerics::find_root(j0, Interval(2.0, 3.0), tol) - 2.404825557695773) < 1e-9);
    CHECK_THROWS_AS(numerics::find_root([](double x) { return x * x + 1.0; }, Interval(-1.0, 1.0)),
                    NoSignChange);
}

TEST_CASE("differentiate: central, one-sided and polynomial exactness") {
    CHECK(std::abs(numerics::differentiate([](double x) { return std::sin(x); }, 0.0, 1) - 1.0) < 1e-8);
    CHECK(std::abs(numerics::differentiate([](double x) { return x * x * x; }, 2.0, 2) - 12.0) < 1e-6);
    auto cubic = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x + 3.0 * x * x * x; };
    for (double x : {-1.0, 0.3, 2.5}) {
        CHECK(std::abs(numerics::differentiate(cubic, x, 1) - (-2.0 + x + 9.0 * x * x)) < 1e-9);
        CHECK(std::abs(numerics::differentiate(cubic, x, 2) - (1.0 + 18.0 * x)) < 1e-9);
    }
    numerics::DiffOptions edge;
    edge.domain_lo = 0.0;
    CHECK(std::abs(numerics::differentiate([](double x) { return std::sqrt(x); }, 1e-3, 1, edge) -
                   0.5 / std::sqrt(1e-3)) < 1e-6);
    CHECK_THROWS_AS(numerics::differentiate([](double) { return INFINITY; }, 1.0, 1), NonFinite);
}

TEST_CASE("differentiate: basis function against step-halving") {
    JBasis b(Order(0.5));
    auto f = [&](double x) { return b.eval(1, x); };
    const double d = numerics::differentiate(f, 0.5, 1);
    double prev = 0.0, cur = 0.0;
    for (double h = 1e-2; h > 1e-5; h *= 0.5) {
        prev = cur;
        cur = (f(0.5 + h) - f(0.5 - h)) / (2.0 * h);
    }
    const double richardson = (4.0 * cur - prev) / 3.0;
    CHECK(std::abs(d - richardson) < 1e-6);
    CHECK(std::abs(d - b.derivative(1, 0.5)) < 1e-8);
}

TEST_CASE("linspace includes both ends") {
    auto g = numerics::linspace(0.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == 0.5);
}
