#include <cmath>
#include <random>

#include "conformal/numerics.hpp"
#include "conformal/specfun.hpp"
#include "doctest.h"
#include "golden_values.hpp"

using namespace conformal;
namespace sf = conformal::specfun;
using sf::bessel_j; using sf::bessel_y; using sf::bessel_zeros; using sf::bessel_zero; using sf::mcmahon_zero;
using sf::hyp0f1; using sf::hyp1f2; using sf::airy;

namespace {
bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("gamma: known values and poles") {
    CHECK(close(sf::gamma(0.5), std::sqrt(M_PI), 1e-14));
    CHECK(close(sf::gamma(5.0), 24.0, 1e-14));
    CHECK(std::abs(sf::gamma(1.75) / golden::gamma_1_75 - 1.0) < 1e-13);
    CHECK_THROWS_AS(sf::gamma(0.0), PoleError);
    CHECK_THROWS_AS(sf::gamma(-3.0), PoleError);
}

TEST_CASE("bessel_j and bessel_y: reference values") {
    CHECK(close(bessel_j(0.5, M_PI / 2), 2.0 / M_PI, 1e-14));
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(std::abs(bessel_j(1.0 / 3.0, 2.5) / golden::besselj_third_2_5 - 1.0) < 1e-12);
    CHECK(close(bessel_y(0.5, M_PI), std::sqrt(2.0 / (M_PI * M_PI)), 1e-13));
    CHECK(std::abs(bessel_y(0.0, 1.0) / golden::bessely_0_1 - 1.0) < 1e-12);
    CHECK(std::abs(bessel_y(0.25, 5.0) / golden::bessely_quarter_5 - 1.0) < 1e-12);
    CHECK_THROWS_AS(bessel_y(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.3, -1.0), DomainError);
}

TEST_CASE("bessel: recurrence and Wronskian on a random grid") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> nu_d(-0.9, 3.0), z_d(0.2, 60.0);
    for (int i = 0; i < 40; ++i) {
        const double nu = nu_d(rng), z = z_d(rng);
        CHECK(std::abs(bessel_j(nu - 1.0, z) + bessel_j(nu + 1.0, z) - 2.0 * nu / z * bessel_j(nu, z)) < 1e-8);
        const double yp = numerics::differentiate([nu](double t) { return bessel_y(nu, t); }, z, 1);
        const double jp = numerics::differentiate([nu](double t) { return bessel_j(nu, t); }, z, 1);
        const double w = bessel_j(nu, z) * yp - jp * bessel_y(nu, z);
        CHECK(std::abs(w - 2.0 / (M_PI * z)) < 1e-7);
    }
}

TEST_CASE("bessel_zeros: reference zeros, invariants and spacing") {
    auto half = bessel_zeros(0.5, 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(half.zeros[k] - (k + 1) * M_PI) < 1e-10);
    CHECK(std::abs(bessel_zero(0.0, 1) - golden::besselj0_zero1) < 1e-10);
    auto third = bessel_zeros(1.0 / 3.0, 2);
    CHECK(std::abs(third.zeros[0] - golden::besselj_third_zero1) < 1e-10);
    CHECK(std::abs(third.zeros[1] - golden::besselj_third_zero2) < 1e-10);

    for (double nu : {-0.5, 0.2, 1.0 / 3.0, 0.5, 2.7}) {
        auto t = bessel_zeros(nu, 40);
        for (std::size_t k = 0; k < t.zeros.size(); ++k) {
            CHECK(std::abs(bessel_j(nu, t.zeros[k])) < 1e-9);
            if (k > 0) {
                CHECK(t.zeros[k] > t.zeros[k - 1]);
                const double mid = 0.5 * (t.zeros[k] + t.zeros[k - 1]);
                CHECK((k % 2 == 1 ? bessel_j(nu, mid) < 0.0 : bessel_j(nu, mid) > 0.0));
            }
        }
        CHECK(std::abs(t.zeros[39] - t.zeros[38] - M_PI) < 1e-2);
        CHECK(std::abs(t.zeros[39] - mcmahon_zero(nu, 40)) < 1e-6);
    }
    CHECK_THROWS_AS(bessel_zeros(0.5, 0), DomainError);
    CHECK_THROWS_AS(bessel_zero(0.5, 0), IndexError);
}

TEST_CASE("hyp0f1: reference values and the Bessel identity") {
    CHECK(hyp0f1(1.0, 0.0) == 1.0);
    CHECK(std::abs(hyp0f1(2.0, 1.0) / golden::hyp0f1_2_1 - 1.0) < 1e-13);
    CHECK_THROWS_AS(hyp0f1(-2.0, 1.0), PoleError);
    for (double eta : {0.2, 1.0 / 3.0, 0.5}) {
        for (double z : {0.5, 3.0, 17.0, 45.0}) {
            const double via = std::pow(0.5 * z, eta) / sf::gamma(eta + 1.0) * hyp0f1(eta + 1.0, -0.25 * z * z);
            CHECK(std::abs(via - bessel_j(eta, z)) < 1e-9);
        }
        const double z1 = bessel_zero(eta, 5);
        CHECK(std::abs(std::pow(0.5 * z1, eta) / sf::gamma(eta + 1.0) * hyp0f1(eta + 1.0, -0.25 * z1 * z1)) < 1e-9);
    }
}

TEST_CASE("hyp1f2: reference values and the cancellation regime") {
    CHECK(hyp1f2(0.3, 1.2, 2.5, 0.0) == 1.0);
    CHECK(std::abs(hyp1f2(1.0, 2.0, 3.0, -2.0) / golden::hyp1f2_1_2_3_m2 - 1.0) < 1e-13);
    CHECK(std::abs(hyp1f2(1.2, 2.2, 1.4, -900.0) / golden::hyp1f2_large - 1.0) < 1e-10);
    CHECK_THROWS_AS(hyp1f2(1.0, 0.0, 2.0, 1.0), PoleError);
    // int_0^1 z J_{1/2}(pi z) dz in closed form.
    const double eta = 0.5, a = M_PI;
    const double closed = std::pow(a, eta) * hyp1f2(eta / 2 + 1, eta / 2 + 2, eta + 1, -a * a / 4) /
                          (std::pow(2.0, eta) * (eta + 2) * sf::gamma(eta + 1));
    const double quad = numerics::integrate([&](double z) { return z * bessel_j(eta, a * z); },
                                            numerics::Interval(0.0, 1.0)).value;
    CHECK(std::abs(closed - quad) < 1e-9);
}

TEST_CASE("airy: values at zero, reference points and the defining equation") {
    auto z = airy(0.0);
    CHECK(close(z.ai, 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0)), 1e-15));
    CHECK(close(z.bi, 1.0 / (std::pow(3.0, 1.0 / 6.0) * std::tgamma(2.0 / 3.0)), 1e-15));
    auto t = airy(2.0);
    CHECK(std::abs(t.ai / golden::airy_ai_2 - 1.0) < 1e-13);
    CHECK(std::abs(t.bi / golden::airy_bi_2 - 1.0) < 1e-13);
    CHECK(std::abs(airy(-7.0).ai / golden::airy_ai_m7 - 1.0) < 1e-12);
    CHECK(std::abs(airy(15.0).ai / golden::airy_ai_15 - 1.0) < 1e-10);
    auto ai = [](double x) { return airy(x).ai; };
    CHECK(std::abs(numerics::differentiate(ai, 1.3, 2) - 1.3 * ai(1.3)) < 1e-6);
    CHECK_THROWS_AS(airy(25.0), DomainError);
}
