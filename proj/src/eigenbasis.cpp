#include "conformal/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "conformal/specfun.hpp"

namespace conformal {

struct JBasis::Cache {
    std::once_flag once;
    std::vector<double> zeros;
    std::vector<double> denominators;
};

JBasis::JBasis(Order ord, std::size_t max_n)
    : ord_(ord), max_n_(max_n), cache_(std::make_shared<Cache>()) {
    if (max_n == 0) throw DomainError("JBasis: max_n must be at least 1");
}

const JBasis::Cache& JBasis::cache() const {
    std::call_once(cache_->once, [this] {
        const double eta = ord_.eta();
        cache_->zeros = specfun::bessel_zeros(eta, max_n_).zeros;
        cache_->denominators.reserve(max_n_);
        for (double z : cache_->zeros) {
            const double radicand =
                (eta - 1.0) * specfun::bessel_j(eta - 1.0, z) * specfun::bessel_j(eta + 1.0, z);
            // Positive at every zero since J_{eta-1} = -J_{eta+1} there.
            cache_->denominators.push_back(std::sqrt(std::abs(radicand)));
        }
    });
    return *cache_;
}

void JBasis::check_index(std::size_t n) const {
    if (n < 1 || n > max_n_)
        throw IndexError("JBasis: index " + std::to_string(n) + " outside 1.." +
                         std::to_string(max_n_));
}

double JBasis::zero(std::size_t n) const {
    check_index(n);
    return cache().zeros[n - 1];
}

double JBasis::denominator(std::size_t n) const {
    check_index(n);
    return cache().denominators[n - 1];
}

double JBasis::eval(std::size_t n, double x) const {
    check_index(n);
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("JBasis::eval: x outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    const double a = ord_.alpha();
    const double w = zero(n) * std::pow(x, 0.5 * (1.0 + a));
    return std::pow(x, 0.5 * a) * specfun::bessel_j(ord_.eta(), w) / denominator(n);
}

double JBasis::derivative(std::size_t n, double x) const {
    check_index(n);
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("JBasis::derivative: x outside (0, 1]");
    const double a = ord_.alpha(), eta = ord_.eta();
    const double c = 0.5 * (1.0 + a);
    const double z = zero(n);
    const double w = z * std::pow(x, c);
    const double dw = c * z * std::pow(x, c - 1.0);
    const double pa = std::pow(x, 0.5 * a);
    const double v = 0.5 * a * pa / x * specfun::bessel_j(eta, w) +
                     pa * specfun::bessel_j_prime(eta, w) * dw;
    return v / denominator(n);
}

double JBasis::second_derivative(std::size_t n, double x) const {
    check_index(n);
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("JBasis::second_derivative: x outside (0, 1]");
    const double a = ord_.alpha(), eta = ord_.eta();
    const double h = 0.5 * a;
    const double c = 0.5 * (1.0 + a);
    const double z = zero(n);
    const double w = z * std::pow(x, c);
    const double dw = c * z * std::pow(x, c - 1.0);
    const double d2w = c * (c - 1.0) * z * std::pow(x, c - 2.0);
    const double j = specfun::bessel_j(eta, w);
    const double jp = specfun::bessel_j_prime(eta, w);
    // Bessel's equation for J''.
    const double jpp = -jp / w - (1.0 - eta * eta / (w * w)) * j;
    const double ph = std::pow(x, h);
    const double v = h * (h - 1.0) * ph / (x * x) * j + 2.0 * h * ph / x * jp * dw +
                     ph * (jpp * dw * dw + jp * d2w);
    return v / denominator(n);
}

numerics::SmoothFn JBasis::smooth(std::size_t n) const {
    check_index(n);
    JBasis self = *this;
    return numerics::SmoothFn([self, n](double x) { return self.eval(n, x); },
                              [self, n](double x) { return self.derivative(n, x); },
                              [self, n](double x) { return self.second_derivative(n, x); });
}

double JBasis::eigenvalue(std::size_t n) const {
    const double a = ord_.alpha();
    const double z = zero(n);
    return (1.0 + a) * (1.0 + a) * z * z / 4.0;
}

double JBasis::integrate(const numerics::RealFn& f, const std::vector<double>& breakpoints) const {
    numerics::EdgeBehaviour edges;
    if (ord_.alpha() < 1.0) edges.lo_exponent = ord_.alpha();
    return numerics::integrate_piecewise(f, 0.0, 1.0, breakpoints, numerics::default_tolerance(), edges)
        .value;
}

double j_zero_position(const JBasis& basis, std::size_t n, std::size_t k) {
    if (n < 2 || k < 1 || k >= n)
        throw IndexError("j_zero_position: need 1 <= k <= n-1");
    const double a = basis.order().alpha();
    return std::pow(basis.zero(k) / basis.zero(n), 2.0 / (1.0 + a));
}

ScalingFactors scaling_factors(const JBasis& basis, std::size_t n) {
    if (n + 1 > basis.max_n()) throw IndexError("scaling_factors: n + 1 exceeds max_n");
    const double a = basis.order().alpha();
    const double s = 1.0 / j_zero_position(basis, n + 1, n);
    return {s, std::pow(s, -0.5 * a) * basis.denominator(n) / basis.denominator(n + 1)};
}

double scaling_amplitude_printed(const JBasis& basis, std::size_t n) {
    if (n + 1 > basis.max_n()) throw IndexError("scaling_amplitude_printed: n + 1 exceeds max_n");
    const double eta = basis.order().eta();
    auto prod = [eta](double z) {
        return specfun::bessel_j(eta - 1.0, z) * specfun::bessel_j(eta + 1.0, z);
    };
    const double s = scaling_factors(basis, n).s;
    return std::sqrt(prod(basis.zero(n)) / (std::sqrt(s) * prod(basis.zero(n + 1))));
}

MomentStats moment_stats(const JBasis& basis, std::size_t n, std::size_t max_m) {
    if (max_m < 4) throw DomainError("moment_stats: max_m must be at least 4");
    MomentStats out;
    for (std::size_t m = 1; m <= max_m; ++m) {
        const double p = static_cast<double>(m);
        out.moments.push_back(basis.integrate([&](double x) {
            const double j = basis.eval(n, x);
            return std::pow(x, p) * j * j;
        }));
    }
    const double m1 = out.moments[0], m2 = out.moments[1], m3 = out.moments[2], m4 = out.moments[3];
    const double var = m2 - m1 * m1;
    if (!(var > 0.0)) throw NonFinite("moment_stats: non-positive variance");
    const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    const double mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    out.std_dev = std::sqrt(var);
    out.skewness = mu3 / (var * out.std_dev);
    out.kurtosis = mu4 / (var * var);
    return out;
}

double interzero_area(const JBasis& basis, std::size_t n, std::size_t k) {
    if (n < 1 || k >= n) throw IndexError("interzero_area: need 0 <= k <= n-1");
    const double lo = k == 0 ? 0.0 : j_zero_position(basis, n, k);
    const double hi = k + 1 == n ? 1.0 : j_zero_position(basis, n, k + 1);
    auto sq = [&](double x) {
        const double j = basis.eval(n, x);
        return j * j;
    };
    numerics::EdgeBehaviour edges;
    if (k == 0 && basis.order().alpha() < 1.0) edges.lo_exponent = basis.order().alpha();
    return numerics::integrate(sq, numerics::Interval(lo, hi), numerics::default_tolerance(), edges)
        .value;
}

SeriesExpansion expand(const JBasis& basis, const numerics::RealFn& f, std::size_t count,
                       const std::vector<double>& breakpoints, std::string description) {
    if (count == 0 || count > basis.max_n()) throw IndexError("expand: count outside 1..max_n");
    SeriesExpansion out;
    out.alpha = basis.order().alpha();
    out.target_description = std::move(description);
    for (std::size_t n = 1; n <= count; ++n)
        out.coefficients.push_back(
            basis.integrate([&](double x) { return f(x) * basis.eval(n, x); }, breakpoints));
    return out;
}

double series_eval(const JBasis& basis, const SeriesExpansion& s, double x, std::size_t terms) {
    const std::size_t count = terms == 0 ? s.coefficients.size()
                                         : std::min(terms, s.coefficients.size());
    double sum = 0.0;
    for (std::size_t n = 1; n <= count; ++n) sum += s.coefficients[n - 1] * basis.eval(n, x);
    return sum;
}

namespace {

double cn_numerator(const JBasis& basis, double g, std::size_t n) {
    if (!(g > -1.0)) throw DomainError("fourier_bessel_cn: gamma must exceed -1");
    const double eta = basis.order().eta();
    const double z = basis.zero(n);
    const double b = g + eta + 1.0;
    return std::pow(z, eta) * specfun::hyp1f2(0.5 * b, 0.5 * b + 1.0, eta + 1.0, -0.25 * z * z);
}

}  // namespace

double fourier_bessel_cn(const JBasis& basis, double gamma_exp, std::size_t n) {
    const double eta = basis.order().eta();
    return cn_numerator(basis, gamma_exp, n) /
           (std::pow(2.0, eta) * (gamma_exp + eta + 1.0) * specfun::gamma(eta + 1.0));
}

double fourier_bessel_cn_printed(const JBasis& basis, double gamma_exp, std::size_t n) {
    const double eta = basis.order().eta();
    return cn_numerator(basis, gamma_exp, n) /
           (std::pow(2.0, eta) * specfun::gamma(0.5 * (gamma_exp + eta + 2.0)) *
            specfun::gamma(eta + 1.0));
}

double fourier_bessel_an(const JBasis& basis, double gamma_exp, std::size_t n) {
    const double a = basis.order().alpha();
    return 2.0 * fourier_bessel_cn(basis, gamma_exp, n) / ((1.0 + a) * basis.denominator(n));
}

double monomial_gamma(const Order& ord, double m) {
    const double a = ord.alpha();
    return 1.0 + (2.0 * m - a) / (1.0 + a);
}

double monomial_gamma_printed(const Order& ord, double m) { return m + 1.0 - 0.5 * ord.alpha(); }

namespace {

double hyp_form(const JBasis& basis, std::size_t n, double x, double two_power) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("j_eval_hyp: x outside [0, 1]");
    const double a = basis.order().alpha(), eta = basis.order().eta();
    const double z = basis.zero(n);
    const double f = specfun::hyp0f1(eta + 1.0, -0.25 * z * z * std::pow(x, a + 1.0));
    return std::pow(z, eta) * std::pow(x, a) * f /
           (std::pow(2.0, two_power) * specfun::gamma(eta + 1.0) * basis.denominator(n));
}

}  // namespace

double j_eval_hyp(const JBasis& basis, std::size_t n, double x) {
    return hyp_form(basis, n, x, basis.order().eta());
}

double j_eval_hyp_printed(const JBasis& basis, std::size_t n, double x) {
    return hyp_form(basis, n, x, 2.0);
}

}  // namespace conformal
