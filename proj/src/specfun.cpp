#include "conformal/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "conformal/numerics.hpp"

namespace conformal::specfun {

namespace {

namespace mp = boost::multiprecision;
using Float50 = mp::cpp_bin_float_50;
using Float100 = mp::cpp_bin_float_100;
using Float200 = mp::number<mp::cpp_bin_float<200>>;
using Float400 = mp::number<mp::cpp_bin_float<400>>;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

template <class F>
double guarded(const char* name, F&& fn) {
    try {
        const double v = fn();
        if (!std::isfinite(v)) throw NonFinite(std::string(name) + ": non-finite result");
        return v;
    } catch (const std::domain_error& e) {
        throw DomainError(std::string(name) + ": " + e.what());
    } catch (const std::overflow_error& e) {
        throw NonFinite(std::string(name) + ": " + e.what());
    } catch (const boost::math::evaluation_error& e) {
        throw NonConvergence(std::string(name) + ": " + e.what());
    }
}

template <class T>
struct SeriesResult {
    T sum;
    T max_term;
};

// sum_k prod(a+k)/prod(b+k) z^k/k!, stopped once |term| < rel_stop |sum|
// three times in a row.
template <class T>
SeriesResult<T> hyp_series(const std::vector<T>& a, const std::vector<T>& b, const T& z,
                           double rel_stop = 1e-18) {
    T term = 1;
    T sum = 1;
    T max_term = 1;
    int small = 0;
    const T threshold = T(rel_stop);
    for (long k = 0; k < 200000; ++k) {
        T ratio = z / T(k + 1);
        for (const T& ai : a) ratio *= ai + T(k);
        for (const T& bi : b) ratio /= bi + T(k);
        term *= ratio;
        if (term == 0) break;
        sum += term;
        using std::abs;
        const T at = abs(term);
        if (at > max_term) max_term = at;
        if (at < threshold * abs(sum)) {
            if (++small >= 3) return {sum, max_term};
        } else {
            small = 0;
        }
    }
    if (term == 0) return {sum, max_term};
    throw NonConvergence("hypergeometric series did not converge");
}

// Digits lost to cancellation: log10(max term / |sum|).
template <class T>
double lost_digits(const SeriesResult<T>& r) {
    using std::abs;
    using std::log10;
    if (r.sum == 0) return 1e9;
    return static_cast<double>(log10(r.max_term / abs(r.sum)));
}

template <class T>
std::vector<T> cast(const std::vector<double>& v) {
    return std::vector<T>(v.begin(), v.end());
}

double hyp_general(const std::vector<double>& a, const std::vector<double>& b, double z) {
    for (double bi : b)
        if (is_nonpositive_integer(bi))
            throw PoleError("hypergeometric lower parameter is a non-positive integer");
    if (!std::isfinite(z)) throw NonFinite("hypergeometric argument is not finite");
    if (z == 0.0) return 1.0;
    auto d = hyp_series<double>(a, b, z);
    if (std::isfinite(d.sum) && std::isfinite(d.max_term) && lost_digits(d) < 4.0) return d.sum;
    auto r50 = hyp_series<Float50>(cast<Float50>(a), cast<Float50>(b), Float50(z));
    if (lost_digits(r50) + 18.0 < 50.0) return static_cast<double>(r50.sum);
    auto r100 = hyp_series<Float100>(cast<Float100>(a), cast<Float100>(b), Float100(z));
    if (lost_digits(r100) + 18.0 < 100.0) return static_cast<double>(r100.sum);
    auto r200 = hyp_series<Float200>(cast<Float200>(a), cast<Float200>(b), Float200(z));
    if (lost_digits(r200) + 18.0 < 200.0) return static_cast<double>(r200.sum);
    auto r400 = hyp_series<Float400>(cast<Float400>(a), cast<Float400>(b), Float400(z));
    if (lost_digits(r400) + 18.0 < 400.0) return static_cast<double>(r400.sum);
    throw NonConvergence("hypergeometric series: cancellation exceeds 400 digits");
}

std::mutex& zero_mutex() {
    static std::mutex m;
    return m;
}

std::map<double, std::vector<double>>& zero_cache() {
    static std::map<double, std::vector<double>> cache;
    return cache;
}

// Locate the zero following `prev` (0 for the first). Between consecutive
// zeros J_nu has sign (-1)^k for k zeros passed, so a scan start is valid
// only when it carries the expected sign.
double next_zero(double nu, double prev, std::size_t k) {
    auto j = [nu](double z) { return boost::math::cyl_bessel_j(nu, z); };
    auto dj = [nu](double z) { return boost::math::cyl_bessel_j_prime(nu, z); };
    const double expected = (k % 2 == 1) ? 1.0 : -1.0;  // sign just before zero k
    double a = k == 1 ? 1e-6 : prev + 0.5;
    const double guess = mcmahon_zero(nu, k);
    const double seeded = guess - 1.0;
    if (seeded > a && j(seeded) * expected > 0.0) a = seeded;
    constexpr double step = 0.05;
    double fa = j(a);
    for (int i = 0; i < 100000; ++i) {
        const double b = a + step;
        const double fb = j(b);
        if (fa == 0.0) return a;
        if (std::signbit(fa) != std::signbit(fb)) {
            numerics::Tolerance tol;
            tol.abs_tol = 1e-14;
            return numerics::find_root(j, numerics::Interval(a, b), tol, dj);
        }
        a = b;
        fa = fb;
    }
    throw NonConvergence("bessel_zeros: sign scan failed");
}

}  // namespace

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
    const double v = std::tgamma(x);
    if (!std::isfinite(v)) throw NonFinite("gamma: overflow at " + std::to_string(x));
    return v;
}

double bessel_j(double nu, double z) {
    if (z < 0.0) throw DomainError("bessel_j: negative argument");
    if (z == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0 || is_nonpositive_integer(nu)) return 0.0;
        throw NonFinite("bessel_j: J_nu(0) is infinite for negative non-integer nu");
    }
    return guarded("bessel_j", [&] { return boost::math::cyl_bessel_j(nu, z); });
}

double bessel_j_prime(double nu, double z) {
    if (z < 0.0) throw DomainError("bessel_j_prime: negative argument");
    return guarded("bessel_j_prime", [&] { return boost::math::cyl_bessel_j_prime(nu, z); });
}

double bessel_y(double nu, double z) {
    if (!(z > 0.0)) throw DomainError("bessel_y: argument must be positive");
    return guarded("bessel_y", [&] { return boost::math::cyl_neumann(nu, z); });
}

double mcmahon_zero(double nu, std::size_t k) {
    const double beta = (static_cast<double>(k) + 0.5 * nu - 0.25) * M_PI;
    const double mu = 4.0 * nu * nu;
    const double e = 8.0 * beta;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
}

ZeroTable bessel_zeros(double nu, std::size_t count) {
    if (count == 0) throw DomainError("bessel_zeros: count must be at least 1");
    if (!(nu > -1.0)) throw DomainError("bessel_zeros: order must exceed -1");
    std::lock_guard<std::mutex> lock(zero_mutex());
    auto& zs = zero_cache()[nu];
    while (zs.size() < count) {
        const double prev = zs.empty() ? 0.0 : zs.back();
        zs.push_back(next_zero(nu, prev, zs.size() + 1));
    }
    return {nu, std::vector<double>(zs.begin(), zs.begin() + static_cast<long>(count))};
}

double bessel_zero(double nu, std::size_t k) {
    if (k == 0) throw IndexError("bessel_zero: zeros are numbered from 1");
    return bessel_zeros(nu, k).zeros.back();
}

double hyp0f1(double b, double z) { return hyp_general({}, {b}, z); }

double hyp1f2(double a, double b1, double b2, double z) { return hyp_general({a}, {b1, b2}, z); }

AiryPair airy(double x) {
    if (!(std::abs(x) <= 20.0)) throw DomainError("airy: |x| must not exceed 20");
    using T = Float100;
    const T third = T(1) / 3;
    const T c1 = 1 / (mp::pow(T(3), 2 * third) * boost::math::tgamma(2 * third));
    const T c2 = 1 / (mp::pow(T(3), third) * boost::math::tgamma(third));
    const T xt(x);
    const T arg = xt * xt * xt / 9;
    const T f = hyp_series<T>({}, {2 * third}, arg, 1e-80).sum;
    const T g = xt * hyp_series<T>({}, {4 * third}, arg, 1e-80).sum;
    const T ai = c1 * f - c2 * g;
    const T bi = mp::sqrt(T(3)) * (c1 * f + c2 * g);
    return {static_cast<double>(ai), static_cast<double>(bi)};
}

}  // namespace conformal::specfun
