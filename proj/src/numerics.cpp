#include "conformal/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

namespace conformal::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point abscissae and weights; every second abscissa is a
// Gauss 7-point node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    int depth;
    bool roundoff_limited;
    bool operator<(const Segment& o) const { return error < o.error; }
};

double checked(const RealFn& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw NonFinite("integrand is not finite at x = " + std::to_string(x));
    return v;
}

Segment gk15(const RealFn& f, double a, double b, int depth, std::size_t& evals) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double fc = checked(f, centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> fv1{}, fv2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = hlgth * kXgk[j];
        const double f1 = checked(f, centr - dx);
        const double f2 = checked(f, centr + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    const double result = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    bool roundoff = false;
    const double floor = 50.0 * kEps * resabs;
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps) && floor >= err) {
        err = floor;
        roundoff = true;
    }
    return {a, b, result, err, depth, roundoff};
}

QuadResult adaptive(const RealFn& f, double a, double b, const Tolerance& tol) {
    constexpr std::size_t kMaxEvals = 4'000'000;
    std::size_t evals = 0;
    std::priority_queue<Segment> open;
    std::vector<Segment> closed;
    Segment first = gk15(f, a, b, 0, evals);
    double total = first.value;
    double total_err = first.error;
    if (first.roundoff_limited) closed.push_back(first); else open.push(first);

    while (true) {
        const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
        if (total_err <= target || open.empty()) break;
        Segment worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const bool too_narrow = !(mid > worst.a && mid < worst.b) ||
                                (worst.b - worst.a) <= 64.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b));
        if (too_narrow) {
            closed.push_back(worst);
            continue;
        }
        if (worst.depth >= tol.max_depth)
            throw NonConvergence("integrate: max_depth " + std::to_string(tol.max_depth) +
                                 " exhausted near x = " + std::to_string(mid) +
                                 " (error estimate " + std::to_string(total_err) + ")");
        if (evals > kMaxEvals)
            throw NonConvergence("integrate: evaluation budget exhausted (error estimate " +
                                 std::to_string(total_err) + ")");
        Segment left = gk15(f, worst.a, mid, worst.depth + 1, evals);
        Segment right = gk15(f, mid, worst.b, worst.depth + 1, evals);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        for (auto* s : {&left, &right}) {
            if (s->roundoff_limited) closed.push_back(*s); else open.push(*s);
        }
    }
    // Re-sum to avoid drift from the running updates.
    double value = 0.0, err = 0.0;
    for (const auto& s : closed) { value += s.value; err += s.error; }
    while (!open.empty()) { value += open.top().value; err += open.top().error; open.pop(); }
    return {value, err, evals};
}

double substitution_power(double gamma) {
    if (!(gamma > -1.0)) throw DomainError("declared endpoint exponent must exceed -1");
    return std::max(1.0, 2.0 / (1.0 + gamma));
}

// Integral over [edge, edge + sign*len] of f, with x = edge + sign*len*u^m.
QuadResult integrate_from_edge(const RealFn& f, double edge, double len, double sign,
                               double gamma, const Tolerance& tol) {
    const double m = substitution_power(gamma);
    if (m == 1.0) {
        const double a = sign > 0 ? edge : edge - len;
        const double b = sign > 0 ? edge + len : edge;
        return adaptive(f, a, b, tol);
    }
    RealFn g = [&](double u) {
        const double um1 = std::pow(u, m - 1.0);
        const double t = len * um1 * u;
        const double x = edge + sign * t;
        if (um1 == 0.0 || x == edge) return 0.0;
        return f(x) * len * m * um1;
    };
    return adaptive(g, 0.0, 1.0, tol);
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw DomainError("Interval requires finite lo < hi");
}

Tolerance default_tolerance() {
    Tolerance t;
    if (const char* env = std::getenv("CONFORMAL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && v < 1.0) {
            t.abs_tol = v;
            t.rel_tol = v;
        }
    }
    return t;
}

QuadResult integrate(const RealFn& f, Interval iv, Tolerance tol, EdgeBehaviour edges) {
    if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0) || tol.max_depth < 1)
        throw DomainError("integrate: invalid tolerance");
    const bool lo_sing = edges.lo_exponent.has_value();
    const bool hi_sing = edges.hi_exponent.has_value();
    if (!lo_sing && !hi_sing) return adaptive(f, iv.lo, iv.hi, tol);
    if (lo_sing && !hi_sing)
        return integrate_from_edge(f, iv.lo, iv.width(), +1.0, *edges.lo_exponent, tol);
    if (!lo_sing && hi_sing)
        return integrate_from_edge(f, iv.hi, iv.width(), -1.0, *edges.hi_exponent, tol);
    const double half = 0.5 * iv.width();
    Tolerance each = tol;
    each.abs_tol = 0.5 * tol.abs_tol;
    QuadResult l = integrate_from_edge(f, iv.lo, half, +1.0, *edges.lo_exponent, each);
    QuadResult r = integrate_from_edge(f, iv.hi, half, -1.0, *edges.hi_exponent, each);
    return {l.value + r.value, l.abs_error_estimate + r.abs_error_estimate,
            l.evaluations + r.evaluations};
}

QuadResult integrate_piecewise(const RealFn& f, double lo, double hi,
                               const std::vector<double>& breakpoints, Tolerance tol,
                               EdgeBehaviour edges) {
    std::vector<double> cuts{lo};
    std::vector<double> inner;
    for (double b : breakpoints)
        if (b > lo && b < hi) inner.push_back(b);
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    cuts.insert(cuts.end(), inner.begin(), inner.end());
    cuts.push_back(hi);
    QuadResult total;
    const std::size_t pieces = cuts.size() - 1;
    Tolerance each = tol;
    each.abs_tol = tol.abs_tol / static_cast<double>(pieces);
    for (std::size_t i = 0; i < pieces; ++i) {
        EdgeBehaviour e;
        if (i == 0) e.lo_exponent = edges.lo_exponent;
        if (i + 1 == pieces) e.hi_exponent = edges.hi_exponent;
        QuadResult r = integrate(f, Interval(cuts[i], cuts[i + 1]), each, e);
        total.value += r.value;
        total.abs_error_estimate += r.abs_error_estimate;
        total.evaluations += r.evaluations;
    }
    return total;
}

double find_root(const RealFn& f, Interval bracket, Tolerance tol, const RealFn& derivative) {
    double lo = bracket.lo, hi = bracket.hi;
    double flo = f(lo), fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw NonFinite("find_root: non-finite value at bracket end");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw NoSignChange("find_root: f(lo) and f(hi) have the same sign on [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");

    auto width_goal = [&](double x) { return tol.abs_tol + 4.0 * kEps * std::abs(x); };
    // Feed one evaluation into the bracket; returns true on an exact zero.
    auto absorb = [&](double x, double fx) {
        if (!std::isfinite(fx)) throw NonFinite("find_root: non-finite value inside bracket");
        if (fx == 0.0) { lo = hi = x; return true; }
        if (std::signbit(fx) == std::signbit(flo)) { lo = x; flo = fx; } else { hi = x; fhi = fx; }
        return false;
    };

    while (hi - lo > std::max(1e-6, width_goal(lo))) {
        const double mid = 0.5 * (lo + hi);
        if (absorb(mid, f(mid))) return mid;
    }

    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 50 && hi - lo > width_goal(x); ++iter) {
        const double fx = f(x);
        if (absorb(x, fx)) return x;
        if (hi - lo <= width_goal(x)) break;
        const double d = derivative ? derivative(x) : differentiate(f, x, 1, {lo, hi, 0.0});
        double xn = (d != 0.0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) < 0.5 * width_goal(xn)) {
            const double half = 0.5 * width_goal(xn);
            const double a = std::max(lo, xn - half), b = std::min(hi, xn + half);
            if (a > lo && absorb(a, f(a))) return a;
            if (b < hi && absorb(b, f(b))) return b;
            if (hi - lo <= width_goal(xn)) return std::clamp(xn, lo, hi);
        }
        x = xn;
    }
    while (hi - lo > width_goal(lo)) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (absorb(mid, f(mid))) return mid;
    }
    return 0.5 * (lo + hi);
}

double differentiate(const RealFn& f, double x, int order, DiffOptions opt) {
    if (order != 1 && order != 2) throw DomainError("differentiate: order must be 1 or 2");
    constexpr int kTab = 10;
    constexpr double kCon = 1.4;
    constexpr double kSafe = 2.0;
    double h = opt.initial_step > 0.0 ? opt.initial_step : std::clamp(0.2 * std::abs(x), 1e-3, 0.1);

    // Stencil direction: 0 central, +1 forward, -1 backward.
    int dir = 0;
    const bool near_lo = opt.domain_lo && x - h <= *opt.domain_lo;
    const bool near_hi = opt.domain_hi && x + h >= *opt.domain_hi;
    if (near_lo && near_hi) {
        const double room = std::min(x - *opt.domain_lo, *opt.domain_hi - x);
        if (room > 0.0) h = room;
        else if (*opt.domain_hi - x >= x - *opt.domain_lo) { dir = +1; h = 0.5 * (*opt.domain_hi - x); }
        else { dir = -1; h = 0.5 * (x - *opt.domain_lo); }
    } else if (near_lo) {
        dir = +1;
        if (x > *opt.domain_lo) h = std::min(h, 0.25 * (x - *opt.domain_lo));
        if (opt.domain_hi) h = std::min(h, 0.5 * (*opt.domain_hi - x));
    } else if (near_hi) {
        dir = -1;
        if (x < *opt.domain_hi) h = std::min(h, 0.25 * (*opt.domain_hi - x));
        if (opt.domain_lo) h = std::min(h, 0.5 * (x - *opt.domain_lo));
    }
    if (!(h > 0.0)) throw DomainError("differentiate: no room for a stencil inside the domain");

    auto ev = [&](double t) {
        const double v = f(t);
        if (!std::isfinite(v))
            throw NonFinite("differentiate: non-finite stencil value at x = " + std::to_string(t));
        return v;
    };
    const double f0 = (dir != 0 || order == 2) ? ev(x) : 0.0;
    auto quotient = [&](double step) {
        if (dir == 0) {
            const double fp = ev(x + step), fm = ev(x - step);
            return order == 1 ? (fp - fm) / (2.0 * step) : (fp - 2.0 * f0 + fm) / (step * step);
        }
        const double s = dir * step;
        const double f1 = ev(x + s);
        if (order == 1) return (f1 - f0) / s;
        const double f2 = ev(x + 2.0 * s);
        return (f2 - 2.0 * f1 + f0) / (s * s);
    };

    double a[kTab][kTab];
    a[0][0] = quotient(h);
    double err = std::numeric_limits<double>::max();
    double ans = a[0][0];
    for (int i = 1; i < kTab; ++i) {
        h /= kCon;
        a[0][i] = quotient(h);
        for (int j = 1; j <= i; ++j) {
            const double p = dir == 0 ? 2.0 * j : static_cast<double>(j);
            const double fac = std::pow(kCon, p);
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                         std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                ans = a[j][i];
            }
        }
        if (i >= 4 && std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * err) break;
    }
    return ans;
}

double SmoothFn::d1(double x, const DiffOptions& opt) const {
    return df ? df(x) : differentiate(f, x, 1, opt);
}

double SmoothFn::d2(double x, const DiffOptions& opt) const {
    return d2f ? d2f(x) : differentiate(f, x, 2, opt);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out;
    if (count == 0) return out;
    if (count == 1) return {lo};
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                                      static_cast<double>(count - 1));
    return out;
}

}  // namespace conformal::numerics
