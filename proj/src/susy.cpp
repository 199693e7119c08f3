#include "conformal/susy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "conformal/eigenbasis.hpp"

namespace conformal::susy {

namespace {

const double kPi = std::acos(-1.0);

numerics::DiffOptions unit_domain() {
    numerics::DiffOptions o;
    o.domain_lo = 0.0;
    o.domain_hi = 1.0;
    return o;
}

double fd(const numerics::RealFn& f, double x, int order) {
    auto o = unit_domain();
    o.initial_step = std::min({0.05, 0.25 * x, 0.25 * (1.0 - x)});
    return numerics::differentiate(f, x, order, o);
}

numerics::SmoothFn box_state(const Order& ord, std::size_t n) {
    const double a = ord.alpha(), k = (n + 1) * kPi;
    return numerics::SmoothFn(
        [a, k](double x) { return std::sin(k * std::pow(x, a)); },
        [a, k](double x) { return k * a * std::pow(x, a - 1) * std::cos(k * std::pow(x, a)); },
        [a, k](double x) {
            const double xa = std::pow(x, a);
            return k * a * std::pow(x, a - 2) * ((a - 1) * std::cos(k * xa) - k * a * xa * std::sin(k * xa));
        });
}

// Kinetic part -D^a D^a f (symmetric) or -(x^{1-a} f')' (asymmetric).
double kinetic(const SusySystem& sys, const numerics::RealFn& f, double x) {
    const double a = sys.ord.alpha();
    const double d1 = fd(f, x, 1), d2 = fd(f, x, 2);
    if (sys.ordering == Ordering::symmetric_alpha)
        return -std::pow(x, 2 - 2 * a) * d2 - (1 - a) * std::pow(x, 1 - 2 * a) * d1;
    return -std::pow(x, 1 - a) * d2 - (1 - a) * std::pow(x, -a) * d1;
}

// Annihilation operator on f at x, given f and f'.
double annihilate(const SusySystem& sys, double x, double f, double df) {
    const double a = sys.ord.alpha();
    if (sys.ordering == Ordering::symmetric_alpha) return std::pow(x, 1 - a) * df + sys.W(x) * f;
    return std::pow(x, 0.5 * (1 - a)) * df + std::pow(x, 0.5 * (a - 1)) * sys.W(x) * f;
}

double creation(const SusySystem& sys, const numerics::RealFn& f, double x) {
    const double a = sys.ord.alpha();
    if (sys.ordering == Ordering::symmetric_alpha) return -std::pow(x, 1 - a) * fd(f, x, 1) + sys.W(x) * f(x);
    const double c = 0.5 * (1 - a);
    auto g = [&](double t) { return std::pow(t, c) * f(t); };
    return -fd(g, x, 1) + std::pow(x, a - 1) * sys.W(x) * g(x);
}

double simpson_grid(const std::vector<double>& y, double h) {
    double s = y.front() + y.back();
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += (i % 2 ? 4.0 : 2.0) * y[i];
    return s * h / 3.0;
}

void fill_ladder2(SusySystem& sys) {
    sys.ladder2.clear();
    const auto grid = numerics::linspace(0.05, 0.95, 91);
    for (std::size_t n = 0; n + 1 < sys.n_max; ++n) {
        const auto th = partner_state(sys, n);
        double num = 0.0, den = 0.0;
        for (double x : grid) {
            const double t = th.values(x);
            num += t * apply_h2(sys, th.values, x);
            den += t * t;
        }
        sys.ladder2.push_back(num / den);
    }
}

}  // namespace

numerics::RealFn superpotential_from_ground(Ordering, const Order& ord, const numerics::SmoothFn& phi0,
                                            numerics::Interval safe) {
    const double a = ord.alpha();
    return [a, phi0, safe](double x) {
        const double p = phi0(x);
        if (std::abs(p) < 1e-14 && x >= safe.lo && x <= safe.hi)
            throw DivisionNearZero("superpotential: ground state vanishes inside the safe interval");
        return -std::pow(x, 1 - a) * phi0.d1(x, unit_domain()) / p;
    };
}

PartnerPotentials partner_potentials(Ordering ordering, const Order& ord, const numerics::RealFn& W) {
    const double a = ord.alpha();
    if (ordering == Ordering::symmetric_alpha) {
        auto dw = [a, W](double x) { return std::pow(x, 1 - a) * fd(W, x, 1); };
        return {[W, dw](double x) { const double w = W(x); return w * w - dw(x); },
                [W, dw](double x) { const double w = W(x); return w * w + dw(x); }};
    }
    return {[a, W](double x) {
                const double w = W(x);
                return std::pow(x, a - 1) * w * w - fd(W, x, 1);
            },
            [a, W](double x) {
                const double w = W(x);
                return std::pow(x, a - 1) * w * w + fd(W, x, 1) - (1 - a) * w / x +
                       0.25 * (1 - a * a) * std::pow(x, -1 - a);
            }};
}

double box_v2_closed(const Order& ord, double x) {
    const double a = ord.alpha(), s = std::sin(kPi * std::pow(x, a));
    return a * a * kPi * kPi * (2.0 / (s * s) - 1.0);
}

SusySystem box_system(const Order& ord, std::size_t n_max) {
    if (n_max < 2) throw DomainError("box_system: n_max must be at least 2");
    SusySystem sys;
    sys.ordering = Ordering::symmetric_alpha;
    sys.ord = ord;
    sys.n_max = n_max;
    sys.phi = [ord](std::size_t n) { return box_state(ord, n); };
    sys.W = superpotential_from_ground(sys.ordering, ord, box_state(ord, 0));
    auto pp = partner_potentials(sys.ordering, ord, sys.W);
    sys.V1 = pp.V1;
    sys.V2 = pp.V2;
    sys.V2_literal = pp.V2;
    const double a = ord.alpha();
    for (std::size_t n = 0; n < n_max; ++n) sys.ladder1.push_back(a * a * n * (n + 2.0) * kPi * kPi);
    fill_ladder2(sys);
    return sys;
}

SusySystem asymmetric_system(const Order& ord, std::size_t n_max) {
    if (n_max < 2) throw DomainError("asymmetric_system: n_max must be at least 2");
    SusySystem sys;
    sys.ordering = Ordering::asymmetric_A2alpha;
    sys.ord = ord;
    sys.n_max = n_max;
    auto basis = std::make_shared<JBasis>(ord, n_max + 1);
    sys.phi = [basis](std::size_t n) { return basis->smooth(n + 1); };
    sys.W = superpotential_from_ground(sys.ordering, ord, basis->smooth(1));
    auto pp = partner_potentials(sys.ordering, ord, sys.W);
    sys.V1 = pp.V1;
    sys.V2 = pp.V2;
    const double a = ord.alpha();
    sys.V2_literal = [a, W = sys.W](double x) {
        const double w = W(x);
        return std::pow(x, a - 1) * w * w + fd(W, x, 1);
    };
    const double e1 = basis->eigenvalue(1);
    for (std::size_t n = 0; n < n_max; ++n) sys.ladder1.push_back(basis->eigenvalue(n + 1) - e1);
    fill_ladder2(sys);
    return sys;
}

PartnerState partner_state(const SusySystem& sys, std::size_t n) {
    if (n + 1 >= sys.n_max) throw IndexError("partner_state: n must be below n_max - 1");
    const auto up = sys.phi(n + 1);
    const auto ground = sys.phi(0);
    const double a = sys.ord.alpha();
    const bool sym = sys.ordering == Ordering::symmetric_alpha;
    // Uses -phi0'/phi0 directly so that evaluation near the ends avoids the
    // safe-interval guard of W.
    numerics::RealFn raw = [up, ground, a, sym](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        const double w = -ground.d1(x, unit_domain()) / ground(x);
        const double t = up.d1(x, unit_domain()) + w * up(x);
        return sym ? std::pow(x, 1 - a) * t : std::pow(x, 0.5 * (1 - a)) * t;
    };
    numerics::EdgeBehaviour edge;
    edge.lo_exponent = sym ? 2 * a : std::min(1.0, 0.5 * (1 + a));
    const double nsq = numerics::integrate([&](double x) { const double v = raw(x); return v * v; },
                                           {0.0, 1.0}, numerics::default_tolerance(), edge).value;
    const double norm = std::sqrt(nsq);
    if (!(norm > 0.0) || !std::isfinite(norm)) throw NonFinite("partner_state: degenerate norm");
    return {n, [raw, norm](double x) { return raw(x) / norm; }, norm};
}

double apply_h2(const SusySystem& sys, const numerics::RealFn& f, double x) {
    return kinetic(sys, f, x) + sys.V2(x) * f(x);
}

double apply_h1(const SusySystem& sys, const numerics::RealFn& f, double x) {
    return kinetic(sys, f, x) + sys.V1(x) * f(x);
}

IsospectralReport verify_isospectral(const SusySystem& sys, std::size_t n_max) {
    if (n_max + 1 > sys.n_max) throw IndexError("verify_isospectral: n_max exceeds the system size");
    const auto grid = numerics::linspace(0.05, 0.95, 91);
    IsospectralReport rep{{}, 0.0, 0.0, 0.0};
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto th = partner_state(sys, n);
        const double lam = sys.ladder1[n + 1];
        double worst = 0.0, lit = 0.0;
        for (double x : grid) {
            const double t = th.values(x), k = kinetic(sys, th.values, x);
            worst = std::max(worst, std::abs(k + sys.V2(x) * t - lam * t));
            lit = std::max(lit, std::abs(k + sys.V2_literal(x) * t - lam * t));
        }
        rep.residuals.push_back(worst);
        rep.worst_residual = std::max(rep.worst_residual, worst);
        if (sys.ordering == Ordering::asymmetric_A2alpha) rep.literal_v2_residual = std::max(rep.literal_v2_residual, lit);
        if (n < sys.ladder2.size())
            rep.worst_ladder_gap = std::max(rep.worst_ladder_gap, std::abs(sys.ladder2[n] - lam));
    }
    return rep;
}

double intertwine_check(const SusySystem& sys, std::size_t n) {
    const auto th = partner_state(sys, n);
    const auto target = sys.phi(n + 1);
    const std::size_t count = 481;
    const auto grid = numerics::linspace(0.02, 0.98, count);
    std::vector<double> pp, pq, qq;
    for (double x : grid) {
        const double p = creation(sys, th.values, x), q = target(x);
        pp.push_back(p * p);
        pq.push_back(p * q);
        qq.push_back(q * q);
    }
    const double h = grid[1] - grid[0];
    const double c = simpson_grid(pq, h) / std::sqrt(simpson_grid(pp, h) * simpson_grid(qq, h));
    return 1.0 - std::abs(c);
}

AsymmetricRelations asymmetric_constraint_solve(const Order& ord, const numerics::RealFn& W) {
    const double a = ord.alpha();
    numerics::RealFn bar = [a, W](double x) { return std::pow(x, a - 1) * W(x); };
    return {W, bar, W, W};
}

double two_order_ansatz_residual(const Order& a, const Order& b, const numerics::SmoothFn& phi0,
                                 const std::vector<double>& grid) {
    const double pa = a.alpha(), pb = b.alpha();
    auto D = [](double g, double x, double f1) { return std::pow(x, 1 - g) * f1; };
    // D^g D^h phi0 = x^{1-g} ((1-h) x^{-h} phi0' + x^{1-h} phi0'').
    auto DD = [&](double g, double h, double x) {
        const double f1 = phi0.d1(x, unit_domain()), f2 = phi0.d2(x, unit_domain());
        return std::pow(x, 1 - g) * ((1 - h) * std::pow(x, -h) * f1 + std::pow(x, 1 - h) * f2);
    };
    numerics::RealFn W = [&](double x) {
        const double f1 = phi0.d1(x, unit_domain());
        return -(D(pa, x, f1) + D(pb, x, f1)) / (2.0 * phi0(x));
    };
    double worst = 0.0;
    for (double x : grid) {
        const double w = W(x), dw = fd(W, x, 1);
        const double v1 = w * w - 0.5 * (D(pa, x, dw) + D(pb, x, dw));
        const double delta = DD(pa, pa, x) + DD(pb, pa, x) + DD(pa, pb, x) + DD(pb, pb, x);
        worst = std::max(worst, std::abs(v1 - delta / (4.0 * phi0(x))));
    }
    return worst;
}

NilpotencyReport grid_nilpotency(const SusySystem& sys, std::size_t points) {
    if (points < 3) throw DomainError("grid_nilpotency: need at least 3 points");
    const auto grid = numerics::linspace(0.05, 0.95, points);
    const Eigen::Index N = static_cast<Eigen::Index>(points);
    const double h = grid[1] - grid[0];
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        const double x = grid[static_cast<std::size_t>(i)];
        // Row i of the annihilation operator: a(x) d/dx + b(x).
        const double a = annihilate(sys, x, 0.0, 1.0), b = annihilate(sys, x, 1.0, 0.0);
        if (i == 0) {
            X(i, 0) += -a / h;
            X(i, 1) += a / h;
        } else if (i == N - 1) {
            X(i, N - 2) += -a / h;
            X(i, N - 1) += a / h;
        } else {
            X(i, i - 1) += -a / (2 * h);
            X(i, i + 1) += a / (2 * h);
        }
        X(i, i) += b;
    }
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    Q.block(N, 0, N, N) = X;
    const Eigen::MatrixXd Qbar = Q.transpose();
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd v(2 * N);
    for (Eigen::Index i = 0; i < 2 * N; ++i) v(i) = dist(rng);
    const Eigen::MatrixXd H = Qbar * Q + Q * Qbar;
    NilpotencyReport rep;
    rep.q_squared = (Q * (Q * v)).cwiseAbs().maxCoeff();
    rep.qbar_squared = (Qbar * (Qbar * v)).cwiseAbs().maxCoeff();
    rep.offdiagonal = std::max(H.block(0, N, N, N).cwiseAbs().maxCoeff(), H.block(N, 0, N, N).cwiseAbs().maxCoeff());
    return rep;
}

}  // namespace conformal::susy
