#include "conformal/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace conformal::quantum {

namespace {

numerics::EdgeBehaviour edge_for(const JBasis& basis) {
    numerics::EdgeBehaviour e;
    if (basis.order().alpha() < 1.0) e.lo_exponent = basis.order().alpha();
    return e;
}

}  // namespace

Perturbation Perturbation::linear(double lambda) { return {Kind::linear, lambda, 0.25, 1.0}; }

Perturbation Perturbation::step_left(double lambda, double edge) {
    if (!(edge > 0.0 && edge < 1.0)) throw DomainError("step_left: edge outside (0, 1)");
    return {Kind::step_left, lambda, edge, 1.0};
}

Perturbation Perturbation::step_right(double lambda, double edge) {
    if (!(edge > 0.0 && edge < 1.0)) throw DomainError("step_right: edge outside (0, 1)");
    return {Kind::step_right, lambda, edge, 1.0};
}

Perturbation Perturbation::power(double lambda, double exponent) {
    if (!(exponent >= 0.0)) throw DomainError("power: exponent must be >= 0");
    return {Kind::power, lambda, 0.25, exponent};
}

numerics::RealFn potential(const JBasis& basis, const Perturbation& pert) {
    const double e1 = basis.eigenvalue(1);
    switch (pert.kind) {
        case Perturbation::Kind::linear:
            return [e1](double x) { return e1 * x; };
        case Perturbation::Kind::step_left:
            return [e1, a = pert.edge](double x) { return x <= a ? e1 : 0.0; };
        case Perturbation::Kind::step_right:
            return [e1, a = pert.edge](double x) { return x > a ? e1 : 0.0; };
        case Perturbation::Kind::power:
            return [p = pert.exponent](double x) { return std::pow(x, p); };
    }
    throw DomainError("potential: unknown kind");
}

std::vector<double> potential_breakpoints(const Perturbation& pert) {
    if (pert.kind == Perturbation::Kind::step_left || pert.kind == Perturbation::Kind::step_right)
        return {pert.edge};
    return {};
}

double matrix_element(const JBasis& basis, const numerics::RealFn& V, std::size_t m, std::size_t n,
                      const std::vector<double>& breakpoints) {
    return basis.integrate([&](double x) { return basis.eval(m, x) * V(x) * basis.eval(n, x); },
                           breakpoints);
}

PerturbedState first_order_state(const JBasis& basis, const Perturbation& pert, std::size_t n,
                                 std::size_t basis_size) {
    if (n < 1) throw IndexError("first_order_state: n starts at 1");
    if (basis_size < n + 3) throw DomainError("first_order_state: basis_size must be at least n + 3");
    if (basis_size > basis.max_n()) throw IndexError("first_order_state: basis_size exceeds max_n");
    const auto V = potential(basis, pert);
    const auto bps = potential_breakpoints(pert);
    PerturbedState st;
    st.n = n;
    st.basis_size = basis_size;
    st.energy0 = basis.eigenvalue(n);
    st.energy1_correction = pert.strength * matrix_element(basis, V, n, n, bps);
    st.coefficients.assign(basis_size, 0.0);
    double largest = 0.0;
    for (std::size_t m = 1; m <= basis_size; ++m) {
        if (m == n) continue;
        const double c = pert.strength * matrix_element(basis, V, m, n, bps) /
                         (st.energy0 - basis.eigenvalue(m));
        if (!std::isfinite(c)) throw NonFinite("first_order_state: non-finite coefficient");
        st.coefficients[m - 1] = c;
        largest = std::max(largest, std::abs(c));
    }
    const std::size_t last = basis_size == n ? basis_size - 1 : basis_size;
    st.converged = largest == 0.0 || std::abs(st.coefficients[last - 1]) < 1e-6 * largest;
    if (!st.converged)
        st.warning = "truncation: last coefficient " + std::to_string(std::abs(st.coefficients[last - 1])) +
                     " exceeds 1e-6 of the largest " + std::to_string(largest);
    return st;
}

double state_value(const JBasis& basis, const PerturbedState& state, double x) {
    double v = basis.eval(state.n, x);
    for (std::size_t m = 1; m <= state.coefficients.size(); ++m)
        if (state.coefficients[m - 1] != 0.0) v += state.coefficients[m - 1] * basis.eval(m, x);
    return v;
}

double state_norm_sq(const PerturbedState& state) {
    double s = 1.0;
    for (double c : state.coefficients) s += c * c;
    return s;
}

double state_mean_position(const JBasis& basis, const PerturbedState& state) {
    const double m1 = basis.integrate([&](double x) {
        const double p = state_value(basis, state, x);
        return x * p * p;
    });
    return m1 / state_norm_sq(state);
}

double rayleigh_quotient(const JBasis& basis, const Perturbation& pert, const PerturbedState& state) {
    const std::size_t N = state.coefficients.size();
    std::vector<double> a(state.coefficients);
    a[state.n - 1] = 1.0;
    const auto V = potential(basis, pert);
    const auto bps = potential_breakpoints(pert);
    double num = 0.0;
    for (std::size_t m = 1; m <= N; ++m) {
        num += a[m - 1] * a[m - 1] * basis.eigenvalue(m);
        for (std::size_t k = m; k <= N; ++k) {
            const double v = matrix_element(basis, V, m, k, bps);
            num += (k == m ? 1.0 : 2.0) * pert.strength * a[m - 1] * a[k - 1] * v;
        }
    }
    double den = 0.0;
    for (double c : a) den += c * c;
    return num / den;
}

std::vector<WallRow> wall_asymmetry_scan(const std::vector<double>& alpha_grid) {
    std::vector<WallRow> rows;
    for (double a : alpha_grid) {
        const JBasis basis(Order(a), 1);
        const double e1 = basis.eigenvalue(1);
        auto density = [&](double x) {
            const double j = basis.eval(1, x);
            return j * j;
        };
        const double left = e1 * numerics::integrate(density, {0.0, 0.25}, numerics::default_tolerance(),
                                                     edge_for(basis)).value;
        const double right = e1 * numerics::integrate(density, {0.75, 1.0}).value;
        rows.push_back({a, left, right, left - right});
    }
    return rows;
}

double wall_asymmetry_argmax(const std::vector<WallRow>& rows) {
    if (rows.empty()) throw DomainError("wall_asymmetry_argmax: empty scan");
    return std::max_element(rows.begin(), rows.end(),
                            [](const WallRow& l, const WallRow& r) { return l.difference < r.difference; })
        ->alpha;
}

std::string trial_name(PhantomTrial t) {
    switch (t) {
        case PhantomTrial::x: return "x";
        case PhantomTrial::x_alpha: return "x^alpha";
        case PhantomTrial::x_half_alpha: return "x^(alpha/2)";
    }
    return "?";
}

PhantomReport phantom_potential_fit(const Order& alpha, PhantomTrial trial, std::optional<double> lambda,
                                    std::size_t basis_size) {
    const double a = alpha.alpha();
    const double exponent = trial == PhantomTrial::x ? 1.0 : trial == PhantomTrial::x_alpha ? a : 0.5 * a;
    const JBasis box(Order(1.0), basis_size);
    const JBasis target(alpha, 1);
    // Unit-strength first-order correction in the sine box.
    const auto unit = first_order_state(box, Perturbation::power(1.0, exponent), 1, basis_size);
    auto v = [&](double x) { return state_value(box, unit, x) - box.eval(1, x); };
    auto gap = [&](double x) { return target.eval(1, x) - box.eval(1, x); };
    numerics::EdgeBehaviour edge;
    edge.lo_exponent = std::min(0.5 * a, 1.0);
    auto quad = [&](const numerics::RealFn& f) {
        return numerics::integrate(f, {0.0, 1.0}, numerics::default_tolerance(), edge).value;
    };
    double lam;
    if (lambda) {
        lam = *lambda;
    } else {
        double vv = 0.0;
        for (double c : unit.coefficients) vv += c * c;
        lam = quad([&](double x) { return gap(x) * v(x); }) / vv;
    }
    auto resid = [&](double x) { return box.eval(1, x) + lam * v(x) - target.eval(1, x); };
    PhantomReport rep;
    rep.trial = trial;
    rep.alpha = a;
    rep.lambda = lam;
    rep.l2_residual = std::sqrt(quad([&](double x) {
        const double r = resid(x);
        return r * r;
    }));
    rep.max_residual = 0.0;
    for (double x : numerics::linspace(0.0, 1.0, 2001))
        rep.max_residual = std::max(rep.max_residual, std::abs(resid(x)));
    rep.coefficients.assign(basis_size, 0.0);
    rep.coefficients[0] = 1.0;
    for (std::size_t m = 2; m <= basis_size; ++m) rep.coefficients[m - 1] = lam * unit.coefficients[m - 1];
    return rep;
}

}  // namespace conformal::quantum
