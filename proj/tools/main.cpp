#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conformal/eigenbasis.hpp"
#include "conformal/quantum.hpp"
#include "conformal/sturm.hpp"
#include "conformal/susy.hpp"
#include "conformal/transforms.hpp"
#include "table_io.hpp"

using namespace conformal;
using cli::Table;

namespace {

struct RunConfig {
    std::string command;
    double alpha = 0.5;
    std::optional<double> beta;
    std::string n;
    std::size_t grid = 512;
    std::string out = ".";
    std::string format = "csv";
    bool check = false;
    std::string ordering = "symmetric";
    std::string sturm_case = "4";
    std::string potential = "linear";
};

struct Output {
    std::string stem;
    std::string title;
    Table table;
    bool plot = true;
};

struct Result {
    std::vector<Output> outputs;
    int status = 0;
};

struct BadFlag : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> indices(const RunConfig& c, const std::string& fallback) {
    try {
        return cli::parse_index_range(c.n.empty() ? fallback : c.n);
    } catch (const std::invalid_argument& e) {
        throw BadFlag(std::string("--n: ") + e.what());
    }
}

std::size_t largest(const std::vector<std::size_t>& v) { return *std::max_element(v.begin(), v.end()); }

std::string label(const std::string& stem, std::size_t i) { return stem + std::to_string(i); }

Result run_basis(const RunConfig& c) {
    const auto ns = indices(c, "1..3");
    const JBasis basis(Order(c.alpha), largest(ns));
    Table t;
    t.header = {"x"};
    for (auto n : ns) t.header.push_back(label("J", n));
    for (double x : numerics::linspace(0.0, 1.0, c.grid)) {
        std::vector<cli::Cell> row{x};
        for (auto n : ns) row.emplace_back(basis.eval(n, x));
        t.add(std::move(row));
    }
    Result r;
    r.outputs.push_back({"basis", "J_n, alpha = " + cli::format_number(c.alpha), std::move(t)});
    if (c.check) {
        double worst = 0.0;
        for (auto m : ns)
            for (auto n : ns) {
                const double ip = basis.integrate([&](double x) { return basis.eval(m, x) * basis.eval(n, x); });
                worst = std::max(worst, std::abs(ip - (m == n ? 1.0 : 0.0)));
            }
        std::cout << "orthonormality deviation " << cli::format_number(worst) << '\n';
        if (!(worst < 1e-8)) r.status = 1;
    }
    return r;
}

Result run_zeros(const RunConfig& c) {
    const auto ns = indices(c, "1..5");
    const JBasis basis(Order(c.alpha), largest(ns));
    Table zeros, energies;
    zeros.header = {"n", "k", "position"};
    energies.header = {"n", "zero", "energy"};
    for (auto n : ns) {
        energies.add({double(n), basis.zero(n), basis.eigenvalue(n)});
        for (std::size_t k = 1; k < n; ++k) zeros.add({double(n), double(k), j_zero_position(basis, n, k)});
    }
    Result r;
    r.outputs.push_back({"zeros", "interior zeros", std::move(zeros), false});
    r.outputs.push_back({"eigenvalues", "E_n", std::move(energies)});
    return r;
}

Result run_moments(const RunConfig& c) {
    const auto ns = indices(c, "1..3");
    const JBasis basis(Order(c.alpha), largest(ns));
    Table t;
    t.header = {"n", "M1", "M2", "M3", "M4", "std_dev", "skewness", "kurtosis"};
    for (auto n : ns) {
        const auto m = moment_stats(basis, n, 4);
        t.add({double(n), m.moments[0], m.moments[1], m.moments[2], m.moments[3], m.std_dev, m.skewness, m.kurtosis});
    }
    Table sweep;
    sweep.header = {"alpha", "mean", "std_dev", "skewness", "kurtosis"};
    for (int i = 1; i <= 20; ++i) {
        const double a = 0.05 * i;
        const auto m = moment_stats(JBasis(Order(a), 1), 1, 4);
        sweep.add({a, m.moments[0], m.std_dev, m.skewness, m.kurtosis});
    }
    Result r;
    r.outputs.push_back({"moments", "moments of J_n^2", std::move(t), false});
    r.outputs.push_back({"moments_sweep", "ground-state moments against alpha", std::move(sweep)});
    return r;
}

Result run_expand(const RunConfig& c) {
    const auto ns = indices(c, "20");
    const std::size_t terms = largest(ns);
    const Order ord(c.alpha);
    const JBasis basis(ord, terms);
    const double gamma = monomial_gamma(ord, 0.5 * c.alpha);
    std::vector<double> a(terms);
    Table coef;
    coef.header = {"n", "a_n"};
    for (std::size_t n = 1; n <= terms; ++n) {
        a[n - 1] = fourier_bessel_an(basis, gamma, n);
        coef.add({double(n), a[n - 1]});
    }
    Table t;
    t.header = {"x", "target", "partial_sum"};
    for (double x : numerics::linspace(0.0, 1.0, c.grid)) {
        double s = 0.0;
        for (std::size_t n = 1; n <= terms; ++n) s += a[n - 1] * basis.eval(n, x);
        t.add({x, std::pow(x, 0.5 * c.alpha), s});
    }
    Result r;
    r.outputs.push_back({"expand", "x^(alpha/2) with " + std::to_string(terms) + " terms", std::move(t)});
    r.outputs.push_back({"expand_coefficients", "coefficients", std::move(coef)});
    return r;
}

SturmSpec sturm_spec(const RunConfig& c) {
    const double a = c.alpha;
    SturmSpec spec{Order(a), Order(c.beta.value_or(a)), 0.0, SturmVariant::plain};
    const std::string& k = c.sturm_case;
    try {
        if (k.rfind("p=", 0) == 0) {
            spec.p = std::stod(k.substr(2));
        } else if (k.rfind("w=", 0) == 0) {
            spec.p = std::stod(k.substr(2));
            spec.variant = SturmVariant::weighted;
        } else if (k == "1") {
            spec.p = 0.0;
        } else if (k == "2") {
            spec.p = 1.0;
        } else if (k == "3") {
            spec.p = a;
        } else if (k == "4") {
            spec.p = a / 3.0;
        } else if (k == "5") {
            spec.p = a - 1.0;
        } else if (k == "6") {
            spec.p = a / 3.0;
            spec.variant = SturmVariant::weighted;
        } else {
            throw BadFlag("--case: expected 1..6, p=VALUE or w=VALUE");
        }
    } catch (const std::logic_error&) {
        throw BadFlag("--case: bad number in '" + k + "'");
    }
    return spec;
}

Result run_sturm(const RunConfig& c) {
    const auto spec = sturm_spec(c);
    const double lambda = 10.0;
    const auto sol = case_solution(spec, lambda, 1.0, 1.0);
    const auto grid = numerics::linspace(0.01, 1.0, c.grid);
    Result r;
    Table info;
    info.header = {"case_id", "p", "lambda", "residual"};
    numerics::DiffOptions opt;
    opt.domain_lo = 0.0;
    const double res = sturm_residual(spec, lambda, sol.y, numerics::linspace(0.05, 0.95, 91), opt);
    info.add({double(sol.case_id), spec.p, lambda, res});
    std::cout << "case " << sol.case_id << ": " << sol.description << '\n';
    Table branches;
    branches.header = {"x", "branch_a", "branch_b"};
    for (double x : grid) branches.add({x, sol.branch_a(x), sol.branch_b(x)});
    r.outputs.push_back({"sturm_case", "case summary", std::move(info), false});
    r.outputs.push_back({"sturm_branches", sol.description, std::move(branches)});
    if (spec.variant == SturmVariant::plain && spec.alpha.alpha() - spec.p > 0.0) {
        const auto ns = indices(c, "1..3");
        std::vector<SturmEigen> eig;
        Table spectrum;
        spectrum.header = {"n", "lambda", "zero", "order", "norm_sq"};
        for (auto n : ns) {
            eig.push_back(case4_eigensystem(spec, n));
            spectrum.add({double(n), eig.back().lambda, eig.back().zero, eig.back().order, eig.back().numeric_norm_sq});
        }
        Table fn;
        fn.header = {"x"};
        for (auto n : ns) fn.header.push_back(label("y", n));
        for (double x : numerics::linspace(0.0, 1.0, c.grid)) {
            std::vector<cli::Cell> row{x};
            for (const auto& e : eig) row.emplace_back(e.y(x));
            fn.add(std::move(row));
        }
        r.outputs.push_back({"sturm_spectrum", "eigenvalues", std::move(spectrum), false});
        r.outputs.push_back({"sturm_eigenfunctions", "zero-boundary eigenfunctions", std::move(fn)});
        if (c.check) {
            std::cout << "residual " << cli::format_number(res) << '\n';
            if (!(res < 1e-5)) r.status = 1;
        }
    }
    return r;
}

transforms::TransformOrder transform_order(const RunConfig& c) {
    return transforms::TransformOrder(c.alpha, c.beta.value_or(c.alpha));
}

Result run_transform_table(const RunConfig& c) {
    std::vector<std::pair<double, double>> orders{{1.0, 1.0}, {0.5, 0.5}, {0.75, 0.5}};
    if (c.beta) orders.emplace_back(c.alpha, *c.beta);
    const auto rows = transforms::verify_catalog(orders, {0.5, 1.0, 2.0, 4.0}, {0.5, 1.0, 2.0});
    Table t;
    t.header = {"entry", "transform", "form", "alpha", "beta", "arg", "closed_re", "closed_im",
                "quad_re", "quad_im", "rel_error", "pass"};
    int failures = 0;
    for (const auto& row : rows) {
        t.add({row.entry, row.transform, row.form, row.alpha, row.beta, row.arg, row.closed.real(),
               row.closed.imag(), row.quadrature.real(), row.quadrature.imag(), row.rel_error,
               std::string(row.pass ? "pass" : "fail")});
        if (row.form == "printed" && !row.pass)
            std::cout << "flagged: " << row.entry << ' ' << row.transform << " printed form differs at alpha="
                      << cli::format_number(row.alpha) << " beta=" << cli::format_number(row.beta)
                      << " arg=" << cli::format_number(row.arg) << '\n';
        if (row.form == "canonical" && !row.pass) {
            ++failures;
            std::cerr << "FAIL: " << row.entry << ' ' << row.transform << " rel_error "
                      << cli::format_number(row.rel_error) << '\n';
        }
    }
    Result r;
    r.outputs.push_back({"transform_table", "catalog", std::move(t), false});
    if (c.check && failures > 0) r.status = 1;
    return r;
}

Result run_transform_eval(const RunConfig& c) {
    const auto ord = transform_order(c);
    const auto& names = transforms::table_names();
    std::vector<transforms::TransformEntry> entries;
    for (const auto& n : names) entries.push_back(transforms::table_entry(n));
    Table lap, four;
    lap.header = {"s"};
    four.header = {"omega"};
    for (const auto& e : entries) {
        lap.header.push_back(e.name);
        if (e.fourier) {
            four.header.push_back(e.name + "_re");
            four.header.push_back(e.name + "_im");
        }
    }
    auto guarded = [](auto f) {
        try {
            return f();
        } catch (const Error&) {
            return decltype(f())(std::nan(""));
        }
    };
    for (double s : numerics::linspace(0.25, 4.0, c.grid)) {
        std::vector<cli::Cell> row{s};
        for (const auto& e : entries) row.emplace_back(guarded([&] { return e.laplace(ord, s); }));
        lap.add(std::move(row));
    }
    for (double w : numerics::linspace(0.25, 4.0, c.grid)) {
        std::vector<cli::Cell> row{w};
        for (const auto& e : entries) {
            if (!e.fourier) continue;
            const auto v = guarded([&] { return e.fourier(ord, w); });
            row.emplace_back(v.real());
            row.emplace_back(v.imag());
        }
        four.add(std::move(row));
    }
    Result r;
    r.outputs.push_back({"transform_laplace", "Laplace closed forms", std::move(lap)});
    r.outputs.push_back({"transform_fourier", "Fourier closed forms", std::move(four)});
    if (c.check) {
        Table chk;
        chk.header = {"entry", "s", "closed", "quadrature", "rel_error"};
        for (const auto& e : entries) {
            for (double s : {0.5, 1.0, 2.0, 4.0}) {
                const double closed = e.laplace(ord, s);
                const double quad = transforms::conformable_laplace(e.time_form(ord), ord, s);
                const double rel = std::abs(closed - quad) / std::max(std::abs(quad), 1e-300);
                chk.add({e.name, s, closed, quad, rel});
                if (!(rel < 1e-6)) r.status = 1;
            }
        }
        r.outputs.push_back({"transform_check", "Laplace check", std::move(chk), false});
    }
    return r;
}

quantum::Perturbation parse_potential(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    std::optional<double> value;
    if (colon != std::string::npos) {
        try {
            value = std::stod(text.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw BadFlag("--potential: bad number in '" + text + "'");
        }
    }
    if (kind == "linear") return quantum::Perturbation::linear(value.value_or(1.0));
    if (kind == "step-left") return quantum::Perturbation::step_left(value.value_or(1.0));
    if (kind == "step-right") return quantum::Perturbation::step_right(value.value_or(1.0));
    if (kind == "power") return quantum::Perturbation::power(1.0, value.value_or(1.0));
    throw BadFlag("--potential: expected linear, step-left, step-right or power[:VALUE]");
}

Result run_perturb(const RunConfig& c) {
    const auto pert = parse_potential(c.potential);
    const std::size_t n = indices(c, "1").front();
    const std::size_t size = std::max(quantum::kDefaultBasisSize, n + 3);
    const JBasis basis(Order(c.alpha), size);
    const auto st = quantum::first_order_state(basis, pert, n, size);
    if (!st.converged) std::cerr << "warning: " << st.warning << '\n';
    const double norm = std::sqrt(quantum::state_norm_sq(st));
    Table state;
    state.header = {"x", "psi0", "psi1"};
    for (double x : numerics::linspace(0.0, 1.0, c.grid))
        state.add({x, basis.eval(n, x), quantum::state_value(basis, st, x) / norm});
    Table coef;
    coef.header = {"m", "c_m"};
    for (std::size_t m = 1; m <= st.coefficients.size(); ++m) coef.add({double(m), st.coefficients[m - 1]});
    Result r;
    r.outputs.push_back({"perturb_state", "first-order state", std::move(state)});
    r.outputs.push_back({"perturb_coefficients", "expansion coefficients", std::move(coef)});
    std::cout << "E0 " << cli::format_number(st.energy0) << " E1 " << cli::format_number(st.energy1_correction)
              << " mean_x " << cli::format_number(quantum::state_mean_position(basis, st)) << '\n';
    if (pert.kind == quantum::Perturbation::Kind::step_left || pert.kind == quantum::Perturbation::Kind::step_right) {
        std::vector<double> alphas;
        for (int i = 1; i <= 100; ++i) alphas.push_back(0.01 * i);
        const auto rows = quantum::wall_asymmetry_scan(alphas);
        Table wall;
        wall.header = {"alpha", "left", "right", "difference"};
        for (const auto& w : rows) wall.add({w.alpha, w.left, w.right, w.difference});
        std::cout << "wall asymmetry argmax alpha " << cli::format_number(quantum::wall_asymmetry_argmax(rows)) << '\n';
        r.outputs.push_back({"wall_scan", "wall corrections against alpha", std::move(wall)});
    }
    return r;
}

Result run_phantom(const RunConfig& c) {
    const Order ord(c.alpha);
    const JBasis target(ord, 1), box(Order(1.0), quantum::kDefaultBasisSize);
    Table fit;
    fit.header = {"trial", "alpha", "lambda", "l2_residual", "max_residual"};
    Table curves;
    curves.header = {"x", "target", "box_ground"};
    std::vector<quantum::PhantomReport> reps;
    for (auto tr : {quantum::PhantomTrial::x, quantum::PhantomTrial::x_alpha, quantum::PhantomTrial::x_half_alpha}) {
        reps.push_back(quantum::phantom_potential_fit(ord, tr));
        const auto& p = reps.back();
        fit.add({quantum::trial_name(tr), p.alpha, p.lambda, p.l2_residual, p.max_residual});
        curves.header.push_back("fit_" + quantum::trial_name(tr));
    }
    for (double x : numerics::linspace(0.0, 1.0, c.grid)) {
        std::vector<cli::Cell> row{x, target.eval(1, x), box.eval(1, x)};
        for (const auto& p : reps) {
            double s = 0.0;
            for (std::size_t m = 1; m <= p.coefficients.size(); ++m) s += p.coefficients[m - 1] * box.eval(m, x);
            row.emplace_back(s);
        }
        curves.add(std::move(row));
    }
    Result r;
    r.outputs.push_back({"phantom_fit", "phantom trials", std::move(fit), false});
    r.outputs.push_back({"phantom_curves", "phantom fits", std::move(curves)});
    return r;
}

Result run_susy(const RunConfig& c) {
    if (c.ordering != "symmetric" && c.ordering != "asymmetric")
        throw BadFlag("--ordering: expected symmetric or asymmetric");
    const bool sym = c.ordering == "symmetric";
    const std::size_t states = largest(indices(c, "3"));
    const Order ord(c.alpha);
    const auto sys = sym ? susy::box_system(ord, states + 2) : susy::asymmetric_system(ord, states + 2);
    Table pot;
    pot.header = {"x", "W", "V1", "V2"};
    for (double x : numerics::linspace(0.05, 0.95, c.grid)) pot.add({x, sys.W(x), sys.V1(x), sys.V2(x)});
    Table lad;
    lad.header = {"n", "ladder1", "ladder2"};
    for (std::size_t n = 0; n < sys.ladder2.size(); ++n) lad.add({double(n), sys.ladder1[n], sys.ladder2[n]});
    std::vector<susy::PartnerState> th;
    Table st;
    st.header = {"x"};
    for (std::size_t n = 0; n < states; ++n) {
        th.push_back(susy::partner_state(sys, n));
        st.header.push_back("theta_" + std::to_string(n));
    }
    for (double x : numerics::linspace(0.0, 1.0, c.grid)) {
        std::vector<cli::Cell> row{x};
        for (const auto& t : th) row.emplace_back(t.values(x));
        st.add(std::move(row));
    }
    Result r;
    r.outputs.push_back({"susy_potentials", "superpotential and partner potentials", std::move(pot)});
    r.outputs.push_back({"susy_ladders", "partner ladders", std::move(lad)});
    r.outputs.push_back({"susy_states", "partner states", std::move(st)});
    if (c.check) {
        const auto rep = susy::verify_isospectral(sys, states);
        const double tol = sym ? 1e-6 : 1e-4;
        std::cout << "isospectral residual " << cli::format_number(rep.worst_residual) << " ladder gap "
                  << cli::format_number(rep.worst_ladder_gap) << '\n';
        if (!sym) std::cout << "literal partner residual " << cli::format_number(rep.literal_v2_residual) << '\n';
        if (!(rep.worst_residual < tol)) r.status = 1;
    }
    return r;
}

std::string module_of(const std::string& command) {
    if (command == "basis" || command == "zeros" || command == "moments" || command == "expand") return "eigenbasis";
    if (command == "transform-table" || command == "transform-eval") return "transforms";
    if (command == "perturb" || command == "phantom") return "quantum";
    return command;
}

Result dispatch(const RunConfig& c) {
    if (c.command == "basis") return run_basis(c);
    if (c.command == "zeros") return run_zeros(c);
    if (c.command == "moments") return run_moments(c);
    if (c.command == "expand") return run_expand(c);
    if (c.command == "sturm") return run_sturm(c);
    if (c.command == "transform-table") return run_transform_table(c);
    if (c.command == "transform-eval") return run_transform_eval(c);
    if (c.command == "perturb") return run_perturb(c);
    if (c.command == "phantom") return run_phantom(c);
    return run_susy(c);
}

void emit(const RunConfig& c, const std::vector<Output>& outputs) {
    const std::filesystem::path dir(c.out);
    std::filesystem::create_directories(dir);
    for (const auto& o : outputs) {
        if (c.format == "csv" || c.format == "both" || !o.plot) {
            const auto path = dir / (o.stem + ".csv");
            std::ofstream f(path, std::ios::binary);
            cli::write_csv(o.table, f);
            std::cout << path.string() << '\n';
        }
        if ((c.format == "svg" || c.format == "both") && o.plot) {
            const auto path = dir / (o.stem + ".svg");
            std::ofstream f(path, std::ios::binary);
            cli::write_svg(o.table, o.title, f);
            std::cout << path.string() << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conformable calculus toolkit: eigenbasis, Sturm-Liouville, transform, perturbation and SUSY data as CSV and SVG"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"basis", "J_n on a grid"},
        {"zeros", "interior zeros and eigenvalues"},
        {"moments", "moments of J_n^2 and an alpha sweep"},
        {"expand", "series expansion of x^(alpha/2)"},
        {"sturm", "Sturm-Liouville case solutions and spectrum"},
        {"transform-table", "verify the transform table"},
        {"transform-eval", "evaluate the transform closed forms"},
        {"perturb", "first-order perturbed box state"},
        {"phantom", "phantom-potential trials"},
        {"susy", "superpotential, partner potentials and ladders"}};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--alpha", cfg.alpha, "order alpha in (0, 1]");
        sub->add_option("--beta", cfg.beta, "second order beta in (0, 1]");
        sub->add_option("--n", cfg.n, "index or range: 3, 1..4, 1,3,5");
        sub->add_option("--grid", cfg.grid, "grid points (>= 16)");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_option("--format", cfg.format, "csv, svg or both")->check(CLI::IsMember({"csv", "svg", "both"}));
        sub->add_flag("--check", cfg.check, "verify and exit 1 on failure");
        sub->add_option("--ordering", cfg.ordering, "susy ordering: symmetric or asymmetric");
        sub->add_option("--case", cfg.sturm_case, "sturm case 1..6, p=VALUE or w=VALUE");
        sub->add_option("--potential", cfg.potential, "linear, step-left, step-right or power, with optional :VALUE");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }
    try {
        app.parse(argc, argv);
        if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw BadFlag("--alpha must lie in (0, 1]");
        if (cfg.beta && !(*cfg.beta > 0.0 && *cfg.beta <= 1.0)) throw BadFlag("--beta must lie in (0, 1]");
        if (cfg.grid < 16) throw BadFlag("--grid must be at least 16");
        const auto result = dispatch(cfg);
        emit(cfg, result.outputs);
        return result.status;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const BadFlag& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << module_of(cfg.command) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
