#include "conformal/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "conformal/specfun.hpp"

namespace conformal::transforms {

namespace {

const double kPi = std::acos(-1.0);
const Complex kI(0.0, 1.0);

constexpr double kTailRel = 1e-13;
constexpr double kEnvelopeRel = 1e-14;
constexpr int kMaxDoublings = 40;
const numerics::Tolerance kQuadTol{1e-12, 1e-10, 60};

// Breakpoints every few periods so each panel holds a bounded number of oscillations.
std::vector<double> oscillation_breaks(double lo, double hi, double freq) {
    std::vector<double> out;
    if (!(freq > 0.0)) return out;
    const double period = 2.0 * kPi / freq;
    const std::size_t m = std::min<std::size_t>(2000, static_cast<std::size_t>((hi - lo) / (4.0 * period)));
    for (std::size_t i = 1; i < m; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / m);
    return out;
}

// int_0^inf h(u) du, truncated by doubling U until both the last panel and
// the envelope at U are negligible.
double half_line(const numerics::RealFn& h, const numerics::RealFn& envelope, double freq,
                 std::optional<double> lo_exponent, const char* what) {
    numerics::EdgeBehaviour edge;
    edge.lo_exponent = lo_exponent;
    double total = 0.0;
    try {
        total = numerics::integrate(h, {0.0, 1.0}, kQuadTol, edge).value;
    } catch (const NonFinite& e) {
        throw Divergent(std::string(what) + ": " + e.what());
    }
    double U = 1.0;
    for (int k = 0; k < kMaxDoublings; ++k) {
        const double hi = 2.0 * U;
        double piece = 0.0;
        try {
            piece = numerics::integrate_piecewise(h, U, hi, oscillation_breaks(U, hi, freq), kQuadTol).value;
        } catch (const NonFinite& e) {
            throw Divergent(std::string(what) + ": " + e.what());
        }
        total += piece;
        U = hi;
        if (!std::isfinite(total)) throw Divergent(std::string(what) + ": non-finite integral");
        const double scale = std::max(1.0, std::abs(total));
        double env = 0.0;
        for (double f : {0.8, 0.9, 1.0}) env = std::max(env, std::abs(envelope(f * U)));
        if (std::abs(piece) <= kTailRel * scale && env <= kEnvelopeRel * scale) return total;
    }
    throw Divergent(std::string(what) + ": tail bound not met by U = 2^40");
}

// int_0^inf pos(u) e^{iWu} du + phase int_0^inf neg(u) e^{-iWu} du.
Complex fourier_split(const numerics::RealFn& pos, const numerics::RealFn& neg, Complex phase,
                      double W, std::optional<double> lo_exponent) {
    auto part = [&](const numerics::RealFn& g, double sign) {
        auto env = [&](double u) { return g(u); };
        const double re = half_line([&](double u) { return g(u) * std::cos(W * u); }, env,
                                    std::abs(W), lo_exponent, "fourier");
        const double im = W == 0.0 ? 0.0
                                   : half_line([&](double u) { return g(u) * std::sin(sign * W * u); },
                                               env, std::abs(W), lo_exponent, "fourier");
        return Complex(re, im);
    };
    Complex out = part(pos, 1.0);
    if (neg) out += phase * part(neg, -1.0);
    return out;
}

void require_explicit(const TimeFunction& tf, const char* what) {
    if (tf.kind != TimeFunction::Kind::explicit_natural)
        throw NotExplicit(std::string(what) + ": function is not explicit in t^alpha/alpha");
}

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TransformOrder::TransformOrder(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("TransformOrder: beta must lie in (0, 1]");
}

TransformOrder TransformOrder::strict(double alpha, double beta, double lambda) {
    if (std::abs(beta - lambda * alpha) > 1e-12)
        throw DomainError("TransformOrder: strict mode needs beta = lambda alpha");
    return TransformOrder(alpha, beta);
}

TransformOrder TransformOrder::from_ratio(double alpha, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("TransformOrder: lambda must be positive");
    return TransformOrder(alpha, lambda * alpha);
}

double TransformOrder::natural_frequency(double omega) const {
    const double w = std::pow(std::abs(omega), beta_) / beta_;
    return omega < 0.0 ? -w : w;
}

double TransformOrder::natural_laplace(double s) const {
    if (!(s > 0.0)) throw DomainError("conformable_laplace: s must be positive");
    return std::pow(s, beta_) / beta_;
}

TimeFunction TimeFunction::natural(numerics::SmoothFn g, std::string decay, bool two_sided) {
    TimeFunction tf;
    tf.kind = Kind::explicit_natural;
    tf.g = std::move(g);
    tf.two_sided = two_sided;
    tf.decay_certificate = std::move(decay);
    return tf;
}

TimeFunction TimeFunction::raw(numerics::RealFn f) {
    TimeFunction tf;
    tf.kind = Kind::raw;
    tf.g = numerics::SmoothFn(std::move(f));
    return tf;
}

double laplace_natural(const numerics::RealFn& g, double S, std::optional<double> lo_exponent) {
    return half_line([&](double u) { return g(u) * std::exp(-S * u); },
                     [&](double u) { return g(u) * std::exp(-S * u); }, 0.0, lo_exponent, "laplace");
}

Complex fourier_natural(const numerics::RealFn& g, double W, bool two_sided,
                        std::optional<double> lo_exponent) {
    numerics::RealFn neg;
    if (two_sided) neg = [&](double u) { return g(-u); };
    return fourier_split(g, neg, 1.0, W, lo_exponent);
}

double conformable_laplace(const TimeFunction& tf, const TransformOrder& ord, double s) {
    require_explicit(tf, "conformable_laplace");
    return laplace_natural(tf.g.f, ord.natural_laplace(s), tf.lo_exponent);
}

Complex conformable_fourier(const TimeFunction& tf, const TransformOrder& ord, double omega) {
    require_explicit(tf, "conformable_fourier");
    return fourier_natural(tf.g.f, ord.natural_frequency(omega), tf.two_sided, tf.lo_exponent);
}

double conformable_inverse_fourier(const std::function<Complex(double)>& ft,
                                   const TransformOrder& ord, double t) {
    if (t < 0.0) throw DomainError("conformable_inverse_fourier: t must be >= 0");
    const double u = std::pow(t, ord.alpha().alpha()) / ord.alpha().alpha();
    const double b = ord.beta();
    // Integrate over W = omega^beta/beta on both half-lines.
    auto omega_of = [b](double W) { return std::pow(b * W, 1.0 / b); };
    auto integrand = [&](double W) {
        const Complex plus = ft(omega_of(W)) * std::exp(-kI * W * u);
        const Complex minus = ft(-omega_of(W)) * std::exp(kI * W * u);
        return (plus + minus).real();
    };
    auto env = [&](double W) { return std::abs(ft(omega_of(W))) + std::abs(ft(-omega_of(W))); };
    return half_line(integrand, env, u, std::nullopt, "inverse_fourier") / (2.0 * kPi);
}

TimeFunction TransformEntry::time_form(const TransformOrder& ord) const {
    const double a = ord.alpha().alpha();
    auto gg = g;
    auto tf = TimeFunction::natural(numerics::SmoothFn([gg, a](double u) { return gg(u, a); }),
                                    "table entry", fourier_two_sided);
    return tf;
}

const std::vector<std::string>& table_names() {
    static const std::vector<std::string> names = {
        "one", "t", "t_pow_n", "natural", "natural_pow_p", "exp_decay",
        "pow_exp_decay", "cos", "sin", "damped_cos", "gaussian"};
    return names;
}

TransformEntry table_entry(const std::string& name, EntryParams prm) {
    TransformEntry e;
    e.name = name;
    e.params = prm;
    const double k = prm.k, q = prm.q, sg = prm.sigma, p = prm.p, n = prm.n;
    auto sb = [](const TransformOrder& o, double s) { return std::pow(s, o.beta()); };
    // Frequency side: omega^beta written as beta W so negative omega follows the ray.
    auto wb = [](const TransformOrder& o, double w) { return o.beta() * o.natural_frequency(w); };
    auto monomial = [sb](double m) {
        return [sb, m](const TransformOrder& o, double s) {
            const double a = o.alpha().alpha(), b = o.beta(), r = m / a;
            return std::pow(a, r) * std::pow(b, r + 1.0) * specfun::gamma(r + 1.0) /
                   std::pow(sb(o, s), r + 1.0);
        };
    };
    if (name == "one") {
        e.time_text = "1";
        e.g = [](double, double) { return 1.0; };
        e.laplace = [sb](const TransformOrder& o, double s) { return o.beta() / sb(o, s); };
        e.fourier_symbolic = "2 pi delta(s^beta)";
    } else if (name == "t") {
        e.time_text = "t";
        e.g = [](double u, double a) { return std::pow(a * u, 1.0 / a); };
        e.laplace = monomial(1.0);
    } else if (name == "t_pow_n") {
        e.time_text = "t^n";
        e.g = [n](double u, double a) { return std::pow(a * u, n / a); };
        e.laplace = monomial(n);
    } else if (name == "natural") {
        e.time_text = "t^alpha/alpha";
        e.g = [](double u, double) { return u; };
        e.laplace = [sb](const TransformOrder& o, double s) { return std::pow(o.beta() / sb(o, s), 2); };
    } else if (name == "natural_pow_p") {
        e.time_text = "(t^alpha/alpha)^p";
        e.g = [p](double u, double) { return std::pow(u, p); };
        e.laplace = [sb, p](const TransformOrder& o, double s) {
            return std::pow(o.beta() / sb(o, s), p + 1.0) * specfun::gamma(p + 1.0);
        };
    } else if (name == "exp_decay") {
        e.time_text = "exp(-k t^alpha/alpha)";
        e.g = [k](double u, double) { return std::exp(-k * u); };
        e.laplace = [sb, k](const TransformOrder& o, double s) {
            return o.beta() / (o.beta() * k + sb(o, s));
        };
        e.fourier = [wb, k](const TransformOrder& o, double w) {
            return Complex(o.beta()) / (o.beta() * k - kI * wb(o, w));
        };
    } else if (name == "pow_exp_decay") {
        e.time_text = "(t^alpha/alpha)^p exp(-k t^alpha/alpha)";
        e.g = [k, p](double u, double) { return std::pow(u, p) * std::exp(-k * u); };
        e.laplace = [sb, k, p](const TransformOrder& o, double s) {
            return std::pow(o.beta() / (o.beta() * k + sb(o, s)), p + 1.0) * specfun::gamma(p + 1.0);
        };
        e.fourier = [wb, k, p](const TransformOrder& o, double w) {
            return std::pow(Complex(o.beta()) / (o.beta() * k - kI * wb(o, w)), p + 1.0) *
                   specfun::gamma(p + 1.0);
        };
    } else if (name == "cos") {
        e.time_text = "cos(q t^alpha/alpha)";
        e.g = [q](double u, double) { return std::cos(q * u); };
        e.laplace = [sb, q](const TransformOrder& o, double s) {
            const double b = o.beta(), x = sb(o, s);
            return b * x / (x * x + b * b * q * q);
        };
        e.laplace_printed = [sb, q](const TransformOrder& o, double s) {
            const double b = o.beta(), x = sb(o, s);
            return b * x / (x + b * b * q * q);
        };
        e.note = "printed denominator s^beta + beta^2 q^2; canonical s^{2 beta} + beta^2 q^2";
    } else if (name == "sin") {
        e.time_text = "sin(q t^alpha/alpha)";
        e.g = [q](double u, double) { return std::sin(q * u); };
        e.laplace = [sb, q](const TransformOrder& o, double s) {
            const double b = o.beta(), x = sb(o, s);
            return b * b * q / (x * x + b * b * q * q);
        };
    } else if (name == "damped_cos") {
        e.time_text = "exp(-k t^alpha/alpha) cos(q t^alpha/alpha)";
        e.g = [k, q](double u, double) { return std::exp(-k * u) * std::cos(q * u); };
        auto lap = [sb, k, q](const TransformOrder& o, double s) {
            const double b = o.beta(), x = sb(o, s) + b * k;
            return x / (x * x + b * b * q * q);
        };
        auto fou = [wb, k, q](const TransformOrder& o, double w) {
            const double b = o.beta();
            const Complex x = b * k - kI * wb(o, w);
            return x / (x * x + b * b * q * q);
        };
        e.laplace = [lap](const TransformOrder& o, double s) { return o.beta() * lap(o, s); };
        e.laplace_printed = lap;
        e.fourier = [fou](const TransformOrder& o, double w) { return o.beta() * fou(o, w); };
        e.fourier_printed = fou;
        e.note = "printed Laplace and Fourier forms lack the overall factor beta";
    } else if (name == "gaussian") {
        e.time_text = "exp(-sigma^2 (t^alpha/alpha)^2)";
        e.g = [sg](double u, double) { return std::exp(-sg * sg * u * u); };
        e.fourier_two_sided = true;
        e.laplace = [sb, sg](const TransformOrder& o, double s) {
            const double b = o.beta(), x = sb(o, s);
            const double z = x / (2.0 * sg * b);
            return std::sqrt(kPi) / (2.0 * sg) * std::exp(z * z) * std::erfc(z);
        };
        auto shape = [sg](const TransformOrder& o, double w) {
            const double W = o.natural_frequency(w);
            return std::exp(-W * W / (4.0 * sg * sg));
        };
        e.fourier = [shape, sg](const TransformOrder& o, double w) {
            return Complex(std::sqrt(kPi) / sg * shape(o, w));
        };
        e.fourier_printed = [shape, sg](const TransformOrder& o, double w) {
            return Complex(shape(o, w) / (std::sqrt(2.0) * sg));
        };
        e.note = "printed Fourier prefactor 1/(sqrt2 sigma) belongs to the unitary convention; "
                 "kernel e^{iWu} without prefactor gives sqrt(pi)/sigma";
    } else {
        throw UnknownEntry("table_entry: unknown entry '" + name + "'");
    }
    if (!e.laplace_printed) e.laplace_printed = e.laplace;
    if (e.fourier && !e.fourier_printed) e.fourier_printed = e.fourier;
    return e;
}

std::vector<CatalogRow> verify_catalog(const std::vector<std::pair<double, double>>& orders,
                                       const std::vector<double>& s_values,
                                       const std::vector<double>& omega_values, double rel_tol) {
    std::vector<CatalogRow> rows;
    for (const auto& name : table_names()) {
        const auto e = table_entry(name);
        for (const auto& [a, b] : orders) {
            const TransformOrder ord(a, b);
            const auto tf = e.time_form(ord);
            for (double s : s_values) {
                const double quad = conformable_laplace(tf, ord, s);
                auto add = [&](const char* form, double closed) {
                    const double err = rel_err(quad, closed);
                    rows.push_back({name, "laplace", form, a, b, s, closed, quad, err, err < rel_tol});
                };
                add("canonical", e.laplace(ord, s));
                if (e.printed_differs()) add("printed", e.laplace_printed(ord, s));
            }
            if (!e.fourier) continue;
            for (double w : omega_values) {
                const Complex quad = conformable_fourier(tf, ord, w);
                auto add = [&](const char* form, Complex closed) {
                    const double err = rel_err(quad, closed);
                    rows.push_back({name, "fourier", form, a, b, w, closed, quad, err, err < rel_tol});
                };
                add("canonical", e.fourier(ord, w));
                if (e.printed_differs()) add("printed", e.fourier_printed(ord, w));
            }
        }
    }
    return rows;
}

void write_catalog_csv(const std::vector<CatalogRow>& rows, std::ostream& out) {
    auto num = [](double v) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    };
    out << "entry,transform,form,alpha,beta,arg,closed_re,closed_im,quad_re,quad_im,rel_error,pass\n";
    for (const auto& r : rows)
        out << r.entry << ',' << r.transform << ',' << r.form << ',' << num(r.alpha) << ','
            << num(r.beta) << ',' << num(r.arg) << ',' << num(r.closed.real()) << ','
            << num(r.closed.imag()) << ',' << num(r.quadrature.real()) << ','
            << num(r.quadrature.imag()) << ',' << num(r.rel_error) << ','
            << (r.pass ? "pass" : "fail") << '\n';
}

double delta_scale(double x0, const Order& ord) {
    if (!(x0 > 0.0)) throw DomainError("delta_scale: x0 must be positive");
    const double a = ord.alpha();
    return 1.0 / (a * std::pow(x0, a - 1.0));
}

std::vector<DeltaTerm> delta_composite(const numerics::SmoothFn& f, const std::vector<double>& roots,
                                       const Order& ord) {
    std::vector<DeltaTerm> out;
    const double a = ord.alpha();
    for (double v0 : roots) {
        if (!(v0 > 0.0)) throw DomainError("delta_composite: roots must be positive in v = x^alpha");
        const double slope = std::abs(f.d1(v0));
        if (slope < 1e-12) throw DegenerateRoot("delta_composite: |f'(v0)| below 1e-12");
        const double x = std::pow(v0, 1.0 / a);
        out.push_back({x, 1.0 / (a * std::pow(x, a - 1.0) * slope)});
    }
    return out;
}

DeltaTerm delta_difference(double x1, double x2, const Order& ord) {
    const double a = ord.alpha();
    const double v0 = std::pow(x1, a) - std::pow(x2, a);
    if (!(v0 > 0.0)) throw DomainError("delta_difference: need x1^alpha > x2^alpha");
    const double x = std::pow(v0, 1.0 / a);
    return {x, 1.0 / (a * std::pow(x, a - 1.0))};
}

DerivativeReport derivative_theorem_check(const TimeFunction& tf, const TransformOrder& ord,
                                          const std::vector<double>& omega_grid) {
    require_explicit(tf, "derivative_theorem_check");
    const double a = ord.alpha().alpha();
    const auto& g = tf.g;
    auto dg = [&](double u) { return g.d1(u); };
    auto d2g = [&](double u) { return g.d2(u); };
    // f' = t^{alpha-1} g'(u) = (alpha u)^c g'(u); on the negative branch the
    // power picks up the phase e^{i pi c}.
    const double c = (a - 1.0) / a;
    const Complex phase = std::exp(kI * kPi * c);
    auto pw = [a, c](double v) { return c == 0.0 ? 1.0 : std::pow(a * v, c); };
    auto h_pos = [&](double v) { return dg(v) * pw(v); };
    auto h_neg = [&](double v) { return dg(-v) * pw(v); };
    auto hp_pos = [&](double v) {
        return d2g(v) * pw(v) + (c == 0.0 ? 0.0 : dg(v) * c * a * std::pow(a * v, c - 1.0));
    };
    auto hp_neg = [&](double v) {
        return d2g(-v) * pw(v) - (c == 0.0 ? 0.0 : dg(-v) * c * a * std::pow(a * v, c - 1.0));
    };
    std::optional<double> edge = tf.lo_exponent;
    std::optional<double> hedge = c == 0.0 ? edge : std::optional<double>(std::min(c, edge.value_or(0.0)));

    // F[f'] exists only when (alpha u)^c g'(u) is integrable at 0, and the
    // identity needs its derivative integrable too.
    const bool kappa_defined = c == 0.0 || (std::abs(dg(0.0)) < 1e-12 && c > -1.0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    DerivativeReport rep{0.0, kappa_defined ? 0.0 : nan, kappa_defined ? 0.0 : nan};
    for (double w : omega_grid) {
        const double W = ord.natural_frequency(w);
        numerics::RealFn neg_g, neg_dg;
        if (tf.two_sided) {
            neg_g = [&](double v) { return g(-v); };
            neg_dg = [&](double v) { return dg(-v); };
        }
        const Complex ft = fourier_split(g.f, neg_g, 1.0, W, edge);
        const Complex fd = fourier_split(dg, neg_dg, 1.0, W, edge);
        // One-sided functions jump at u = 0.
        const Complex want1 = -kI * W * ft - (tf.two_sided ? 0.0 : g(0.0));
        rep.first_order = std::max(rep.first_order, rel_err(fd, want1));

        if (!kappa_defined) continue;
        numerics::RealFn hn, hpn;
        if (tf.two_sided) {
            hn = h_neg;
            hpn = hp_neg;
        }
        const Complex fh = fourier_split(h_pos, hn, phase, W, edge);
        const Complex fhp = fourier_split(hp_pos, hpn, phase, W, hedge);
        const Complex jump = tf.two_sided ? 0.0 : h_pos(0.0);
        rep.kappa_order = std::max(rep.kappa_order, rel_err(fhp, -kI * W * fh - jump));
        rep.kappa_printed = std::max(rep.kappa_printed, rel_err(fhp, W * W * ft));
    }
    return rep;
}

double transform_space_derivative_check(const TimeFunction& tf, const TransformOrder& ord,
                                        const std::vector<double>& omega_grid) {
    require_explicit(tf, "transform_space_derivative_check");
    const auto& g = tf.g;
    auto ug = [&](double u) { return u * g(u); };
    const double b = ord.beta();
    double worst = 0.0;
    for (double w : omega_grid) {
        if (!(w > 0.0)) throw DomainError("transform_space_derivative_check: omega must be positive");
        const Complex lhs = fourier_natural(ug, ord.natural_frequency(w), tf.two_sided, tf.lo_exponent);
        auto part = [&](bool imag) {
            return [&, imag](double om) {
                const Complex v = fourier_natural(g.f, ord.natural_frequency(om), tf.two_sided, tf.lo_exponent);
                return imag ? v.imag() : v.real();
            };
        };
        numerics::DiffOptions opt{0.0, std::nullopt, 0.05 * w};
        const Complex d(numerics::differentiate(part(false), w, 1, opt),
                        numerics::differentiate(part(true), w, 1, opt));
        const Complex rhs = -kI * std::pow(w, 1.0 - b) * d;
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    return worst;
}

double conformable_convolution(const numerics::RealFn& F, const numerics::RealFn& G,
                               const Order& ord, double t) {
    if (t < 0.0) throw DomainError("conformable_convolution: t must be >= 0");
    const double T = std::pow(t, ord.alpha()) / ord.alpha();
    if (T == 0.0) return 0.0;
    const auto r = numerics::integrate([&](double v) { return F(v) * G(T - v); }, {0.0, T}, kQuadTol);
    if (!std::isfinite(r.value)) throw Divergent("conformable_convolution: non-finite integral");
    return r.value;
}

double product_formula_check(const numerics::RealFn& F, const numerics::RealFn& G,
                             const TransformOrder& ord, const std::vector<double>& omega_grid) {
    const double a = ord.alpha().alpha();
    // Convolution as a function of the natural variable.
    auto conv = [&](double u) {
        if (u <= 0.0) return 0.0;
        return conformable_convolution(F, G, ord.alpha(), std::pow(a * u, 1.0 / a));
    };
    double worst = 0.0;
    for (double w : omega_grid) {
        const double W = ord.natural_frequency(w);
        const Complex lhs = fourier_natural(conv, W, false);
        const Complex rhs = fourier_natural(F, W, false) * fourier_natural(G, W, false);
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    return worst;
}

}  // namespace conformal::transforms
