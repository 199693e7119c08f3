#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "conformal/core.hpp"
#include "conformal/numerics.hpp"

namespace conformal::transforms {

using Complex = std::complex<double>;

// Time-side order alpha and frequency-side order beta = lambda * alpha.
class TransformOrder {
public:
    TransformOrder(double alpha, double beta);
    // Strict mode: beta must equal lambda * alpha for the given unit ratio lambda.
    static TransformOrder strict(double alpha, double beta, double lambda);
    static TransformOrder from_ratio(double alpha, double lambda);

    const Order& alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double lambda_ratio() const { return beta_ / alpha_.alpha(); }

    // Natural frequency omega^beta/beta, odd in omega (the negative half
    // follows the ray omega = r e^{i pi/beta}).
    double natural_frequency(double omega) const;
    // Laplace argument s^beta/beta.
    double natural_laplace(double s) const;

private:
    Order alpha_;
    double beta_;
};

// f(t) = g(t^alpha/alpha). Only the explicit kind can be transformed
// numerically; g is evaluated on u >= 0, and on u < 0 when two_sided.
struct TimeFunction {
    enum class Kind { explicit_natural, raw };
    Kind kind = Kind::explicit_natural;
    numerics::SmoothFn g;
    bool two_sided = false;
    std::optional<double> lo_exponent;  // |g(u)| ~ u^gamma near u = 0
    std::string decay_certificate;

    static TimeFunction natural(numerics::SmoothFn g, std::string decay, bool two_sided = false);
    static TimeFunction raw(numerics::RealFn f);
};

// Bar f(s^beta/beta) by quadrature of int_0^inf g(u) e^{-S u} du.
double conformable_laplace(const TimeFunction& tf, const TransformOrder& ord, double s);

// Classical Fourier transform of g, kernel e^{+iWu}, at W = omega^beta/beta.
// One-sided functions have a zero negative branch.
Complex conformable_fourier(const TimeFunction& tf, const TransformOrder& ord, double omega);

// (1/2pi) int F(omega) e^{-i W u} d omega^beta at u = t^alpha/alpha, with
// F sampled on the real omega line (odd natural frequency).
double conformable_inverse_fourier(const std::function<Complex(double)>& ft,
                                   const TransformOrder& ord, double t);

// Building blocks in the natural variables.
double laplace_natural(const numerics::RealFn& g, double S, std::optional<double> lo_exponent = {});
Complex fourier_natural(const numerics::RealFn& g, double W, bool two_sided,
                        std::optional<double> lo_exponent = {});

// Transform table.
struct EntryParams {
    double k = 1.0;
    double q = 2.0;
    double sigma = 0.8;
    double p = 1.5;
    double n = 2.0;
};

using LaplaceForm = std::function<double(const TransformOrder&, double s)>;
using FourierForm = std::function<Complex(const TransformOrder&, double omega)>;

struct TransformEntry {
    std::string name;
    std::string time_text;
    EntryParams params;
    // g(u, alpha): the entry written in u = t^alpha/alpha.
    std::function<double(double, double)> g;
    bool fourier_two_sided = false;
    LaplaceForm laplace;          // canonical
    LaplaceForm laplace_printed;  // as printed
    FourierForm fourier;          // empty where the table has no entry
    FourierForm fourier_printed;
    std::string fourier_symbolic;  // e.g. 2 pi delta(s^beta)
    std::string note;              // discrepancy between printed and canonical

    TimeFunction time_form(const TransformOrder& ord) const;
    bool printed_differs() const { return !note.empty(); }
};

const std::vector<std::string>& table_names();
TransformEntry table_entry(const std::string& name, EntryParams params = {});

struct CatalogRow {
    std::string entry;
    std::string transform;  // laplace | fourier
    std::string form;       // canonical | printed
    double alpha, beta, arg;
    Complex closed;
    Complex quadrature;
    double rel_error;
    bool pass;
};

// Closed forms against quadrature on the given (alpha, beta) pairs and arguments.
std::vector<CatalogRow> verify_catalog(const std::vector<std::pair<double, double>>& orders,
                                       const std::vector<double>& s_values,
                                       const std::vector<double>& omega_values, double rel_tol = 1e-6);
void write_catalog_csv(const std::vector<CatalogRow>& rows, std::ostream& out);

// Delta rules.
// Weight w with int phi(x) delta(x^alpha - x0^alpha) dx = w phi(x0).
double delta_scale(double x0, const Order& ord);

struct DeltaTerm {
    double location;
    double weight;
};

// delta(f(x^alpha)) as a sum over the simple roots v0 of f.
std::vector<DeltaTerm> delta_composite(const numerics::SmoothFn& f, const std::vector<double>& roots,
                                       const Order& ord);
// delta(x^alpha - (x1^alpha - x2^alpha)).
DeltaTerm delta_difference(double x1, double x2, const Order& ord);

// Derivative theorems on a grid of omega > 0 (worst relative errors). The
// kappa fields are NaN when f' = t^{alpha-1} g'(u) has no transform, i.e.
// alpha < 1 and g'(0) != 0, or alpha <= 1/2.
struct DerivativeReport {
    double first_order;     // F[D^alpha f] against -i W f~
    double kappa_order;     // F[D^alpha D^1 f] against -i W F[f']
    double kappa_printed;   // F[D^alpha D^1 f] against W^2 f~
};

DerivativeReport derivative_theorem_check(const TimeFunction& tf, const TransformOrder& ord,
                                          const std::vector<double>& omega_grid);

// F[u g] against -i D_omega^beta F[g].
double transform_space_derivative_check(const TimeFunction& tf, const TransformOrder& ord,
                                        const std::vector<double>& omega_grid);

// int_0^T F(v) G(T - v) dv with T = t^alpha/alpha (causal F and G).
double conformable_convolution(const numerics::RealFn& F, const numerics::RealFn& G,
                               const Order& ord, double t);

// F[f * g] against f~ g~ (one-sided F, G), worst relative error.
double product_formula_check(const numerics::RealFn& F, const numerics::RealFn& G,
                             const TransformOrder& ord, const std::vector<double>& omega_grid);

}  // namespace conformal::transforms
