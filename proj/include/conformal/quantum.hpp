#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conformal/eigenbasis.hpp"

namespace conformal::quantum {

// Perturbing potential lambda V on [0, 1] for the box with basis J_n.
struct Perturbation {
    enum class Kind { linear, step_left, step_right, power };
    Kind kind = Kind::linear;
    double strength = 1.0;  // lambda
    double edge = 0.25;     // step edge
    double exponent = 1.0;  // power: V = x^exponent

    static Perturbation linear(double lambda);
    static Perturbation step_left(double lambda, double edge = 0.25);
    static Perturbation step_right(double lambda, double edge = 0.75);
    static Perturbation power(double lambda, double exponent);
};

// V without the strength. linear: E_1 x; steps: height E_1 on the wall side;
// power: x^exponent. E_1 is the ground energy of the basis.
numerics::RealFn potential(const JBasis& basis, const Perturbation& pert);
std::vector<double> potential_breakpoints(const Perturbation& pert);

// int_0^1 J_m V J_n dx.
double matrix_element(const JBasis& basis, const numerics::RealFn& V, std::size_t m, std::size_t n,
                      const std::vector<double>& breakpoints = {});

struct PerturbedState {
    std::size_t n = 1;
    double energy0 = 0.0;
    double energy1_correction = 0.0;  // lambda <n|V|n>
    // c_m = lambda V_mn / (E_n - E_m) for m = 1..basis_size, with c_n = 0.
    std::vector<double> coefficients;
    std::size_t basis_size = 0;
    bool converged = false;  // last |c_m| below 1e-6 of the largest
    std::string warning;
};

constexpr std::size_t kDefaultBasisSize = 24;

PerturbedState first_order_state(const JBasis& basis, const Perturbation& pert, std::size_t n,
                                 std::size_t basis_size = kDefaultBasisSize);

// psi = J_n + sum_m c_m J_m, unnormalized.
double state_value(const JBasis& basis, const PerturbedState& state, double x);
// int psi^2 and int x psi^2 / int psi^2.
double state_norm_sq(const PerturbedState& state);
double state_mean_position(const JBasis& basis, const PerturbedState& state);

// <psi|H|psi>/<psi|psi> with H = -A2alpha + lambda V in the truncated basis.
double rayleigh_quotient(const JBasis& basis, const Perturbation& pert, const PerturbedState& state);

struct WallRow {
    double alpha;
    double left;        // first-order ground correction, wall at [0, 1/4], lambda = 1
    double right;       // wall at (3/4, 1]
    double difference;  // left - right
};

std::vector<WallRow> wall_asymmetry_scan(const std::vector<double>& alpha_grid);
// Alpha of the largest difference.
double wall_asymmetry_argmax(const std::vector<WallRow>& rows);

enum class PhantomTrial { x, x_alpha, x_half_alpha };
std::string trial_name(PhantomTrial t);

struct PhantomReport {
    PhantomTrial trial;
    double alpha;
    double lambda;        // strength used
    double l2_residual;   // ||psi1 - J_1^(alpha)||
    double max_residual;
    std::vector<double> coefficients;  // sine-box expansion of psi1, index m-1
};

// First-order sine-box ground state under lambda V_trial against the
// conformable ground state. Without a lambda the least-squares optimum
// <T - psi0, v>/||v||^2 is used, v the unit-strength correction.
PhantomReport phantom_potential_fit(const Order& alpha, PhantomTrial trial,
                                    std::optional<double> lambda = std::nullopt,
                                    std::size_t basis_size = kDefaultBasisSize);

}  // namespace conformal::quantum
