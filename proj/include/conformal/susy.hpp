#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "conformal/core.hpp"
#include "conformal/numerics.hpp"

namespace conformal::susy {

enum class Ordering {
    symmetric_alpha,    // H = -D^alpha D^alpha + V, D^alpha = x^{1-alpha} d/dx
    asymmetric_A2alpha  // H = -(d/dx) x^{1-alpha} (d/dx) + V
};

// W = -x^{1-alpha} phi0'/phi0 (the same expression for both orderings).
// Throws DivisionNearZero where |phi0| < 1e-14 inside the safe interval.
numerics::RealFn superpotential_from_ground(Ordering ordering, const Order& ord,
                                            const numerics::SmoothFn& phi0,
                                            numerics::Interval safe = {0.05, 0.95});

struct SusySystem {
    Ordering ordering;
    Order ord{1.0};
    numerics::RealFn W;
    numerics::RealFn V1;
    numerics::RealFn V2;
    // Asymmetric only: x^{alpha-1} W^2 + W', the partner potential of the
    // literal A Bbar product; equal to V2 for the symmetric ordering.
    numerics::RealFn V2_literal;
    std::vector<double> ladder1;  // Lambda_n^(1), n = 0..n_max-1, Lambda_0 = 0
    std::vector<double> ladder2;  // Lambda_n^(2) from Rayleigh ratios of theta_n
    std::function<numerics::SmoothFn(std::size_t)> phi;  // phi_n, n >= 0
    std::size_t n_max;
};

// phi_n = sin((n+1) pi x^alpha), Lambda_n^(1) = alpha^2 n (n+2) pi^2.
SusySystem box_system(const Order& ord, std::size_t n_max = 6);
// phi_n = J_{n+1}^(alpha), Lambda_n^(1) = E_{n+1} - E_1. Partner operator
// script-A = x^{(1-alpha)/2} (d/dx - phi0'/phi0), H1 = A^dag A, H2 = A A^dag.
SusySystem asymmetric_system(const Order& ord, std::size_t n_max = 6);

struct PartnerPotentials {
    numerics::RealFn V1;
    numerics::RealFn V2;
};

// Symmetric: W^2 -/+ D^alpha W. Asymmetric: V1 = x^{alpha-1} W^2 - W',
// V2 = x^{alpha-1} W^2 + W' - (1-alpha) W/x + (1-alpha^2)/4 x^{-1-alpha}.
PartnerPotentials partner_potentials(Ordering ordering, const Order& ord, const numerics::RealFn& W);

// alpha^2 pi^2 (2 csc^2(pi x^alpha) - 1).
double box_v2_closed(const Order& ord, double x);

struct PartnerState {
    std::size_t n;
    numerics::RealFn values;  // normalized theta_n, 0 at the ends
    double norm;              // L2 norm before normalization
};

PartnerState partner_state(const SusySystem& sys, std::size_t n);

// Applies H2 (or H1) to f at x by difference quotients.
double apply_h2(const SusySystem& sys, const numerics::RealFn& f, double x);
double apply_h1(const SusySystem& sys, const numerics::RealFn& f, double x);

struct IsospectralReport {
    std::vector<double> residuals;  // max |H2 theta_n - Lambda_{n+1}^(1) theta_n| on the grid
    double worst_residual;
    double worst_ladder_gap;        // max |Lambda_n^(2) - Lambda_{n+1}^(1)|
    double literal_v2_residual;     // same check with V2_literal (asymmetric), 0 otherwise
};

// Grid x in [0.05, 0.95], 91 points.
IsospectralReport verify_isospectral(const SusySystem& sys, std::size_t n_max);

// 1 - |cos| between A^dag theta_n and phi_{n+1} on [0.02, 0.98].
double intertwine_check(const SusySystem& sys, std::size_t n);

// Free-W coefficient relations for the asymmetric ordering.
struct AsymmetricRelations {
    numerics::RealFn W_A, W_A_bar, W_B, W_B_bar;
};
AsymmetricRelations asymmetric_constraint_solve(const Order& ord, const numerics::RealFn& W);

// W-ansatz for two orders: max over grid of |V1 - Delta phi0/(4 phi0)| with
// W = -(D^a phi0 + D^b phi0)/(2 phi0), V1 = W^2 - (D^a W + D^b W)/2.
double two_order_ansatz_residual(const Order& a, const Order& b, const numerics::SmoothFn& phi0,
                                 const std::vector<double>& grid);

// Supercharges on a grid: Q = [[0,0],[X,0]], Qbar = [[0,X^T],[0,0]] with X
// the difference matrix of the annihilation operator.
struct NilpotencyReport {
    double q_squared;      // max |Q Q v|
    double qbar_squared;   // max |Qbar Qbar v|
    double offdiagonal;    // max entry of the off-diagonal blocks of {Qbar, Q}
};
NilpotencyReport grid_nilpotency(const SusySystem& sys, std::size_t points = 200);

}  // namespace conformal::susy
