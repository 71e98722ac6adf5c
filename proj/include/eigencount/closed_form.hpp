#pragma once

#include <cstdint>
#include <vector>

#include "eigencount/quadrature.hpp"

namespace eigencount {

/// Density selector: V (integer-eigenvalue density), W (real-eigenvalue
/// density), and their rescalings UZ = V/(area(V)/2), UR = W/(area(W)/2)
/// which both enclose area 2.
enum class DensityKind { V, W, UZ, UR };

struct DensityTable {
    DensityKind kind;
    std::vector<double> grid;    // strictly increasing
    std::vector<double> values;  // same length as grid
};

/// Limiting density of lambda/k over matrices with integer entries in [-k, k]
/// having integer eigenvalue lambda, under k^2 log k scaling. Even, supported
/// on [-2, 2], piecewise-analytic with branch points at |delta| = 1, sqrt(2).
double v_density(double delta);

/// Density of real eigenvalues of a 2x2 matrix with independent uniform
/// [-1, 1] entries. Even, supported on [-2, 2]; w_density(1) = 15/32.
double w_density(double delta);

double density_value(DensityKind kind, double delta);

/// Closed-form area under the full density, used for the UZ/UR normalizations.
double density_area(DensityKind kind);

/// G(z) = z (1 - log|z|), the odd antiderivative of -log|t|; G(0) = 0.
double g_function(double z);

/// Distribution function of the product of two independent uniform [-1, 1]
/// variables: 0 below -1, (1 + G(z))/2 on [-1, 1], 1 above 1.
double f_bc(double z);

double nu1(double x, double y);
double nu2(double x, double y);

/// Expected-eigenvalue-count kernel: the number of negative eigenvalues of
/// ((x, B), (C, y)) averaged over B, C uniform in [-1, 1]. Requires
/// |x - y| <= 2. Symmetric in (x, y); values lie in [0, 2].
double nu(double x, double y);

struct NuAntiderivatives {
    double a1;  // d a1 / dx = nu1(x, y)
    double a2;  // d a2 / dx = nu2(x, y)
};

/// x-antiderivatives of nu1 and nu2 for fixed y != 0.
NuAntiderivatives antiderivatives_nu(double x, double y);

/// Expected number of eigenvalues below -delta, i.e. the quarter integral of
/// nu over the shifted square [-1+delta, 1+delta]^2, computed by iterated
/// adaptive quadrature with panel splits along the kink curves xy = 1 and
/// x + y = 0 (and the log-slope lines x = 0, x = y).
QuadratureResult f_w_minus(double delta, double tol = 1e-6, std::int64_t max_evals = 10'000'000);

/// Integral of the selected density over [a, b] in [-2, 2], splitting panels
/// at the branch points {-sqrt(2), -1, 0, 1, sqrt(2)}.
QuadratureResult integrate_density(DensityKind kind, double a, double b, double tol = 1e-10,
                                   std::int64_t max_evals = 10'000'000);

struct ConstantsBundle {
    double c_integer_spectrum;        // (7 sqrt 2 + 4 + 3 log(sqrt 2 + 1)) / (3 pi^2)
    double six_over_pi_squared;       // density of coprime pairs
    double real_pair_probability;     // 49/72
    double expected_real_eigenvalues; // 49/36
    double w_at_one;                  // 15/32
    double v_at_one;                  // 1 + log 2
    double v_area;                    // integral of V over [-2, 2]
    double w_area;                    // integral of W over [-2, 2]
    double w_argmax;                  // positive maximizer of W
};

ConstantsBundle constants_bundle();

/// Positive maximizer of w_density, located by golden-section search on
/// [0.5, 0.95] to 1e-8.
double argmax_w();

/// Sampling grid for density tables: `points` nodes spanning [lo, hi], with
/// any interior branch points placed exactly on the grid and their two
/// neighbours kept at equal spacing (trapezoid sums then cancel the odd
/// t log|t| error around the kinks at +/-1).
std::vector<double> density_grid(double lo, double hi, int points);

DensityTable make_density_table(DensityKind kind, double lo = -2.0, double hi = 2.0,
                                int points = 801);

}  // namespace eigencount
