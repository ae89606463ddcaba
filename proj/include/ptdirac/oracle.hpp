#pragma once

#include <vector>

#include "ptdirac/model.hpp"
#include "ptdirac/spectrum.hpp"
#include "ptdirac/wavefunction.hpp"

namespace ptdirac {

// Finite-difference eigensolver settings. `points` is the interior count of
// the coarsest level; each refinement halves h exactly (N -> 2N + 1).
struct OracleConfig {
    double x_min = 1e-6;
    double x_max = 0.0;   // <= 0: choose max(40, 30 / eps_estimate)
    int points = 4000;
    int refine_levels = 2; // Richardson extrapolation depth
    double tol_energy = 1e-8; // relative tolerance of the outer energy solve
};

// Dirichlet discretization of  -d^2/dx^2 + gamma/sinh^2 x - delta sech^2 x
// on (x_min, x_max): `diag[i]` holds 2/h^2 + V(x_i), `off` is -1/h^2.
struct TridiagonalOperator {
    std::vector<double> diag;
    double off = 0.0;
    double h = 0.0;
    double x_min = 0.0;
};

TridiagonalOperator build_operator(double gamma, double delta,
                                   double x_min, double x_max, int points);

// Lowest `count` eigenvalues by Sturm bisection (exact eigenvalue counting,
// no root can be missed or duplicated).
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count);

// Eigenvector for the eigenvalue nearest `lambda` by inverse iteration.
std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda);

// Detail record of a self-consistent solve.
struct OracleResult {
    double energy = 0.0;
    std::vector<double> level_energies; // one per refinement level, coarsest first
    double x_max = 0.0;
    int points = 0;
};

// Solves the nonlinear eigenproblem  lambda_{n_r}(E) = -eps^2(E)  where
// lambda_{n_r} is the (n_r+1)-th discrete eigenvalue at well depth delta(E).
// The sign of the mismatch is read off a single Sturm count at the shifted
// pivot, the root is bracketed by a 512-subinterval scan of the energy
// window and refined by bisection; Richardson extrapolation over
// `refine_levels` halvings removes the O(h^2) discretization error.
double self_consistent_energy(const ModelParams& p, const QuantumNumbers& q,
                              const OracleConfig& cfg = {});
OracleResult self_consistent_energy_details(const ModelParams& p,
                                            const QuantumNumbers& q,
                                            const OracleConfig& cfg = {});

// Plugs the sampled upper component into the transformed radial equation
//   -F'' + [gamma/sinh^2 x - delta sech^2 x] F = -eps^2 F   (x = alpha r)
// with second-order central differences on the function's own uniform grid,
// and returns ||residual||_2 / ||scale||_2 where scale majorizes the three
// terms. Requires a uniform grid with at least 100 interior points starting
// at r > 0; rejects the zero function.
double ode_residual(const RadialFunction& rf);

enum class CentrifugalKind { sinh_approx, exact_inverse_r2 };

struct ApproximationGap {
    double energy_approx = 0.0; // gamma alpha^2/sinh^2(alpha r) barrier
    double energy_exact = 0.0;  // gamma/r^2 barrier
    double gap = 0.0;           // approx - exact
};

// Ground-energy gap between the approximate and the exact centrifugal
// barrier at fixed (gamma, delta), both solved on the same grid.
ApproximationGap approximation_gap(const ModelParams& p, const QuantumNumbers& q,
                                   const OracleConfig& cfg = {});

} // namespace ptdirac
