#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptdirac/model.hpp"

namespace ptdirac {

// Outcome of the bound-state existence test. The criterion is the sign
// change of the unsquared residual between the window endpoints, which
// reduces to sqrt(1 + 4 delta(mu)) > M: `margin` is that difference.
struct ExistenceReport {
    bool exists = false;
    double margin = 0.0;   // sqrt(1 + 4 delta(E = mu)) - M
    std::string reason;
};

class NoBoundState : public std::runtime_error {
public:
    NoBoundState(const std::string& what, ExistenceReport rep)
        : std::runtime_error(what), report(std::move(rep)) {}
    ExistenceReport report;
};

// A solved level.
struct SpectralPoint {
    ModelParams params;
    QuantumNumbers q;
    double energy = 0.0;
    double eps = 0.0;            // decay exponent at the root
    double delta = 0.0;          // well strength at the root
    double bracket_lo = 0.0;     // final bracket around the root
    double bracket_hi = 0.0;
    double residual_at_root = 0.0;
    int iterations = 0;
    int extra_sign_changes = 0;  // sign changes beyond the one refined
};

// Squared level condition rearranged to a residual:
//   (mu-E)(mu+E-c1) - (alpha^2/4) [M - sqrt(alpha^2 + 4 w (E+mu-c1))/alpha]^2
// Zero at every root of the unsquared form, but also on a spurious sign
// branch, so it is used only as a consistency check.
double residual_squared(double E, const ModelParams& p, const QuantumNumbers& q);

// Unsquared level condition
//   h(E) = 2 eps(E) + M - sqrt(1 + 4 delta(E));
// its roots with eps > 0 are exactly the physical spectrum.
double residual_unsquared(double E, const ModelParams& p, const QuantumNumbers& q);

// Endpoint analysis of h: h(c1-mu) = M - 1 > 0 and h(mu) = M - sqrt(1+4 delta(mu)).
ExistenceReport existence(const ModelParams& p, const QuantumNumbers& q);

// Scans the open window (c1-mu, mu) with a fixed 4096-subinterval grid on the
// unsquared residual, then refines the first bracket by bisection with secant
// acceleration to relative tolerance `tol` on the energy. Throws NoBoundState
// (carrying the ExistenceReport) when the scan finds no sign change, and
// DomainError when the window is empty.
SpectralPoint solve_level(const ModelParams& p, const QuantumNumbers& q,
                          double tol = 1e-13);

// alpha -> 0 closed form for the c1 = mu case: solves
//   4 (mu - w) u + 4 M sqrt(mu) sqrt(u) + (M^2 - 1) = 0,  w = v0 + s0,
// for sqrt(u) >= 0 and returns E = u alpha^2 (largest nonnegative root).
// For mu = 1, w = 2 this is sqrt(u) = (M + sqrt(2 M^2 - 1))/2.
double limiting_energy(int m_index, const ModelParams& p);

// One row of an energy table: either a solved point or an existence failure.
struct GridRow {
    int dim = 0;
    int n = 0;
    double alpha = 0.0;
    std::optional<SpectralPoint> point;
    std::optional<ExistenceReport> failure;
};

// Solves every (dim, n, alpha) cell of the outer product, mapping the
// principal quantum number to (n_r, ell) = ((n-1)/2, (n-1) mod 2). Rows are
// emitted in (dim, n, alpha) order; per-cell failures never abort the grid.
std::vector<GridRow> spectrum_grid(const ModelParams& base,
                                   const std::vector<int>& dims,
                                   const std::vector<int>& n_values,
                                   const std::vector<double>& alphas);

} // namespace ptdirac
