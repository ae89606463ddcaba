#pragma once

#include <utility>

namespace ptdirac {

// Physical inputs, natural units (hbar = c = 1).
//
// The vector and scalar wells are V_v = -v0/cosh^2(alpha r) and
// V_s = -s0/cosh^2(alpha r); under spin symmetry their difference
// Delta(r) = V_v - V_s is the constant c1 and their sum drives the binding.
struct ModelParams {
    double mu    = 1.0;   // mass
    double v0    = 1.0;   // vector well depth
    double s0    = 1.0;   // scalar well depth
    double alpha = 1e-4;  // inverse range of the well
    double c1    = 1.0;   // spin-symmetry constant Delta(r) = c1

    // Throws DomainError unless alpha > 0, mu > 0 and v0 + s0 > 0
    // (an attractive combined well is required for bound states).
    void validate() const;
};

// Quantum-number bookkeeping for the D-dimensional radial problem.
//
// kappa = (2*ell + dim - 1)/2 is half-integer for even dim, so it is stored
// as the exact integer 2*kappa; gamma = kappa*(kappa+1) and the composite
// index m_index = 2n + dim = 4 n_r + 2 ell + dim + 2 are derived from it
// without floating round-off. The spectrum depends on (n_r, ell, dim) only
// through m_index, which is what makes states with equal 2n + dim degenerate.
struct QuantumNumbers {
    int n_r = 0;          // radial node count, >= 0
    int ell = 0;          // orbital quantum number, >= 0
    int dim = 3;          // spatial dimension, >= 2
    int twice_kappa = 2;  // 2*kappa = 2*ell + dim - 1, exact

    // Validating constructor; throws DomainError for n_r < 0, ell < 0 or
    // dim < 2. Only the positive kappa branch is representable: the aligned
    // negative branch is not part of this model's spectrum formulas.
    static QuantumNumbers of(int n_r, int ell, int dim);

    double kappa() const { return 0.5 * twice_kappa; }
    // kappa*(kappa+1) = k(k+2)/4 with k = 2*kappa; exact in double for the
    // small integers involved.
    double gamma() const { return twice_kappa * (twice_kappa + 2) / 4.0; }
    int n() const { return 2 * n_r + ell + 1; } // principal quantum number
    int m_index() const { return 2 * n() + dim; }
};

// Dimensionless parameters of the transformed radial equation:
//   eps^2 = (mu - E)(mu + E - c1)/alpha^2   (decay exponent; >= 0 when bound)
//   delta = (v0 + s0)(E + mu - c1)/alpha^2  (effective well strength)
struct DimensionlessState {
    double eps    = 0.0;
    double delta  = 0.0;
    double energy = 0.0;
};

// kappa as an exact integer count of halves; throws DomainError for dim < 2
// (the radial reduction needs at least one radial and one angular direction).
int twice_kappa_from(int ell, int dim);
double kappa_from(int ell, int dim);

// Potential combinations Delta(r) = (s0 - v0)/cosh^2(alpha r) and
// Sigma(r) = -(v0 + s0)/cosh^2(alpha r); both vanish as r -> infinity.
std::pair<double, double> delta_sigma_at(double r, const ModelParams& p);

// The exact centrifugal factor 1/r^2 and its sinh approximation
// alpha^2/sinh^2(alpha r); they agree as alpha*r -> 0. Throws for r <= 0.
std::pair<double, double> centrifugal_pair(double r, double alpha);

// Maps an energy in the closed bound window [c1 - mu, mu] to (eps, delta);
// outside the window eps would be imaginary and a DomainError names the
// offending factor.
DimensionlessState dimensionless_of(double E, const ModelParams& p,
                                    const QuantumNumbers& q);

} // namespace ptdirac
