#pragma once

#include <string>
#include <vector>

#include "ptdirac/model.hpp"
#include "ptdirac/spectrum.hpp"

namespace ptdirac {

enum class NormMethod {
    series,             // closed-form double sum over Gamma/Beta factors
    quadrature,         // adaptive Gauss-Legendre on the norm integral
    ground_closed_form, // n_r = 0 only: C0 = sqrt(2 alpha / B(kappa+3/2, eps))
};

const char* norm_method_name(NormMethod m);

// How to lay out radial sample points in [0, r_max].
struct GridSpec {
    enum class Spacing { linear, logarithmic, hybrid };
    double r_max = 0.0; // <= 0: use default_r_max(point)
    int count = 4096;
    Spacing spacing = Spacing::hybrid;
};

// Normalized two-component radial solution sampled on a grid.
struct RadialFunction {
    SpectralPoint point;
    NormMethod norm_method = NormMethod::series;
    double norm_constant = 0.0; // C multiplying the upper-component shape
    std::vector<double> r;
    std::vector<double> F; // upper component, F ~ r^{kappa+1} at the origin
    std::vector<double> G; // lower component from the first-order relation
};

// Unnormalized upper-component shape at radius r:
//   s = tanh^2(alpha r),  F_hat = s^{(kappa+1)/2} (1-s)^{eps/2} P(1-2s)
// with P the attached Jacobi polynomial of the level.
double upper_shape(double r, const SpectralPoint& pt);

// Normalized upper component C * F_hat(r).
double upper_F(double r, const SpectralPoint& pt, double norm_constant);

// Lower component from the spin-symmetric first-order relation
//   G = (F' + kappa F / r) / (mu + E - c1),
// with F' evaluated in closed form (chain rule through s plus the Jacobi
// derivative identity). Returns 0 at r = 0.
double lower_G(double r, const SpectralPoint& pt, double norm_constant);

// Normalization constant from the closed-form double series
//   1/C^2 = N_{n_r}/alpha * sum_{i,j} T_i T_j B(kappa + i + j + 3/2, eps).
double norm_constant_series(const SpectralPoint& pt);

// Normalization constant from adaptive quadrature of int_0^inf F_hat^2 dr
// after substituting s = sin^2 t.
double norm_constant_quadrature(const SpectralPoint& pt);

// Ground-level (n_r = 0) closed form; throws DomainError for n_r > 0.
double norm_constant_ground(const SpectralPoint& pt);

// Default outer radius: 30 / (eps * alpha), i.e. 30 decay lengths.
double default_r_max(const SpectralPoint& pt);

// Samples F and G on the grid described by `spec` using `method` for the
// normalization; NormMethod::series falls back to quadrature when the series
// reports a cancellation failure. Grids always start at r = 0 except the
// pure-linear spacing, whose k-th point is k * r_max / count (k = 1..count).
// The default normalizes the upper component alone (int F^2 dr = 1);
// `normalize_total` instead rescales so the sampled int (F^2+G^2) dr is 1.
RadialFunction sample(const SpectralPoint& pt, const GridSpec& spec,
                      NormMethod method = NormMethod::series,
                      bool normalize_total = false);

// Counts strict sign changes of F over the sampled grid (zeros are skipped).
int count_nodes(const RadialFunction& rf);

// Trapezoid value of int F^2 dr over the sampled grid.
double trapezoid_norm(const RadialFunction& rf);

} // namespace ptdirac
