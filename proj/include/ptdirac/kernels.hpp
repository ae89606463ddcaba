#pragma once

#include <string_view>

namespace ptdirac::kernels {

// Hot numeric loops exist in a scalar reference form and, on x86-64 with
// AVX2, a vectorized variant. The variant is chosen once at runtime; both
// are written with identical operation order and without FMA contraction so
// they produce bit-identical results, which the test suite asserts. The
// environment variable PTDIRAC_SIMD=scalar|avx2|auto overrides detection.

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string_view backend_name(Backend b);

// Number of eigenvalues of the symmetric tridiagonal matrix
//   T = tridiag(-off, diag[i], -off),  off_sq = off^2,
// that lie strictly below `shift`, via the Sturm negative-pivot count.
// pivmin guards against zero pivots exactly as in the LAPACK bisection codes.
int sturm_count(const double* diag, int n, double off_sq, double shift,
                double pivmin);

// Batched Sturm counts for the energy-dependent operator family
//   diag_l[i] = base[i] - delta[l] * sech2[i]
// evaluated against per-lane shifts; used by the oracle's energy scan where
// many trial energies share the same grid. out[l] = count for lane l.
void sturm_count_batch(const double* base, const double* sech2, int n,
                       double off_sq, const double* delta,
                       const double* shift, int m, double pivmin, int* out);

// Batched spectrum residual
//   h(E) = 2 sqrt(max(0, (mu-E)(E+mu-c1)))/alpha + M
//          - sqrt(1 + 4 w (E+mu-c1)/alpha^2)
// for the transcendental level condition (w = v0 + s0, M = m_index).
void residual_batch(const double* energy, int m, double mu, double c1,
                    double w, double alpha, int m_index, double* out);

} // namespace ptdirac::kernels
