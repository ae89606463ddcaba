#pragma once

// Private declarations shared by the kernel dispatcher and the per-ISA
// translation units. Every variant of a kernel must perform the same
// floating-point operations in the same order (no FMA contraction), so that
// the backends are bit-for-bit interchangeable.

namespace ptdirac::kernels::detail {

int scalar_sturm_count(const double* diag, int n, double off_sq, double shift,
                       double pivmin);

void scalar_sturm_count_batch(const double* base, const double* sech2, int n,
                              double off_sq, const double* delta,
                              const double* shift, int m, double pivmin,
                              int* out);

void scalar_residual_batch(const double* energy, int m, double mu, double c1,
                           double w, double alpha, int m_index, double* out);

#if defined(PTDIRAC_HAVE_AVX2)
void avx2_sturm_count_batch(const double* base, const double* sech2, int n,
                            double off_sq, const double* delta,
                            const double* shift, int m, double pivmin,
                            int* out);

void avx2_residual_batch(const double* energy, int m, double mu, double c1,
                         double w, double alpha, int m_index, double* out);
#endif

} // namespace ptdirac::kernels::detail
