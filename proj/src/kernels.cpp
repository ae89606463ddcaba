#include "ptdirac/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "kernels_internal.hpp"
#include "ptdirac/errors.hpp"

namespace ptdirac::kernels {

namespace detail {

int scalar_sturm_count(const double* diag, int n, double off_sq, double shift,
                       double pivmin) {
    // LAPACK-style negative-pivot count of the LDL^T factorization of
    // T - shift*I; the infinity seed makes the first step off_sq/d == 0, so
    // no special case is needed for the first row.
    double d = std::numeric_limits<double>::infinity();
    int count = 0;
    for (int i = 0; i < n; ++i) {
        d = (diag[i] - shift) - off_sq / d;
        if (std::fabs(d) <= pivmin)
            d = -pivmin;
        if (d < 0.0)
            ++count;
    }
    return count;
}

void scalar_sturm_count_batch(const double* base, const double* sech2, int n,
                              double off_sq, const double* delta,
                              const double* shift, int m, double pivmin,
                              int* out) {
    for (int l = 0; l < m; ++l) {
        const double dl = delta[l];
        const double sl = shift[l];
        double d = std::numeric_limits<double>::infinity();
        int count = 0;
        for (int i = 0; i < n; ++i) {
            // Same operation sequence as one lane of the vector variant:
            // mul, sub, sub, div, sub, |.|-compare fixup, sign test.
            d = ((base[i] - dl * sech2[i]) - sl) - off_sq / d;
            if (std::fabs(d) <= pivmin)
                d = -pivmin;
            if (d < 0.0)
                ++count;
        }
        out[l] = count;
    }
}

void scalar_residual_batch(const double* energy, int m, double mu, double c1,
                           double w, double alpha, int m_index, double* out) {
    const double a2 = alpha * alpha;
    const double c4w = 4.0 * w;
    const double md = double(m_index);
    for (int l = 0; l < m; ++l) {
        const double e = energy[l];
        const double t1 = mu - e;
        const double t2 = (e + mu) - c1;
        double eps2 = (t1 * t2) / a2;
        eps2 = (eps2 > 0.0) ? eps2 : 0.0; // matches vector max(x, +0.0)
        const double s1 = std::sqrt(eps2);
        double inner = 1.0 + (c4w * t2) / a2;
        inner = (inner > 0.0) ? inner : 0.0;
        const double s2 = std::sqrt(inner);
        out[l] = (2.0 * s1 + md) - s2;
    }
}

} // namespace detail

namespace {

Backend detect_backend() {
    bool have_avx2 = false;
#if defined(PTDIRAC_HAVE_AVX2)
    have_avx2 = __builtin_cpu_supports("avx2");
#endif
    const char* env = std::getenv("PTDIRAC_SIMD");
    const std::string_view v = env ? std::string_view(env) : "auto";
    if (v == "scalar")
        return Backend::scalar;
    if (v == "avx2") {
        if (!have_avx2)
            throw DomainError("PTDIRAC_SIMD=avx2 requested but AVX2 is not "
                              "available in this build/CPU");
        return Backend::avx2;
    }
    if (v != "auto")
        throw DomainError("PTDIRAC_SIMD must be scalar, avx2 or auto; got \"" +
                          std::string(v) + "\"");
    return have_avx2 ? Backend::avx2 : Backend::scalar;
}

} // namespace

Backend active_backend() {
    static const Backend b = detect_backend();
    return b;
}

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    }
    return "unknown";
}

int sturm_count(const double* diag, int n, double off_sq, double shift,
                double pivmin) {
    // A single Sturm chain is a loop-carried recurrence with no lane
    // parallelism, so there is only the scalar form.
    return detail::scalar_sturm_count(diag, n, off_sq, shift, pivmin);
}

void sturm_count_batch(const double* base, const double* sech2, int n,
                       double off_sq, const double* delta, const double* shift,
                       int m, double pivmin, int* out) {
#if defined(PTDIRAC_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        detail::avx2_sturm_count_batch(base, sech2, n, off_sq, delta, shift, m,
                                       pivmin, out);
        return;
    }
#endif
    detail::scalar_sturm_count_batch(base, sech2, n, off_sq, delta, shift, m,
                                     pivmin, out);
}

void residual_batch(const double* energy, int m, double mu, double c1,
                    double w, double alpha, int m_index, double* out) {
#if defined(PTDIRAC_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        detail::avx2_residual_batch(energy, m, mu, c1, w, alpha, m_index, out);
        return;
    }
#endif
    detail::scalar_residual_batch(energy, m, mu, c1, w, alpha, m_index, out);
}

} // namespace ptdirac::kernels
