// AVX2 variants of the batched kernels. Compiled with -mavx2 -mno-fma; every
// lane performs the identical operation sequence as the scalar reference, so
// results are bit-for-bit equal (add/sub/mul/div/sqrt are all correctly
// rounded, max against +0.0 is reproduced by the scalar (x > 0 ? x : 0) form,
// and FMA contraction is disabled).

#if defined(PTDIRAC_HAVE_AVX2)

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "kernels_internal.hpp"

namespace ptdirac::kernels::detail {

namespace {

inline __m256d abs_pd(__m256d x) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(x, mask);
}

} // namespace

void avx2_sturm_count_batch(const double* base, const double* sech2, int n,
                            double off_sq, const double* delta,
                            const double* shift, int m, double pivmin,
                            int* out) {
    const __m256d voff = _mm256_set1_pd(off_sq);
    const __m256d vpiv = _mm256_set1_pd(pivmin);
    const __m256d vneg_piv = _mm256_set1_pd(-pivmin);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vinf = _mm256_set1_pd(std::numeric_limits<double>::infinity());

    int l = 0;
    for (; l + 4 <= m; l += 4) {
        const __m256d vdelta = _mm256_loadu_pd(delta + l);
        const __m256d vshift = _mm256_loadu_pd(shift + l);
        __m256d d = vinf;
        __m256i counts = _mm256_setzero_si256();
        for (int i = 0; i < n; ++i) {
            const __m256d vb = _mm256_set1_pd(base[i]);
            const __m256d vs = _mm256_set1_pd(sech2[i]);
            __m256d t = _mm256_sub_pd(vb, _mm256_mul_pd(vdelta, vs));
            t = _mm256_sub_pd(t, vshift);
            d = _mm256_sub_pd(t, _mm256_div_pd(voff, d));
            const __m256d small = _mm256_cmp_pd(abs_pd(d), vpiv, _CMP_LE_OQ);
            d = _mm256_blendv_pd(d, vneg_piv, small);
            const __m256d neg = _mm256_cmp_pd(d, vzero, _CMP_LT_OQ);
            // all-ones lanes are int64 -1: subtracting adds 1 per hit
            counts = _mm256_sub_epi64(counts, _mm256_castpd_si256(neg));
        }
        alignas(32) std::int64_t tmp[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), counts);
        for (int k = 0; k < 4; ++k)
            out[l + k] = int(tmp[k]);
    }
    if (l < m)
        scalar_sturm_count_batch(base, sech2, n, off_sq, delta + l, shift + l,
                                 m - l, pivmin, out + l);
}

void avx2_residual_batch(const double* energy, int m, double mu, double c1,
                         double w, double alpha, int m_index, double* out) {
    const double a2s = alpha * alpha;
    const __m256d va2 = _mm256_set1_pd(a2s);
    const __m256d vc4w = _mm256_set1_pd(4.0 * w);
    const __m256d vmd = _mm256_set1_pd(double(m_index));
    const __m256d vmu = _mm256_set1_pd(mu);
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vone = _mm256_set1_pd(1.0);
    const __m256d vtwo = _mm256_set1_pd(2.0);

    int l = 0;
    for (; l + 4 <= m; l += 4) {
        const __m256d e = _mm256_loadu_pd(energy + l);
        const __m256d t1 = _mm256_sub_pd(vmu, e);
        const __m256d t2 = _mm256_sub_pd(_mm256_add_pd(e, vmu), vc1);
        __m256d eps2 = _mm256_div_pd(_mm256_mul_pd(t1, t2), va2);
        eps2 = _mm256_max_pd(eps2, vzero);
        const __m256d s1 = _mm256_sqrt_pd(eps2);
        __m256d inner = _mm256_add_pd(vone, _mm256_div_pd(_mm256_mul_pd(vc4w, t2), va2));
        inner = _mm256_max_pd(inner, vzero);
        const __m256d s2 = _mm256_sqrt_pd(inner);
        const __m256d r = _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(vtwo, s1), vmd), s2);
        _mm256_storeu_pd(out + l, r);
    }
    if (l < m)
        scalar_residual_batch(energy + l, m - l, mu, c1, w, alpha, m_index,
                              out + l);
}

} // namespace ptdirac::kernels::detail

#endif // PTDIRAC_HAVE_AVX2
