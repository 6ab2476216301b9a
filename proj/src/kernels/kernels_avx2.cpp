// AVX2+FMA kernels. Compiled on x86-64 via per-function target attributes so
// the binary stays runnable on non-AVX2 machines; dispatch.cpp only installs
// this table after __builtin_cpu_supports says the ISA is there.

#include "kernels_internal.hpp"

#if NSLB_HAVE_AVX2_KERNELS

#include <immintrin.h>

#define NSLB_AVX2 __attribute__((target("avx2,fma")))

namespace nslb::kernels::detail {
namespace {

NSLB_AVX2 double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

NSLB_AVX2 double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

NSLB_AVX2 void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

NSLB_AVX2 void scale_avx2(double alpha, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

NSLB_AVX2 void sym_rank1_avx2(double* a, std::size_t d, double alpha, const double* x) {
    for (std::size_t i = 0; i < d; ++i) axpy_avx2(alpha * x[i], x, a + i * d, d);
}

NSLB_AVX2 void scale_add_diag_avx2(double* a, std::size_t d, double alpha, double diag) {
    scale_avx2(alpha, a, d * d);
    for (std::size_t i = 0; i < d; ++i) a[i * d + i] += diag;
}

NSLB_AVX2 void matvec_avx2(const double* a, std::size_t d, const double* x, double* y) {
    for (std::size_t i = 0; i < d; ++i) y[i] = dot_avx2(a + i * d, x, d);
}

NSLB_AVX2 double quad_form_avx2(const double* a, std::size_t d, const double* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) acc += x[i] * dot_avx2(a + i * d, x, d);
    return acc;
}

}  // namespace

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelTable avx2_table = {
    dot_avx2,    axpy_avx2,   scale_avx2,    sym_rank1_avx2,
    scale_add_diag_avx2, matvec_avx2, quad_form_avx2,
};

}  // namespace nslb::kernels::detail

#endif  // NSLB_HAVE_AVX2_KERNELS
