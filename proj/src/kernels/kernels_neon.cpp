// NEON kernels for aarch64. Two 128-bit lanes of f64; same loop structure as
// the AVX2 variants so the equivalence tests carry over.

#include "kernels_internal.hpp"

#if NSLB_HAVE_NEON_KERNELS

#include <arm_neon.h>

namespace nslb::kernels::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    if (i + 2 <= n) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        i += 2;
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double alpha, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void sym_rank1_neon(double* a, std::size_t d, double alpha, const double* x) {
    for (std::size_t i = 0; i < d; ++i) axpy_neon(alpha * x[i], x, a + i * d, d);
}

void scale_add_diag_neon(double* a, std::size_t d, double alpha, double diag) {
    scale_neon(alpha, a, d * d);
    for (std::size_t i = 0; i < d; ++i) a[i * d + i] += diag;
}

void matvec_neon(const double* a, std::size_t d, const double* x, double* y) {
    for (std::size_t i = 0; i < d; ++i) y[i] = dot_neon(a + i * d, x, d);
}

double quad_form_neon(const double* a, std::size_t d, const double* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) acc += x[i] * dot_neon(a + i * d, x, d);
    return acc;
}

}  // namespace

const KernelTable neon_table = {
    dot_neon,    axpy_neon,   scale_neon,    sym_rank1_neon,
    scale_add_diag_neon, matvec_neon, quad_form_neon,
};

}  // namespace nslb::kernels::detail

#endif  // NSLB_HAVE_NEON_KERNELS
