// Scalar reference kernels. SIMD variants are equivalence-tested against
// these, so keep the loops plain: one accumulator, in-order summation.

#include "kernels_internal.hpp"

namespace nslb::kernels::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void sym_rank1_scalar(double* a, std::size_t d, double alpha, const double* x) {
    for (std::size_t i = 0; i < d; ++i) {
        const double s = alpha * x[i];
        double* row = a + i * d;
        for (std::size_t j = 0; j < d; ++j) row[j] += s * x[j];
    }
}

void scale_add_diag_scalar(double* a, std::size_t d, double alpha, double diag) {
    for (std::size_t i = 0; i < d * d; ++i) a[i] *= alpha;
    for (std::size_t i = 0; i < d; ++i) a[i * d + i] += diag;
}

void matvec_scalar(const double* a, std::size_t d, const double* x, double* y) {
    for (std::size_t i = 0; i < d; ++i) y[i] = dot_scalar(a + i * d, x, d);
}

double quad_form_scalar(const double* a, std::size_t d, const double* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) acc += x[i] * dot_scalar(a + i * d, x, d);
    return acc;
}

}  // namespace

const KernelTable scalar_table = {
    dot_scalar,    axpy_scalar,   scale_scalar,    sym_rank1_scalar,
    scale_add_diag_scalar, matvec_scalar, quad_form_scalar,
};

}  // namespace nslb::kernels::detail
