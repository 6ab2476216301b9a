#include "nslb/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "kernels_internal.hpp"

namespace nslb::kernels {
namespace {

using detail::KernelTable;

const KernelTable* table_for(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return &detail::scalar_table;
        case Backend::Avx2:
#if NSLB_HAVE_AVX2_KERNELS
            return &detail::avx2_table;
#else
            return nullptr;
#endif
        case Backend::Neon:
#if NSLB_HAVE_NEON_KERNELS
            return &detail::neon_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Backend detect() {
    if (const char* env = std::getenv("NSLB_KERNELS")) {
        std::string_view v(env);
        if (v == "scalar") return Backend::Scalar;
        if (v == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
        if (v == "neon" && backend_available(Backend::Neon)) return Backend::Neon;
        // "auto" or anything unusable falls through to detection
    }
#if NSLB_HAVE_AVX2_KERNELS
    if (detail::avx2_supported()) return Backend::Avx2;
#endif
#if NSLB_HAVE_NEON_KERNELS
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

struct Dispatch {
    Backend backend;
    const KernelTable* table;
    Dispatch() : backend(detect()), table(table_for(backend)) {}
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend b) {
#if NSLB_HAVE_AVX2_KERNELS
    if (b == Backend::Avx2) return detail::avx2_supported();
#endif
#if NSLB_HAVE_NEON_KERNELS
    if (b == Backend::Neon) return true;
#endif
    return b == Backend::Scalar;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::Scalar};
    if (backend_available(Backend::Avx2)) out.push_back(Backend::Avx2);
    if (backend_available(Backend::Neon)) out.push_back(Backend::Neon);
    return out;
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error(std::string("kernel backend not available: ") + backend_name(b));
    dispatch().backend = b;
    dispatch().table = table_for(b);
}

void reset_backend() {
    dispatch().backend = detect();
    dispatch().table = table_for(dispatch().backend);
}

double dot(const double* a, const double* b, std::size_t n) {
    return dispatch().table->dot(a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) {
    dispatch().table->axpy(alpha, x, y, n);
}
void scale(double alpha, double* x, std::size_t n) {
    dispatch().table->scale(alpha, x, n);
}
void sym_rank1(double* a, std::size_t d, double alpha, const double* x) {
    dispatch().table->sym_rank1(a, d, alpha, x);
}
void scale_add_diag(double* a, std::size_t d, double alpha, double diag) {
    dispatch().table->scale_add_diag(a, d, alpha, diag);
}
void matvec(const double* a, std::size_t d, const double* x, double* y) {
    dispatch().table->matvec(a, d, x, y);
}
double quad_form(const double* a, std::size_t d, const double* x) {
    return dispatch().table->quad_form(a, d, x);
}

}  // namespace nslb::kernels
