#pragma once

#include <cstddef>

namespace nslb::kernels::detail {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    void (*sym_rank1)(double*, std::size_t, double, const double*);
    void (*scale_add_diag)(double*, std::size_t, double, double);
    void (*matvec)(const double*, std::size_t, const double*, double*);
    double (*quad_form)(const double*, std::size_t, const double*);
};

extern const KernelTable scalar_table;

#if defined(__x86_64__) || defined(_M_X64)
#define NSLB_HAVE_AVX2_KERNELS 1
extern const KernelTable avx2_table;
bool avx2_supported();
#else
#define NSLB_HAVE_AVX2_KERNELS 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define NSLB_HAVE_NEON_KERNELS 1
extern const KernelTable neon_table;
#else
#define NSLB_HAVE_NEON_KERNELS 0
#endif

}  // namespace nslb::kernels::detail
