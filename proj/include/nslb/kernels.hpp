#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Dense double-precision inner loops behind the numerics layer. Every kernel
// has a scalar reference implementation plus SIMD variants (AVX2 on x86-64,
// NEON on aarch64) selected once at startup from CPU features. The active
// backend can be forced with set_backend() or the NSLB_KERNELS environment
// variable (scalar|avx2|neon|auto) before any kernel call.
//
// Matrices are row-major d*d buffers; symmetric operands store both halves.

namespace nslb::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);
bool backend_available(Backend b);
std::vector<Backend> available_backends();

Backend active_backend();
// Testing / benchmarking hook. Not thread safe: call before spawning workers.
void set_backend(Backend b);
// Re-run detection (honors NSLB_KERNELS).
void reset_backend();

double dot(const double* a, const double* b, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// x *= alpha
void scale(double alpha, double* x, std::size_t n);
// A += alpha * x x^T  (full matrix updated)
void sym_rank1(double* a, std::size_t d, double alpha, const double* x);
// A = alpha * A + diag * I
void scale_add_diag(double* a, std::size_t d, double alpha, double diag);
// y = A x
void matvec(const double* a, std::size_t d, const double* x, double* y);
// x^T A x
double quad_form(const double* a, std::size_t d, const double* x);

}  // namespace nslb::kernels
