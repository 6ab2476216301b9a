#pragma once

#include <cstddef>
#include <vector>

#include "nslb/errors.hpp"
#include "nslb/rng.hpp"

namespace nslb {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
// y += alpha * x
void axpy(double alpha, const Vec& x, Vec& y);
void scale(double alpha, Vec& x);

// Dense symmetric positive-definite matrix, row-major full storage.
class SpdMatrix {
public:
    SpdMatrix() = default;
    explicit SpdMatrix(std::size_t d) : d_(d), a_(d * d, 0.0) {}

    static SpdMatrix scaled_identity(std::size_t d, double s);

    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    const double* data() const { return a_.data(); }
    double* data() { return a_.data(); }

    // A = alpha * A + diag * I
    void scale_add_diag(double alpha, double diag);
    // A += alpha * x x^T
    void rank1_update(double alpha, const Vec& x);
    Vec multiply(const Vec& x) const;
    double quad_form(const Vec& x) const;
    double trace() const;
    // |A[i,j] - A[j,i]| <= tol * max(1, |A[i,j]|) everywhere
    bool is_symmetric(double tol = 1e-10) const;

private:
    std::size_t d_ = 0;
    std::vector<double> a_;
};

// Lower-triangular factor L with L L^T = A, from spd_factor.
class LowerTriangularFactor {
public:
    LowerTriangularFactor() = default;

    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j) const { return l_[i * d_ + j]; }

    // Solve A x = b (forward then backward substitution).
    Vec solve(const Vec& b) const;
    // Solve L y = b.
    Vec solve_lower(const Vec& b) const;
    // Compute L z.
    Vec multiply_lower(const Vec& z) const;

private:
    friend LowerTriangularFactor spd_factor(const SpdMatrix&);
    std::size_t d_ = 0;
    std::vector<double> l_;
};

// Cholesky factorization with a single jitter retry: on a nonpositive pivot,
// add 1e-10 * trace(A)/d to the diagonal and try again; a second failure
// throws NotPositiveDefinite.
LowerTriangularFactor spd_factor(const SpdMatrix& a);

Vec spd_solve(const LowerTriangularFactor& factor, const Vec& b);

// ||x||_{A^{-1}} = sqrt(x^T A^{-1} x) = ||L^{-1} x||_2
double quad_norm(const LowerTriangularFactor& factor, const Vec& x);

// d i.i.d. N(0, scale^2) entries; scale = 0 gives the zero vector.
Vec gaussian_vec(RngStream& rng, std::size_t d, double scale);

// Closed-form Gaussian tail bounds: for z > 0,
//   lower = exp(-7 z^2 / 2) / (4 sqrt(pi)),  upper = exp(-z^2 / 2) / 2.
// The upper bound is valid for the one-sided tail P(Z > z); see the tests.
struct GaussianTailBounds {
    double lower;
    double upper;
};
GaussianTailBounds gaussian_tail_bounds(double z);

}  // namespace nslb
