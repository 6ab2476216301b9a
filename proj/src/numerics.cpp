#include "nslb/numerics.hpp"

#include <cmath>
#include <numbers>

#include "nslb/kernels.hpp"

namespace nslb {

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    return kernels::dot(a.data(), b.data(), a.size());
}

double norm2(const Vec& a) { return std::sqrt(kernels::dot(a.data(), a.data(), a.size())); }

void axpy(double alpha, const Vec& x, Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("axpy: size mismatch");
    kernels::axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double alpha, Vec& x) { kernels::scale(alpha, x.data(), x.size()); }

SpdMatrix SpdMatrix::scaled_identity(std::size_t d, double s) {
    SpdMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = s;
    return m;
}

void SpdMatrix::scale_add_diag(double alpha, double diag) {
    kernels::scale_add_diag(a_.data(), d_, alpha, diag);
}

void SpdMatrix::rank1_update(double alpha, const Vec& x) {
    if (x.size() != d_) throw DimensionMismatch("rank1_update: size mismatch");
    kernels::sym_rank1(a_.data(), d_, alpha, x.data());
}

Vec SpdMatrix::multiply(const Vec& x) const {
    if (x.size() != d_) throw DimensionMismatch("multiply: size mismatch");
    Vec y(d_);
    kernels::matvec(a_.data(), d_, x.data(), y.data());
    return y;
}

double SpdMatrix::quad_form(const Vec& x) const {
    if (x.size() != d_) throw DimensionMismatch("quad_form: size mismatch");
    return kernels::quad_form(a_.data(), d_, x.data());
}

double SpdMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < d_; ++i) t += a_[i * d_ + i];
    return t;
}

bool SpdMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = i + 1; j < d_; ++j) {
            const double ref = std::max(1.0, std::abs(a_[i * d_ + j]));
            if (std::abs(a_[i * d_ + j] - a_[j * d_ + i]) > tol * ref) return false;
        }
    return true;
}

namespace {

// Row-oriented Cholesky; returns false on a nonpositive pivot.
bool cholesky_in_place(std::vector<double>& l, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i) {
        double* row_i = l.data() + i * d;
        for (std::size_t j = 0; j <= i; ++j) {
            const double* row_j = l.data() + j * d;
            double s = row_i[j] - kernels::dot(row_i, row_j, j);
            if (j == i) {
                if (s <= 0.0 || !std::isfinite(s)) return false;
                row_i[j] = std::sqrt(s);
            } else {
                row_i[j] = s / row_j[j];
            }
        }
        for (std::size_t j = i + 1; j < d; ++j) row_i[j] = 0.0;
    }
    return true;
}

}  // namespace

LowerTriangularFactor spd_factor(const SpdMatrix& a) {
    if (!a.is_symmetric())
        throw std::invalid_argument("spd_factor: matrix is not symmetric");
    const std::size_t d = a.dim();
    LowerTriangularFactor f;
    f.d_ = d;
    f.l_.assign(a.data(), a.data() + d * d);
    if (cholesky_in_place(f.l_, d)) return f;

    // Jitter retry against roundoff accumulated by long discounted recursions.
    const double eps = 1e-10 * a.trace() / static_cast<double>(d);
    f.l_.assign(a.data(), a.data() + d * d);
    for (std::size_t i = 0; i < d; ++i) f.l_[i * d + i] += eps;
    if (cholesky_in_place(f.l_, d)) return f;
    throw NotPositiveDefinite("spd_factor: nonpositive pivot after jitter retry");
}

Vec LowerTriangularFactor::solve_lower(const Vec& b) const {
    if (b.size() != d_) throw DimensionMismatch("solve_lower: size mismatch");
    Vec y(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        const double* row = l_.data() + i * d_;
        y[i] = (b[i] - kernels::dot(row, y.data(), i)) / row[i];
    }
    return y;
}

Vec LowerTriangularFactor::solve(const Vec& b) const {
    Vec y = solve_lower(b);
    // L^T x = y, processed so all row accesses stay contiguous.
    for (std::size_t k = d_; k-- > 0;) {
        const double* row = l_.data() + k * d_;
        y[k] /= row[k];
        kernels::axpy(-y[k], row, y.data(), k);
    }
    return y;
}

Vec LowerTriangularFactor::multiply_lower(const Vec& z) const {
    if (z.size() != d_) throw DimensionMismatch("multiply_lower: size mismatch");
    Vec v(d_);
    for (std::size_t i = 0; i < d_; ++i)
        v[i] = kernels::dot(l_.data() + i * d_, z.data(), i + 1);
    return v;
}

Vec spd_solve(const LowerTriangularFactor& factor, const Vec& b) { return factor.solve(b); }

double quad_norm(const LowerTriangularFactor& factor, const Vec& x) {
    Vec y = factor.solve_lower(x);
    return norm2(y);
}

Vec gaussian_vec(RngStream& rng, std::size_t d, double scale) {
    if (scale < 0.0) throw std::invalid_argument("gaussian_vec: negative scale");
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = scale * rng.normal();
    return v;
}

GaussianTailBounds gaussian_tail_bounds(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("gaussian_tail_bounds: z must be positive");
    const double lower = std::exp(-3.5 * z * z) / (4.0 * std::sqrt(std::numbers::pi));
    const double upper = 0.5 * std::exp(-0.5 * z * z);
    return {lower, upper};
}

}  // namespace nslb
