#include "nslb/estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace nslb {

DiscountedWls::DiscountedWls(std::size_t d, double gamma, double lambda)
    : d_(d), gamma_(gamma), lambda_(lambda) {
    if (d < 1) throw std::invalid_argument("DiscountedWls: d must be >= 1");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("DiscountedWls: gamma must lie in (0,1]");
    if (!(lambda >= 1.0)) throw std::invalid_argument("DiscountedWls: lambda must be >= 1");
    reset();
}

void DiscountedWls::reset() {
    w_ = SpdMatrix::scaled_identity(d_, lambda_);
    w_tilde_ = SpdMatrix::scaled_identity(d_, lambda_);
    b_bar_.assign(d_, 0.0);
    theta_.assign(d_, 0.0);
    w_factor_ = spd_factor(w_);
    w_tilde_factor_ = spd_factor(w_tilde_);
    t_ = 0;
}

void DiscountedWls::update(const Vec& x, double y) {
    if (x.size() != d_) throw DimensionMismatch("DiscountedWls::update: action dimension");
    const double g2 = gamma_ * gamma_;
    w_.scale_add_diag(gamma_, (1.0 - gamma_) * lambda_);
    w_.rank1_update(1.0, x);
    w_tilde_.scale_add_diag(g2, (1.0 - g2) * lambda_);
    w_tilde_.rank1_update(1.0, x);
    scale(gamma_, b_bar_);
    axpy(y, x, b_bar_);

    // The discounted recursion perturbs the whole matrix each round, so
    // rank-1 inverse updates do not apply; refactorize.
    w_factor_ = spd_factor(w_);
    w_tilde_factor_ = spd_factor(w_tilde_);
    theta_ = w_factor_.solve(b_bar_);
    ++t_;
    ++stats_.updates;
    stats_.factorizations += 2;
}

double DiscountedWls::exploration_norm(const Vec& x) const {
    if (x.size() != d_) throw DimensionMismatch("exploration_norm: action dimension");
    ++stats_.norm_evals;
    const Vec u = w_factor_.solve(x);
    return std::sqrt(std::max(0.0, w_tilde_.quad_form(u)));
}

Vec DiscountedWls::perturb_estimate(RngStream& rng, double scale) const {
    if (scale < 0.0) throw std::invalid_argument("perturb_estimate: negative scale");
    ++stats_.perturb_draws;
    const Vec z = gaussian_vec(rng, d_, scale);
    const Vec v = w_tilde_factor_.multiply_lower(z);
    Vec out = w_factor_.solve(v);
    axpy(1.0, theta_, out);
    return out;
}

double DiscountedWls::ellipsoid_norm(const Vec& v) const {
    if (v.size() != d_) throw DimensionMismatch("ellipsoid_norm: vector dimension");
    const Vec wv = w_.multiply(v);
    return quad_norm(w_tilde_factor_, wv);
}

Vec surrogate_parameter(const std::vector<std::pair<Vec, Vec>>& history, double gamma,
                        double lambda, const Vec& theta_star_t) {
    const std::size_t d = theta_star_t.size();
    if (d < 1) throw std::invalid_argument("surrogate_parameter: empty parameter");
    SpdMatrix w = SpdMatrix::scaled_identity(d, lambda);
    Vec rhs(d, 0.0);
    axpy(lambda, theta_star_t, rhs);
    const std::size_t n = history.size();
    for (std::size_t l = 0; l < n; ++l) {
        const auto& [x, theta_l] = history[l];
        if (x.size() != d || theta_l.size() != d)
            throw DimensionMismatch("surrogate_parameter: history dimension");
        // weight gamma^{t-1-l} with t-1 = n and 1-based l
        const double weight = std::pow(gamma, static_cast<double>(n - 1 - l));
        w.rank1_update(weight, x);
        axpy(weight * dot(x, theta_l), x, rhs);
    }
    return spd_factor(w).solve(rhs);
}

}  // namespace nslb
