#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nslb/numerics.hpp"
#include "nslb/rng.hpp"

namespace nslb {

struct WlsStats {
    std::uint64_t updates = 0;
    std::uint64_t factorizations = 0;
    std::uint64_t norm_evals = 0;     // exploration_norm calls
    std::uint64_t perturb_draws = 0;  // perturb_estimate calls
};

// Online discounted weighted least-squares estimator.
//
// Stores the per-round recursion
//   W  <- gamma   W  + x x^T + (1 - gamma  ) lambda I
//   W~ <- gamma^2 W~ + x x^T + (1 - gamma^2) lambda I
//   b  <- gamma b + x y,   theta = W^{-1} b
// rather than the gamma^{-l}-weighted definitional statistics: those grow as
// gamma^{-t} and overflow for long horizons, while the two parameterizations
// differ only by a global scale that cancels in theta and in the exploration
// norm. The equivalence is property-tested.
class DiscountedWls {
public:
    DiscountedWls(std::size_t d, double gamma, double lambda);

    void update(const Vec& x, double y);

    // ||x||_{V^{-1}} = sqrt(x^T W^{-1} W~ W^{-1} x), with V = W W~^{-1} W.
    double exploration_norm(const Vec& x) const;

    // theta + W^{-1} L~ z with L~ L~^T = W~ and z ~ N(0, scale^2 I_d); the
    // result is N(theta, scale^2 W^{-1} W~ W^{-1}). Any factor L~ with
    // L~ L~^T = W~ yields this law, so the symmetric square root is never
    // formed. scale = 0 returns theta exactly (rng is still advanced).
    Vec perturb_estimate(RngStream& rng, double scale) const;

    // ||v||_V = sqrt(v^T W W~^{-1} W v); used by confidence-coverage checks.
    double ellipsoid_norm(const Vec& v) const;

    // Re-initialize to the fresh state, keeping d, gamma, lambda.
    void reset();

    std::size_t dim() const { return d_; }
    double discount() const { return gamma_; }
    double ridge() const { return lambda_; }
    std::uint64_t rounds() const { return t_; }
    const Vec& theta_hat() const { return theta_; }
    const SpdMatrix& gram() const { return w_; }
    const SpdMatrix& gram_sq() const { return w_tilde_; }
    const Vec& response_sum() const { return b_bar_; }
    const LowerTriangularFactor& gram_factor() const { return w_factor_; }
    const LowerTriangularFactor& gram_sq_factor() const { return w_tilde_factor_; }
    const WlsStats& stats() const { return stats_; }

private:
    std::size_t d_;
    double gamma_;
    double lambda_;
    SpdMatrix w_;
    SpdMatrix w_tilde_;
    Vec b_bar_;
    Vec theta_;
    LowerTriangularFactor w_factor_;
    LowerTriangularFactor w_tilde_factor_;
    std::uint64_t t_ = 0;
    mutable WlsStats stats_;
};

// Surrogate parameter: the discounted blend of past true parameters that the
// confidence ellipsoid covers under drift,
//   W^{-1} (sum_l gamma^{t-1-l} x_l x_l^T theta_l + lambda theta_t)
// over the history of (action, true parameter) pairs. Diagnostic only; a
// learner has no access to the true parameters.
Vec surrogate_parameter(const std::vector<std::pair<Vec, Vec>>& history, double gamma,
                        double lambda, const Vec& theta_star_t);

}  // namespace nslb
