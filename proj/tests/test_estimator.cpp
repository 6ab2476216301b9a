#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "nslb/estimator.hpp"
#include "nslb/tuning.hpp"
#include "test_support.hpp"

using namespace nslb;
namespace ts = test_support;

namespace {

struct History {
    std::vector<Vec> xs;
    std::vector<double> ys;
};

History random_history(RngStream& rng, std::size_t d, std::size_t n) {
    History h;
    for (std::size_t i = 0; i < n; ++i) {
        h.xs.push_back(ts::random_ball(rng, d));
        h.ys.push_back(rng.normal());
    }
    return h;
}

// Definitional statistics: W = sum gamma^{-l} x_l x_l^T + lambda gamma^{-(t-1)} I,
// W~ with gamma^{-2l} weights, b = sum gamma^{-l} x_l y_l; 1-based l = 1..t-1.
struct Definitional {
    ts::Mat w, w_tilde;
    std::vector<double> b;
};

Definitional definitional_stats(const History& h, double gamma, double lambda) {
    const std::size_t d = h.xs.empty() ? 1 : h.xs[0].size();
    const auto n = h.xs.size();  // t - 1
    Definitional out{ts::make_mat(d), ts::make_mat(d), std::vector<double>(d, 0.0)};
    for (std::size_t l1 = 1; l1 <= n; ++l1) {
        const Vec& x = h.xs[l1 - 1];
        const double w1 = std::pow(gamma, -static_cast<double>(l1));
        const double w2 = std::pow(gamma, -2.0 * static_cast<double>(l1));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                out.w[i][j] += w1 * x[i] * x[j];
                out.w_tilde[i][j] += w2 * x[i] * x[j];
            }
            out.b[i] += w1 * x[i] * h.ys[l1 - 1];
        }
    }
    const double ridge1 = lambda * std::pow(gamma, -static_cast<double>(n));
    const double ridge2 = lambda * std::pow(gamma, -2.0 * static_cast<double>(n));
    for (std::size_t i = 0; i < d; ++i) {
        out.w[i][i] += ridge1;
        out.w_tilde[i][i] += ridge2;
    }
    return out;
}

}  // namespace

TEST_CASE("initialization: W = W~ = lambda I, zero estimate") {
    DiscountedWls est(2, 0.9, 1.0);
    CHECK(est.gram()(0, 0) == 1.0);
    CHECK(est.gram()(0, 1) == 0.0);
    CHECK(est.gram_sq()(1, 1) == 1.0);
    CHECK(est.theta_hat()[0] == 0.0);
    CHECK(est.theta_hat()[1] == 0.0);
    CHECK(est.rounds() == 0);

    DiscountedWls est2(1, 1.0, 2.0);
    CHECK(est2.gram()(0, 0) == 2.0);

    CHECK_THROWS_AS(DiscountedWls(2, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(DiscountedWls(2, 1.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(DiscountedWls(2, 0.9, 0.5), std::invalid_argument);
}

TEST_CASE("one-step recursion algebra, d=1") {
    for (double gamma : {0.3, 0.7, 1.0}) {
        DiscountedWls est(1, gamma, 1.0);
        est.update(Vec{1.0}, 1.0);
        // W = gamma*1 + 1 + (1-gamma)*1 = 2
        CHECK(est.gram()(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(est.response_sum()[0] == doctest::Approx(1.0));
        CHECK(est.theta_hat()[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(est.rounds() == 1);
    }
}

TEST_CASE("two-step hand recursion, d=2, gamma=0.5") {
    DiscountedWls est(2, 0.5, 1.0);
    est.update(Vec{1.0, 0.0}, 1.0);
    est.update(Vec{0.0, 1.0}, 1.0);
    CHECK(est.gram()(0, 0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(est.gram()(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(est.gram()(0, 1) == doctest::Approx(0.0));
    CHECK(est.response_sum()[0] == doctest::Approx(0.5));
    CHECK(est.response_sum()[1] == doctest::Approx(1.0));
    CHECK(est.theta_hat()[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(est.theta_hat()[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("rescaling consistency with the definitional statistics") {
    RngStream rng(101);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t d = 1 + rng.uniform_index(6);
        const std::size_t n = 1 + rng.uniform_index(50);
        const double gamma = 0.6 + 0.39 * rng.uniform01();
        const double lambda = 1.0 + 2.0 * rng.uniform01();
        const History h = random_history(rng, d, n);

        DiscountedWls est(d, gamma, lambda);
        for (std::size_t i = 0; i < n; ++i) est.update(h.xs[i], h.ys[i]);

        // After n updates the state sits at paper time t = n + 1, so the
        // recursion equals gamma^{t-1} = gamma^n times the definitional form.
        const auto def = definitional_stats(h, gamma, lambda);
        const double s1 = std::pow(gamma, static_cast<double>(n));
        const double s2 = std::pow(gamma, 2.0 * static_cast<double>(n));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                CHECK(est.gram()(i, j) ==
                      doctest::Approx(s1 * def.w[i][j]).epsilon(1e-8));
                CHECK(est.gram_sq()(i, j) ==
                      doctest::Approx(s2 * def.w_tilde[i][j]).epsilon(1e-8));
            }
            CHECK(est.response_sum()[i] == doctest::Approx(s1 * def.b[i]).epsilon(1e-8));
        }

        // theta from the definitional form matches the recursion's estimate
        const auto theta_def = ts::dense_solve(def.w, def.b);
        for (std::size_t i = 0; i < d; ++i)
            CHECK(est.theta_hat()[i] == doctest::Approx(theta_def[i]).epsilon(1e-8));
    }
}

TEST_CASE("gamma = 1 reduces to batch ridge") {
    RngStream rng(202);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t d = 1 + rng.uniform_index(8);
        const std::size_t n = 1 + rng.uniform_index(40);
        const double lambda = 1.0 + rng.uniform01();
        const History h = random_history(rng, d, n);
        DiscountedWls est(d, 1.0, lambda);
        ts::Mat gram = ts::make_mat(d);
        std::vector<double> rhs(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) gram[i][i] = lambda;
        for (std::size_t l = 0; l < n; ++l) {
            est.update(h.xs[l], h.ys[l]);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) gram[i][j] += h.xs[l][i] * h.xs[l][j];
                rhs[i] += h.xs[l][i] * h.ys[l];
            }
        }
        const auto ridge = ts::dense_solve(gram, rhs);
        for (std::size_t i = 0; i < d; ++i)
            CHECK(est.theta_hat()[i] == doctest::Approx(ridge[i]).epsilon(1e-8));
        // W~ = W exactly when gamma = 1
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                CHECK(est.gram_sq()(i, j) == doctest::Approx(est.gram()(i, j)).epsilon(1e-12));
    }
}

TEST_CASE("theta_hat solves W theta = b after every update") {
    RngStream rng(303);
    DiscountedWls est(4, 0.93, 1.5);
    for (int i = 0; i < 60; ++i) {
        est.update(ts::random_ball(rng, 4), rng.normal());
        const Vec lhs = est.gram().multiply(est.theta_hat());
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(lhs[j] == doctest::Approx(est.response_sum()[j]).epsilon(1e-10));
    }
}

TEST_CASE("smallest eigenvalue of W and W~ never drops below lambda") {
    RngStream rng(404);
    for (double gamma : {0.5, 0.9, 0.999, 1.0}) {
        DiscountedWls est(3, gamma, 1.25);
        for (int i = 0; i < 200; ++i) est.update(ts::random_ball(rng, 3), rng.normal());
        CHECK(ts::min_eigenvalue(ts::to_dense(est.gram())) >= 1.25 - 1e-8);
        CHECK(ts::min_eigenvalue(ts::to_dense(est.gram_sq())) >= 1.25 - 1e-8);
    }
}

TEST_CASE("exploration_norm: fresh-state algebra") {
    DiscountedWls est(3, 0.9, 1.0);
    Vec x{0.0, 1.0, 0.0};
    CHECK(est.exploration_norm(x) == doctest::Approx(1.0).epsilon(1e-12));

    DiscountedWls est4(2, 1.0, 4.0);
    Vec unit{1.0, 0.0};
    CHECK(est4.exploration_norm(unit) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exploration_norm matches the explicit dense V^{-1} quadratic form") {
    RngStream rng(505);
    DiscountedWls est(4, 0.9, 1.0);
    for (int i = 0; i < 20; ++i) est.update(ts::random_ball(rng, 4), rng.normal());
    const auto w = ts::to_dense(est.gram());
    const auto wt = ts::to_dense(est.gram_sq());
    const auto w_inv = ts::dense_inverse(w);
    const auto v_inv = ts::dense_mul(ts::dense_mul(w_inv, wt), w_inv);
    for (int rep = 0; rep < 10; ++rep) {
        const Vec x = ts::random_ball(rng, 4);
        const double expected = std::sqrt(ts::dense_dot(x, ts::dense_matvec(v_inv, x)));
        CHECK(est.exploration_norm(x) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("exploration_norm is invariant under the rescaling") {
    RngStream rng(606);
    const std::size_t d = 3;
    const double gamma = 0.8, lambda = 1.0;
    const History h = random_history(rng, d, 25);
    DiscountedWls est(d, gamma, lambda);
    for (std::size_t i = 0; i < h.xs.size(); ++i) est.update(h.xs[i], h.ys[i]);

    const auto def = definitional_stats(h, gamma, lambda);
    const auto w_inv = ts::dense_inverse(def.w);
    const auto v_inv = ts::dense_mul(ts::dense_mul(w_inv, def.w_tilde), w_inv);
    for (int rep = 0; rep < 10; ++rep) {
        const Vec x = ts::random_ball(rng, d);
        const double from_definition = std::sqrt(ts::dense_dot(x, ts::dense_matvec(v_inv, x)));
        CHECK(est.exploration_norm(x) == doctest::Approx(from_definition).epsilon(1e-8));
    }
}

TEST_CASE("monotone information at gamma = 1") {
    RngStream rng(707);
    DiscountedWls est(3, 1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const Vec x = ts::random_ball(rng, 3);
        const double before = est.exploration_norm(x);
        est.update(x, rng.normal());
        CHECK(est.exploration_norm(x) <= before + 1e-8);
    }
}

TEST_CASE("perturb_estimate: a = 0 returns theta_hat exactly") {
    RngStream rng(808);
    DiscountedWls est(3, 0.9, 1.0);
    for (int i = 0; i < 10; ++i) est.update(ts::random_ball(rng, 3), rng.normal());
    RngStream prng(1);
    const Vec p = est.perturb_estimate(prng, 0.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(p[i] == est.theta_hat()[i]);
}

TEST_CASE("perturb_estimate covariance matches a^2 W^{-1} W~ W^{-1}") {
    RngStream rng(909);
    const std::size_t d = 3;
    DiscountedWls est(d, 0.85, 1.0);
    for (int i = 0; i < 30; ++i) est.update(ts::random_ball(rng, d), rng.normal());

    const double a = 1.4;
    const auto w_inv = ts::dense_inverse(ts::to_dense(est.gram()));
    const auto cov_expected =
        ts::dense_mul(ts::dense_mul(w_inv, ts::to_dense(est.gram_sq())), w_inv);

    const int n = 100000;
    RngStream prng(424242);
    std::vector<double> mean(d, 0.0);
    ts::Mat second = ts::make_mat(d);
    for (int s = 0; s < n; ++s) {
        const Vec p = est.perturb_estimate(prng, a);
        for (std::size_t i = 0; i < d; ++i) {
            const double ci = p[i] - est.theta_hat()[i];
            mean[i] += ci;
            for (std::size_t j = 0; j < d; ++j) second[i][j] += ci * (p[j] - est.theta_hat()[j]);
        }
    }
    for (std::size_t i = 0; i < d; ++i) mean[i] /= n;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double sample_cov = second[i][j] / n - mean[i] * mean[j];
            const double expected = a * a * cov_expected[i][j];
            // Gaussian fourth-moment standard error of a sample covariance
            const double se = std::sqrt((a * a * cov_expected[i][i] * a * a * cov_expected[j][j] +
                                         expected * expected) /
                                        n);
            CHECK(std::abs(sample_cov - expected) <= 3.0 * se);
        }
}

TEST_CASE("surrogate_parameter: telescoping and direct evaluation") {
    RngStream rng(1111);
    const std::size_t d = 4;

    // constant parameter -> exact recovery
    const Vec theta = ts::random_unit(rng, d);
    std::vector<std::pair<Vec, Vec>> history;
    for (int i = 0; i < 30; ++i) history.emplace_back(ts::random_ball(rng, d), theta);
    const Vec rec = surrogate_parameter(history, 0.9, 1.0, theta);
    for (std::size_t i = 0; i < d; ++i)
        CHECK(rec[i] == doctest::Approx(theta[i]).epsilon(1e-10));

    // empty history -> theta_star_t
    const Vec empty_out = surrogate_parameter({}, 0.7, 2.0, theta);
    for (std::size_t i = 0; i < d; ++i) CHECK(empty_out[i] == doctest::Approx(theta[i]));

    // two segments -> matches the gamma^{-l}-weighted definitional formula
    const Vec theta2 = ts::random_unit(rng, d);
    std::vector<std::pair<Vec, Vec>> two_seg;
    const std::size_t n = 20;
    for (std::size_t i = 0; i < n; ++i)
        two_seg.emplace_back(ts::random_ball(rng, d), i < n / 2 ? theta : theta2);
    const double gamma = 0.8, lambda = 1.5;

    ts::Mat w = ts::make_mat(d);
    std::vector<double> rhs(d, 0.0);
    for (std::size_t l1 = 1; l1 <= n; ++l1) {
        const auto& [x, th] = two_seg[l1 - 1];
        const double wgt = std::pow(gamma, -static_cast<double>(l1));
        const double xth = ts::dense_dot(x, th);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) w[i][j] += wgt * x[i] * x[j];
            rhs[i] += wgt * x[i] * xth;
        }
    }
    const double ridge = lambda * std::pow(gamma, -static_cast<double>(n));
    for (std::size_t i = 0; i < d; ++i) {
        w[i][i] += ridge;
        rhs[i] += ridge * theta2[i];
    }
    const auto expected = ts::dense_solve(w, rhs);
    const Vec got = surrogate_parameter(two_seg, gamma, lambda, theta2);
    for (std::size_t i = 0; i < d; ++i)
        CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("confidence coverage sanity (small-scale Lemma 1 check)") {
    // Full-scale coverage runs in the acceptance suite; this is a light
    // version with the same event structure.
    RngStream master(2024);
    const std::size_t d = 4;
    const double gamma = 0.98, lambda = 1.0, delta = 0.05;
    const std::uint64_t horizon = 200;
    int covered = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        RngStream rng(mix_seed(2024, "coverage", rep));
        const Vec theta = ts::random_unit(rng, d);
        DiscountedWls est(d, gamma, lambda);
        bool ok = true;
        for (std::uint64_t t = 1; t <= horizon; ++t) {
            const Vec x = ts::random_unit(rng, d);
            est.update(x, dot(x, theta) + rng.normal());
            Vec err = est.theta_hat();
            axpy(-1.0, theta, err);
            if (est.ellipsoid_norm(err) > tuning::beta_t(lambda, delta, d, gamma, t)) {
                ok = false;
                break;
            }
        }
        covered += ok;
    }
    CHECK(static_cast<double>(covered) / reps >= 0.90);
}

TEST_CASE("instrumentation counters") {
    RngStream rng(333);
    DiscountedWls est(2, 0.9, 1.0);
    est.update(Vec{1.0, 0.0}, 0.5);
    CHECK(est.stats().updates == 1);
    CHECK(est.stats().factorizations == 2);
    est.exploration_norm(Vec{0.0, 1.0});
    CHECK(est.stats().norm_evals == 1);
    est.perturb_estimate(rng, 1.0);
    CHECK(est.stats().perturb_draws == 1);
}
