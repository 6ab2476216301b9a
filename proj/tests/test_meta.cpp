#include <doctest.h>

#include <cmath>

#include "nslb/meta.hpp"
#include "test_support.hpp"

using namespace nslb;
namespace ts = test_support;

TEST_CASE("exp3 probabilities: strictly positive simplex at every step") {
    Exp3 exp3(5, 400);
    RngStream rng(71);
    for (int step = 0; step < 400; ++step) {
        const auto p = exp3.probs();
        double sum = 0.0;
        for (double v : p) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
            sum += v;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        for (double w : exp3.weights()) CHECK(w > 0.0);
        exp3.update(exp3.sample(rng), rng.uniform01());
    }
}

TEST_CASE("exp3 importance weighting is unbiased") {
    // eta = 0 freezes the sampling distribution at uniform, isolating the
    // importance-weighted estimator itself.
    const std::vector<double> true_reward{0.8, 0.3};
    const int n = 100000;
    Exp3 exp3(2, 0.0, 0.2);
    RngStream rng(72);
    std::vector<double> prev{0.0, 0.0};
    std::vector<double> estimate_sum(2, 0.0);
    for (int step = 0; step < n; ++step) {
        const std::size_t arm = exp3.sample(rng);
        exp3.update(arm, true_reward[arm]);
        const auto& cum = exp3.cumulative_estimates();
        for (std::size_t i = 0; i < 2; ++i) {
            estimate_sum[i] += cum[i] - prev[i];
            prev[i] = cum[i];
        }
    }
    for (std::size_t i = 0; i < 2; ++i) {
        const double mean = estimate_sum[i] / n;
        // per-step estimator variance r^2 (1 - p)/p with p = 1/2
        const double se = std::sqrt(true_reward[i] * true_reward[i] / n);
        CHECK(std::abs(mean - true_reward[i]) <= 3.0 * se);
    }
}

TEST_CASE("exp3 learns a 0.5 reward gap over 500 blocks") {
    Exp3 exp3(2, 500);
    RngStream rng(73);
    for (int block = 0; block < 500; ++block) {
        const std::size_t arm = exp3.sample(rng);
        exp3.update(arm, arm == 0 ? 0.75 : 0.25);
    }
    CHECK(exp3.probs()[0] > 0.6);
}

TEST_CASE("window-to-discount conversion inverts the critical-window relation") {
    const std::uint64_t T = 10000;
    const auto grid = tuning::bob_grid(16, T);
    const double logT = std::log(static_cast<double>(T));
    for (std::uint64_t window : grid.J) {
        const double gamma = BobRunner::discount_for_window(window, T);
        CHECK(gamma > 0.0);
        CHECK(gamma < 1.0);
        if (static_cast<double>(window) > logT) {
            const auto back =
                static_cast<std::uint64_t>(std::ceil(logT / (1.0 - gamma) - 1e-9));
            CHECK(back == window);
        }
    }
}

TEST_CASE("bob runner: grid arms, uniform start, block restarts") {
    BobConfig cfg;
    cfg.d = 16;
    cfg.T = 10000;
    cfg.base_kind = PolicyKind::DRandLinUcb;
    cfg.confidence = {RandomConfidenceSpec::Family::TruncatedGaussianNonneg, 0.0, 0.4};
    BobRunner bob(cfg, 99);
    CHECK(bob.grid().H == 200);
    CHECK(bob.grid().J.size() == 7);
    CHECK(bob.exp3().n_arms() == 7);
    for (double p : bob.exp3().probs())
        CHECK(p == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

    // same seed, same first window choice
    BobRunner again(cfg, 99);
    CHECK(again.current_window() == bob.current_window());

    // run one block plus one round; the base policy restarts at the boundary
    RngStream rng(100);
    std::vector<Vec> actions;
    for (int j = 0; j < 4; ++j) actions.push_back(ts::random_ball(rng, 16));
    for (std::uint64_t t = 0; t < bob.grid().H + 1; ++t) {
        const std::size_t pick = bob.select(actions);
        bob.update(actions[pick], rng.normal() * 0.1, false);
    }
    CHECK(bob.blocks_started() == 2);
    CHECK(bob.base_policy().estimator().rounds() == 1);
    CHECK(bob.exp3().plays() == 1);
}

TEST_CASE("single-arm grid degenerates to periodic restarts") {
    BobConfig cfg;
    cfg.d = 1;
    cfg.T = 16;  // H = 4, delta = 2, J = {1, 2, 4}
    cfg.base_kind = PolicyKind::DLinTs;
    BobRunner bob(cfg, 7);
    RngStream rng(8);
    std::vector<Vec> actions{Vec{0.5}, Vec{-0.5}};
    for (std::uint64_t t = 0; t < cfg.T; ++t) {
        const std::size_t pick = bob.select(actions);
        bob.update(actions[pick], rng.normal(), false);
        CHECK(bob.base_policy().estimator().rounds() <= bob.block_length());
    }
    CHECK(bob.exp3().plays() == cfg.T / bob.block_length());
}
