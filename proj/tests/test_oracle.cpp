#include <doctest.h>

#include "nslb/oracle.hpp"
#include "test_support.hpp"

using namespace nslb;
namespace ts = test_support;

TEST_CASE("amo on finite sets: argmax with lowest-index ties") {
    FiniteSet set{{Vec{1.0, 0.0}, Vec{0.0, 1.0}}};
    CHECK(amo_index(set, Vec{2.0, 1.0}) == 0);

    FiniteSet tie{{Vec{0.5, 0.0}, Vec{0.5, 0.0}, Vec{0.4, 0.0}}};
    CHECK(amo_index(tie, Vec{1.0, 0.0}) == 0);

    CHECK_THROWS_AS(amo_index(FiniteSet{}, Vec{1.0}), EmptyActionSet);
}

TEST_CASE("amo on the unit ball: normalization and zero convention") {
    const Vec dir = amo(ActionSpace{UnitBall{3}}, Vec{0.0, 3.0, 4.0});
    CHECK(dir[0] == doctest::Approx(0.0));
    CHECK(dir[1] == doctest::Approx(0.6));
    CHECK(dir[2] == doctest::Approx(0.8));

    const Vec zero = amo(ActionSpace{UnitBall{3}}, Vec{0.0, 0.0, 0.0});
    CHECK(zero[0] == 1.0);
    CHECK(zero[1] == 0.0);
    CHECK(zero[2] == 0.0);
}

TEST_CASE("amo matches a linear scan on 1000 random arms") {
    RngStream rng(21);
    FiniteSet set;
    for (int i = 0; i < 1000; ++i) set.actions.push_back(ts::random_ball(rng, 6));
    for (int rep = 0; rep < 5; ++rep) {
        Vec theta(6);
        for (auto& e : theta) e = rng.normal();
        std::size_t best = 0;
        for (std::size_t i = 1; i < set.actions.size(); ++i)
            if (ts::dense_dot(set.actions[i], theta) > ts::dense_dot(set.actions[best], theta))
                best = i;
        CHECK(amo_index(set, theta) == best);
    }
}

TEST_CASE("amo decision is invariant to positive scaling of theta") {
    RngStream rng(22);
    FiniteSet set;
    for (int i = 0; i < 50; ++i) set.actions.push_back(ts::random_ball(rng, 4));
    for (int rep = 0; rep < 10; ++rep) {
        Vec theta(4);
        for (auto& e : theta) e = rng.normal();
        const std::size_t base = amo_index(set, theta);
        for (double c : {0.01, 3.0, 1e6}) {
            Vec scaled = theta;
            scale(c, scaled);
            CHECK(amo_index(set, scaled) == base);
        }
        // optimality certificate
        const double best_score = ts::dense_dot(set.actions[base], theta);
        for (const auto& x : set.actions) CHECK(best_score >= ts::dense_dot(x, theta));
    }
}

TEST_CASE("argmax_lowest is shift invariant") {
    RngStream rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> scores(1 + rng.uniform_index(12));
        for (auto& s : scores) s = rng.normal();
        const std::size_t base = argmax_lowest(scores);
        const double c = rng.normal() * 10.0;
        std::vector<double> shifted = scores;
        for (auto& s : shifted) s += c;
        CHECK(argmax_lowest(shifted) == base);
    }
}
