#include "nslb/oracle.hpp"

#include "nslb/errors.hpp"

namespace nslb {

std::size_t argmax_lowest(const std::vector<double>& scores) {
    if (scores.empty()) throw EmptyActionSet("argmax over empty score vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best]) best = i;
    return best;
}

std::size_t amo_index(const FiniteSet& space, const Vec& theta) {
    if (space.actions.empty()) throw EmptyActionSet("amo: empty finite action set");
    std::size_t best = 0;
    double best_score = dot(space.actions[0], theta);
    for (std::size_t i = 1; i < space.actions.size(); ++i) {
        const double s = dot(space.actions[i], theta);
        if (s > best_score) {
            best = i;
            best_score = s;
        }
    }
    return best;
}

Vec amo(const ActionSpace& space, const Vec& theta) {
    if (const auto* fs = std::get_if<FiniteSet>(&space))
        return fs->actions[amo_index(*fs, theta)];
    const auto& ball = std::get<UnitBall>(space);
    if (theta.size() != ball.d) throw DimensionMismatch("amo: parameter dimension");
    const double n = norm2(theta);
    if (n == 0.0) {
        Vec e1(ball.d, 0.0);
        e1[0] = 1.0;
        return e1;
    }
    Vec out = theta;
    scale(1.0 / n, out);
    return out;
}

}  // namespace nslb
