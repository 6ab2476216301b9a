#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "nslb/numerics.hpp"

namespace nslb {

struct FiniteSet {
    std::vector<Vec> actions;
};

struct UnitBall {
    std::size_t d;
};

using ActionSpace = std::variant<FiniteSet, UnitBall>;

// Shared tie rule everywhere a score vector is maximized: strictly-greater
// comparison keeps the lowest index.
std::size_t argmax_lowest(const std::vector<double>& scores);

// Offline optimization oracle: argmax_{x in space} <x, theta>.
// Finite sets break ties toward the lowest index; the unit ball returns
// theta / ||theta|| and e_1 for theta = 0.
std::size_t amo_index(const FiniteSet& space, const Vec& theta);
Vec amo(const ActionSpace& space, const Vec& theta);

}  // namespace nslb
