#include "nslb/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nslb/errors.hpp"

namespace nslb::tuning {

double beta_t(double lambda, double delta, std::size_t d, double gamma, std::uint64_t t) {
    if (!(lambda > 0.0)) throw std::invalid_argument("beta_t: lambda must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("beta_t: delta must lie in (0,1)");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("beta_t: gamma must lie in (0,1)");
    if (d < 1) throw std::invalid_argument("beta_t: d must be >= 1");
    const double dd = static_cast<double>(d);
    const double grow = (1.0 - std::pow(gamma, 2.0 * static_cast<double>(t))) /
                        (lambda * dd * (1.0 - gamma * gamma));
    return std::sqrt(lambda) + std::sqrt(2.0 * std::log(1.0 / delta) + dd * std::log1p(grow));
}

double c1(double lambda, std::size_t d, double gamma, double T) {
    if (!(T >= 2.0)) throw std::invalid_argument("c1: T must be >= 2");
    if (!(lambda >= 1.0)) throw std::invalid_argument("c1: lambda must be >= 1");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("c1: gamma must lie in (0,1)");
    const double dd = static_cast<double>(d);
    const double grow = (1.0 - std::pow(gamma, 2.0 * (T - 1.0))) /
                        (lambda * dd * (1.0 - gamma * gamma));
    return std::sqrt(2.0 * std::log(T) + dd * std::log1p(grow)) + std::sqrt(lambda);
}

double c2(double a, double T, std::uint64_t K, Algorithm alg) {
    if (!(T >= 3.0)) throw std::invalid_argument("c2: T must be >= 3");
    if (a < 0.0) throw std::invalid_argument("c2: a must be nonnegative");
    switch (alg) {
        case Algorithm::DRandLinUcb:
            return a * std::sqrt(2.0 * std::log(T / 2.0));
        case Algorithm::DLinTs:
            if (K < 1) throw std::invalid_argument("c2: K must be >= 1");
            return a * std::sqrt(2.0 * std::log(static_cast<double>(K) * T / 2.0));
    }
    throw std::invalid_argument("c2: unknown algorithm");
}

double a_theory(double c1) {
    if (c1 < 0.0) throw std::invalid_argument("a_theory: c1 must be nonnegative");
    return std::sqrt(14.0) * c1;
}

double c3(std::size_t d, double gamma, double lambda, double T) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("c3: gamma must lie in (0,1)");
    if (!(lambda > 0.0)) throw std::invalid_argument("c3: lambda must be positive");
    if (!(T >= 1.0)) throw std::invalid_argument("c3: T must be >= 1");
    const double dd = static_cast<double>(d);
    return 2.0 * dd * std::log(1.0 / gamma) +
           (2.0 * dd / T) * std::log1p(1.0 / (dd * lambda * (1.0 - gamma)));
}

GammaWindow optimal_gamma(std::size_t d, double B_T, double T, std::uint64_t K, Algorithm alg) {
    if (!(B_T > 0.0)) throw std::invalid_argument("optimal_gamma: B_T must be positive (use gamma = 1 for stationary)");
    if (!(T >= 2.0)) throw std::invalid_argument("optimal_gamma: T must be >= 2");
    double rate = std::pow(static_cast<double>(d), -0.25) * std::sqrt(B_T) / std::sqrt(T);
    if (alg == Algorithm::DLinTs) {
        if (K < 2) throw std::invalid_argument("optimal_gamma: K must be >= 2 for the D-LinTS branch");
        rate *= std::pow(std::log(static_cast<double>(K)), -0.25);
    }
    if (rate >= 1.0)
        throw InvalidRegime("optimal_gamma: drift budget too large, gamma formula leaves (0,1)");
    const double gamma = 1.0 - rate;
    const auto window = static_cast<std::uint64_t>(std::ceil(std::log(T) / rate));
    return {gamma, window};
}

BobGrid bob_grid(std::size_t d, std::uint64_t T) {
    if (T < 4) throw std::invalid_argument("bob_grid: T must be >= 4");
    const double Td = static_cast<double>(T);
    const auto H = static_cast<std::uint64_t>(
        std::ceil(std::pow(static_cast<double>(d), 0.25) * std::sqrt(Td)));
    const double logH = std::log(static_cast<double>(H));
    const auto delta = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(logH)));

    std::vector<std::uint64_t> grid;
    grid.reserve(delta + 1);
    for (std::uint64_t i = 0; i <= delta; ++i) {
        std::uint64_t v;
        if (i == 0) {
            v = 1;
        } else if (i == delta) {
            v = H;
        } else {
            const double p = std::exp(logH * static_cast<double>(i) / static_cast<double>(delta));
            v = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(p)));
        }
        grid.push_back(v);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return {H, delta, std::move(grid)};
}

}  // namespace nslb::tuning
