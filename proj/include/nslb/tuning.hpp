#pragma once

#include <cstdint>
#include <vector>

namespace nslb::tuning {

enum class Algorithm { DRandLinUcb, DLinTs };

// Confidence-ellipsoid radius of the discounted weighted LS estimator after
// t observations:
//   beta_t = sqrt(lambda)
//          + sqrt(2 log(1/delta) + d log(1 + (1 - gamma^(2t)) / (lambda d (1 - gamma^2))))
double beta_t(double lambda, double delta, std::size_t d, double gamma, std::uint64_t t);

// Estimation-error scale over a horizon of T rounds; identical to
// beta_t(lambda, 1/T, d, gamma, T-1).
double c1(double lambda, std::size_t d, double gamma, double T);

// Perturbation concentration scale:
//   D-RandLinUCB: a sqrt(2 log(T/2));   D-LinTS: a sqrt(2 log(K T/2)).
double c2(double a, double T, std::uint64_t K, Algorithm alg);

// a = sqrt(14) * c1, the anti-concentration inflation.
double a_theory(double c1);

// c3 = 2 d log(1/gamma) + (2 d / T) log(1 + 1/(d lambda (1 - gamma)))
double c3(std::size_t d, double gamma, double lambda, double T);

struct GammaWindow {
    double gamma;           // discount factor
    std::uint64_t window;   // critical window D = ceil(log T / (1 - gamma))
};

// Drift-optimal discount:
//   gamma = 1 - d^(-1/4) B_T^(1/2) T^(-1/2)          (D-RandLinUCB)
//   gamma = 1 - d^(-1/4) (log K)^(-1/4) B_T^(1/2) T^(-1/2)   (D-LinTS)
// Throws InvalidRegime when the formula leaves (0, 1).
GammaWindow optimal_gamma(std::size_t d, double B_T, double T, std::uint64_t K, Algorithm alg);

struct BobGrid {
    std::uint64_t H;               // block length, ceil(d^(1/4) sqrt(T))
    std::uint64_t delta;           // ceil(log H)
    std::vector<std::uint64_t> J;  // geometric window grid, deduplicated ascending
};

// Block length and window grid for the meta-bandit layer:
// J = {H^0, [H^(1/delta)], ..., H}, interior points rounded to nearest (min 1).
BobGrid bob_grid(std::size_t d, std::uint64_t T);

}  // namespace nslb::tuning
