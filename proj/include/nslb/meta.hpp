#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nslb/policies.hpp"
#include "nslb/rng.hpp"
#include "nslb/tuning.hpp"

namespace nslb {

// EXP3 with uniform exploration mixing and importance-weighted estimates:
//   p_i = (1 - mix) * exp(eta * S_i) / sum_j exp(eta * S_j) + mix / n
//   S_played += observed / p_played
// For a play budget N the standard rates are
//   mix = min(1, sqrt(n log n / ((e - 1) N))),  eta = mix / n.
class Exp3 {
public:
    Exp3(std::size_t n_arms, std::uint64_t n_plays);
    Exp3(std::size_t n_arms, double eta, double mix);

    std::size_t n_arms() const { return estimates_.size(); }
    double eta() const { return eta_; }
    double mix() const { return mix_; }
    std::uint64_t plays() const { return plays_; }

    // Mixed sampling distribution; entries in (0,1), sums to 1.
    std::vector<double> probs() const;
    // Strictly positive softmax weights (normalized to max 1).
    std::vector<double> weights() const;
    const std::vector<double>& cumulative_estimates() const { return estimates_; }

    std::size_t sample(RngStream& rng) const;
    // reward01 must lie in [0,1].
    void update(std::size_t arm, double reward01);

private:
    std::vector<double> estimates_;
    double eta_;
    double mix_;
    std::uint64_t plays_ = 0;
};

struct BobConfig {
    std::size_t d = 1;
    std::uint64_t T = 4;
    PolicyKind base_kind = PolicyKind::DRandLinUcb;
    double lambda = 1.0;
    double a = 1.0;
    double delta = 0.05;
    RandomConfidenceSpec confidence{};
    // Per-round rewards are clamped to [-1 - 4*sigma, 1 + 4*sigma] before the
    // block average is mapped affinely onto [0,1] for EXP3.
    double noise_sd = 0.0;
};

// Bandits-over-bandits: EXP3 over the critical-window grid J, running a fresh
// base policy per block of length H and feeding back the block's total
// (normalized) reward.
class BobRunner {
public:
    BobRunner(const BobConfig& config, std::uint64_t seed);

    std::size_t select(const std::vector<Vec>& actions);
    void update(const Vec& action, double reward, bool change_point = false);

    const tuning::BobGrid& grid() const { return grid_; }
    const Exp3& exp3() const { return exp3_; }
    std::uint64_t block_length() const { return grid_.H; }
    std::uint64_t current_window() const { return grid_.J[choice_]; }
    std::uint64_t blocks_started() const { return block_; }
    const Policy& base_policy() const { return *base_; }

    // Window size -> discount for the block's base policy: the inverse of
    // D = log T / (1 - gamma), floored so gamma stays inside (0,1) when the
    // grid holds windows shorter than log T.
    static double discount_for_window(std::uint64_t window, std::uint64_t T);

private:
    void start_block();

    BobConfig config_;
    tuning::BobGrid grid_;
    Exp3 exp3_;
    RngStream meta_rng_;
    std::uint64_t seed_;
    std::unique_ptr<Policy> base_;
    std::size_t choice_ = 0;
    std::uint64_t block_ = 0;         // blocks started
    std::uint64_t round_in_block_ = 0;
    std::uint64_t round_ = 0;
    double block_reward_ = 0.0;       // clamped sum
};

}  // namespace nslb
