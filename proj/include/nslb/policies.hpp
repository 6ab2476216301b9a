#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nslb/estimator.hpp"
#include "nslb/oracle.hpp"
#include "nslb/rng.hpp"

namespace nslb {

enum class PolicyKind {
    LinUcb,
    GaussianLinTs,
    RandLinUcb,
    DLinUcb,
    DRandLinUcb,
    DLinTs,
    LinTsOracleRestart,
};

const char* kind_name(PolicyKind kind);
PolicyKind kind_from_name(const std::string& name);
bool is_discounted(PolicyKind kind);
// Kinds scoring via a randomized confidence level times the exploration norm.
bool is_randomized_ucb(PolicyKind kind);
// Kinds scoring via a single parameter-space perturbation (oracle-efficient).
bool is_thompson(PolicyKind kind);

// Distribution of the per-round confidence level Z_t for the randomized-UCB
// kinds. TruncatedGaussianNonneg rejects negative draws, so it is the law of
// a N(mean, sd^2) conditioned on [0, inf).
struct RandomConfidenceSpec {
    enum class Family { Gaussian, TruncatedGaussianNonneg };
    Family family = Family::TruncatedGaussianNonneg;
    double mean = 0.0;
    double sd = 0.4;

    double sample(RngStream& rng) const;
    void validate() const;
};

struct PolicyConfig {
    PolicyKind kind = PolicyKind::DRandLinUcb;
    std::size_t d = 1;
    double lambda = 1.0;
    double gamma = 1.0;  // 1 for stationary kinds, (0,1) for discounted kinds
    double a = 1.0;      // fixed confidence level (UCB) / perturbation scale (TS)
    double delta = 0.05; // tuning input only; select() never reads it
    RandomConfidenceSpec confidence{};

    // Strict harness-boundary validation (stationary kinds need gamma = 1,
    // discounted kinds gamma < 1). The Policy constructor itself accepts any
    // gamma in (0,1] so that gamma -> 1 reduction properties are testable.
    void validate() const;
};

// Uniform select/update interface over every algorithm. Selection randomness
// is keyed by (seed, round) so a round's decision is replayable: calling
// select twice without an update returns the same action.
class Policy {
public:
    Policy(const PolicyConfig& config, std::uint64_t seed);

    // Argmax over a finite action set of this round's (randomized) scores.
    std::size_t select(const std::vector<Vec>& actions);

    // Oracle path for Thompson kinds: one perturbation, one amo call, no
    // exploration-norm evaluations.
    Vec select_from(const ActionSpace& space);

    // Per-arm scores this round's select would maximize (replayable).
    std::vector<double> scores(const std::vector<Vec>& actions) const;

    // change_point: the environment flagged this round; LinTsOracleRestart
    // reinitializes its estimator before absorbing the observation.
    void update(const Vec& action, double reward, bool change_point = false);

    const PolicyConfig& config() const { return config_; }
    const DiscountedWls& estimator() const { return wls_; }
    std::uint64_t round() const { return round_; }

private:
    RngStream round_stream() const;

    PolicyConfig config_;
    DiscountedWls wls_;
    std::uint64_t seed_;
    std::uint64_t round_ = 0;
};

}  // namespace nslb
