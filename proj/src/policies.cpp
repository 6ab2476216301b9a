#include "nslb/policies.hpp"

#include <stdexcept>

#include "nslb/errors.hpp"

namespace nslb {

const char* kind_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::LinUcb: return "lin_ucb";
        case PolicyKind::GaussianLinTs: return "gaussian_lin_ts";
        case PolicyKind::RandLinUcb: return "rand_lin_ucb";
        case PolicyKind::DLinUcb: return "d_lin_ucb";
        case PolicyKind::DRandLinUcb: return "d_rand_lin_ucb";
        case PolicyKind::DLinTs: return "d_lin_ts";
        case PolicyKind::LinTsOracleRestart: return "lin_ts_oracle_restart";
    }
    return "?";
}

PolicyKind kind_from_name(const std::string& name) {
    for (PolicyKind k : {PolicyKind::LinUcb, PolicyKind::GaussianLinTs, PolicyKind::RandLinUcb,
                         PolicyKind::DLinUcb, PolicyKind::DRandLinUcb, PolicyKind::DLinTs,
                         PolicyKind::LinTsOracleRestart})
        if (name == kind_name(k)) return k;
    throw ConfigError("unknown policy kind: " + name);
}

bool is_discounted(PolicyKind kind) {
    return kind == PolicyKind::DLinUcb || kind == PolicyKind::DRandLinUcb ||
           kind == PolicyKind::DLinTs;
}

bool is_randomized_ucb(PolicyKind kind) {
    return kind == PolicyKind::RandLinUcb || kind == PolicyKind::DRandLinUcb;
}

bool is_thompson(PolicyKind kind) {
    return kind == PolicyKind::GaussianLinTs || kind == PolicyKind::DLinTs ||
           kind == PolicyKind::LinTsOracleRestart;
}

double RandomConfidenceSpec::sample(RngStream& rng) const {
    if (sd == 0.0) return mean;
    if (family == Family::Gaussian) return rng.normal(mean, sd);
    // Rejection keeps the draw exact; acceptance probability >= 1/2 for
    // mean >= 0, so this touches the stream O(1) times per round.
    double z;
    do {
        z = rng.normal(mean, sd);
    } while (z < 0.0);
    return z;
}

void RandomConfidenceSpec::validate() const {
    if (sd < 0.0) throw ConfigError("confidence distribution: sd must be nonnegative");
    if (family == Family::TruncatedGaussianNonneg && sd == 0.0 && mean < 0.0)
        throw ConfigError("confidence distribution: degenerate truncated draw below 0");
}

void PolicyConfig::validate() const {
    if (d < 1) throw ConfigError("policy: d must be >= 1");
    if (!(lambda >= 1.0)) throw ConfigError("policy: lambda must be >= 1");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("policy: gamma must lie in (0,1]");
    if (is_discounted(kind) && gamma >= 1.0)
        throw ConfigError(std::string(kind_name(kind)) + ": discounted kind requires gamma < 1");
    if (!is_discounted(kind) && gamma != 1.0)
        throw ConfigError(std::string(kind_name(kind)) + ": stationary kind requires gamma = 1");
    if (a < 0.0) throw ConfigError("policy: a must be nonnegative");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("policy: delta must lie in (0,1)");
    if (is_randomized_ucb(kind)) confidence.validate();
}

Policy::Policy(const PolicyConfig& config, std::uint64_t seed)
    : config_(config), wls_(config.d, config.gamma, config.lambda), seed_(seed) {}

RngStream Policy::round_stream() const {
    // Keyed by round so a round's randomness has a fixed nonce: replaying a
    // select is deterministic and exactly one confidence draw (or one
    // perturbation vector) is consumed per round.
    return RngStream(mix_seed(seed_, round_ + 1));
}

std::vector<double> Policy::scores(const std::vector<Vec>& actions) const {
    if (actions.empty()) throw EmptyActionSet(std::string(kind_name(config_.kind)) + ": empty action set");
    RngStream rng = round_stream();
    std::vector<double> s(actions.size());
    switch (config_.kind) {
        case PolicyKind::LinUcb:
        case PolicyKind::DLinUcb: {
            for (std::size_t i = 0; i < actions.size(); ++i)
                s[i] = dot(actions[i], wls_.theta_hat()) +
                       config_.a * wls_.exploration_norm(actions[i]);
            break;
        }
        case PolicyKind::RandLinUcb:
        case PolicyKind::DRandLinUcb: {
            const double z = config_.confidence.sample(rng);
            for (std::size_t i = 0; i < actions.size(); ++i)
                s[i] = dot(actions[i], wls_.theta_hat()) + z * wls_.exploration_norm(actions[i]);
            break;
        }
        case PolicyKind::GaussianLinTs:
        case PolicyKind::DLinTs:
        case PolicyKind::LinTsOracleRestart: {
            const Vec theta = wls_.perturb_estimate(rng, config_.a);
            for (std::size_t i = 0; i < actions.size(); ++i) s[i] = dot(actions[i], theta);
            break;
        }
    }
    return s;
}

std::size_t Policy::select(const std::vector<Vec>& actions) {
    return argmax_lowest(scores(actions));
}

Vec Policy::select_from(const ActionSpace& space) {
    if (is_thompson(config_.kind)) {
        RngStream rng = round_stream();
        const Vec theta = wls_.perturb_estimate(rng, config_.a);
        return amo(space, theta);
    }
    if (const auto* fs = std::get_if<FiniteSet>(&space))
        return fs->actions[select(fs->actions)];
    throw OracleFailure(std::string(kind_name(config_.kind)) +
                        ": needs per-action exploration norms, no infinite-set oracle path");
}

void Policy::update(const Vec& action, double reward, bool change_point) {
    if (config_.kind == PolicyKind::LinTsOracleRestart && change_point) wls_.reset();
    wls_.update(action, reward);
    ++round_;
}

}  // namespace nslb
