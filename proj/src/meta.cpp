#include "nslb/meta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nslb/errors.hpp"

namespace nslb {

namespace {

double exp3_mix_rate(std::size_t n_arms, std::uint64_t n_plays) {
    const double n = static_cast<double>(n_arms);
    const double budget = std::max<double>(1.0, static_cast<double>(n_plays));
    return std::min(1.0, std::sqrt(n * std::log(n) / ((std::numbers::e - 1.0) * budget)));
}

}  // namespace

Exp3::Exp3(std::size_t n_arms, std::uint64_t n_plays)
    : Exp3(n_arms, exp3_mix_rate(n_arms, n_plays) / static_cast<double>(n_arms),
           exp3_mix_rate(n_arms, n_plays)) {}

Exp3::Exp3(std::size_t n_arms, double eta, double mix)
    : estimates_(n_arms, 0.0), eta_(eta), mix_(mix) {
    if (n_arms < 1) throw std::invalid_argument("Exp3: need at least one arm");
    if (eta < 0.0 || mix < 0.0 || mix > 1.0) throw std::invalid_argument("Exp3: bad rates");
}

std::vector<double> Exp3::weights() const {
    const double m = *std::max_element(estimates_.begin(), estimates_.end());
    std::vector<double> w(estimates_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(eta_ * (estimates_[i] - m));
    return w;
}

std::vector<double> Exp3::probs() const {
    std::vector<double> p = weights();
    double sum = 0.0;
    for (double w : p) sum += w;
    const double n = static_cast<double>(p.size());
    for (double& w : p) w = (1.0 - mix_) * (w / sum) + mix_ / n;
    return p;
}

std::size_t Exp3::sample(RngStream& rng) const {
    const std::vector<double> p = probs();
    double u = rng.uniform01();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        u -= p[i];
        if (u < 0.0) return i;
    }
    return p.size() - 1;
}

void Exp3::update(std::size_t arm, double reward01) {
    if (arm >= estimates_.size()) throw std::invalid_argument("Exp3: arm out of range");
    if (reward01 < 0.0 || reward01 > 1.0)
        throw std::invalid_argument("Exp3: reward must be normalized into [0,1]");
    const double p = probs()[arm];
    estimates_[arm] += reward01 / p;
    ++plays_;
}

double BobRunner::discount_for_window(std::uint64_t window, std::uint64_t T) {
    const double rate = std::log(static_cast<double>(T)) / static_cast<double>(window);
    // Windows shorter than log T would need gamma <= 0; clamp to a nearly
    // memoryless discount.
    return std::clamp(1.0 - rate, 1e-4, 1.0 - 1e-9);
}

BobRunner::BobRunner(const BobConfig& config, std::uint64_t seed)
    : config_(config),
      grid_(tuning::bob_grid(config.d, config.T)),
      exp3_(grid_.J.size(), (config.T + grid_.H - 1) / grid_.H),
      meta_rng_(mix_seed(seed, "exp3")),
      seed_(seed) {
    if (!is_discounted(config.base_kind) && !is_randomized_ucb(config.base_kind) &&
        !is_thompson(config.base_kind))
        throw ConfigError("BobRunner: unsupported base kind");
    start_block();
}

void BobRunner::start_block() {
    ++block_;
    round_in_block_ = 0;
    block_reward_ = 0.0;
    choice_ = exp3_.sample(meta_rng_);

    PolicyConfig cfg;
    cfg.kind = config_.base_kind;
    cfg.d = config_.d;
    cfg.lambda = config_.lambda;
    cfg.a = config_.a;
    cfg.delta = config_.delta;
    cfg.confidence = config_.confidence;
    cfg.gamma = is_discounted(config_.base_kind)
                    ? discount_for_window(grid_.J[choice_], config_.T)
                    : 1.0;
    base_ = std::make_unique<Policy>(cfg, mix_seed(seed_, "block", block_));
}

std::size_t BobRunner::select(const std::vector<Vec>& actions) { return base_->select(actions); }

void BobRunner::update(const Vec& action, double reward, bool change_point) {
    base_->update(action, reward, change_point);
    const double hi = 1.0 + 4.0 * config_.noise_sd;
    block_reward_ += std::clamp(reward, -hi, hi);
    ++round_in_block_;
    ++round_;

    const bool block_done = round_in_block_ == grid_.H;
    const bool horizon_done = round_ == config_.T;
    if (block_done || horizon_done) {
        const double mean = block_reward_ / static_cast<double>(round_in_block_);
        const double normalized = std::clamp((mean + hi) / (2.0 * hi), 0.0, 1.0);
        exp3_.update(choice_, normalized);
        if (!horizon_done) start_block();
    }
}

}  // namespace nslb
