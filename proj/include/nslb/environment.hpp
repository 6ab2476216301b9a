#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nslb/numerics.hpp"
#include "nslb/rng.hpp"

namespace nslb {

// ---------------------------------------------------------------------------
// Drift rules for the time-varying parameter
// ---------------------------------------------------------------------------

struct Stationary {};

// Sign of a fixed fraction of coordinates flips once; the new parameter is in
// force from change_round on, and change_flags[change_round] is set.
struct AbruptSignFlip {
    std::uint64_t change_round = 1;
    double flip_fraction = 0.6;
};

// Explicit (round, parameter) segments; each parameter is in force from its
// round on. The first segment must start at round 1.
struct PiecewiseList {
    std::vector<std::pair<std::uint64_t, Vec>> segments;
};

// Random walk on the unit sphere with per-round step size ~ rate.
struct SmoothDrift {
    double rate = 1e-3;
};

struct DriftSpec {
    std::size_t d = 1;
    std::variant<Stationary, AbruptSignFlip, PiecewiseList, SmoothDrift> kind = Stationary{};
};

// ---------------------------------------------------------------------------
// Arm models
// ---------------------------------------------------------------------------

// x = r * u with u uniform on the sphere and r uniform on [0,1].
struct UniformBallArms {};

// Two pools of mean-shifted features normalized into the unit ball; each
// round draws K arms equally from both pools (with replacement). With
// n_clusters > 0 each pool is a mixture around that many cluster centers
// with within-cluster scatter cluster_spread, mimicking the near-duplicate
// structure of one-hot categorical data after dimensionality reduction;
// n_clusters = 0 gives plain Gaussian scatter.
struct TwoPoolArms {
    std::size_t pool_size = 1000;
    double mean_shift = 0.3;
    std::size_t n_clusters = 0;
    double cluster_spread = 0.1;
};

// Preloaded pools (e.g. from load_features_csv), sampled like TwoPoolArms.
struct CsvPoolArms {
    std::vector<Vec> pool0;
    std::vector<Vec> pool1;
};

using ArmModel = std::variant<UniformBallArms, TwoPoolArms, CsvPoolArms>;

// ---------------------------------------------------------------------------

struct EnvironmentTrace {
    std::uint64_t T = 0;
    std::size_t d = 0;
    std::size_t K = 0;
    double noise_sd = 0.0;
    double total_variation = 0.0;               // B_T = sum_t ||theta_t - theta_{t+1}||
    std::vector<Vec> theta_seq;                 // index t-1 holds theta*_t
    std::vector<std::vector<Vec>> action_sets;  // index t-1 holds round t's K arms
    std::vector<char> change_flags;             // index t-1: parameter changed at round t

    const Vec& theta(std::uint64_t t) const { return theta_seq[t - 1]; }
    const std::vector<Vec>& actions(std::uint64_t t) const { return action_sets[t - 1]; }
    bool change_at(std::uint64_t t) const { return change_flags[t - 1] != 0; }
};

EnvironmentTrace generate_trace(const DriftSpec& drift, const ArmModel& arms, std::uint64_t T,
                                std::size_t K, double noise_sd, std::uint64_t seed);

// Split-seed variant: the parameter path and the action sets come from
// independent streams, so replications can share a drift while redrawing arms.
EnvironmentTrace generate_trace_split(const DriftSpec& drift, const ArmModel& arms,
                                      std::uint64_t T, std::size_t K, double noise_sd,
                                      std::uint64_t theta_seed, std::uint64_t arm_seed);

// <x, theta*_t> + N(0, noise_sd^2)
double reward(const EnvironmentTrace& trace, std::uint64_t t, const Vec& x, RngStream& rng);

// Exact argmax over round t's finite action set: (index, value).
std::pair<std::size_t, double> best_action(const EnvironmentTrace& trace, std::uint64_t t);

// Feature CSV: comma-separated, optional '#' comment/header lines, d real
// features plus a final {0,1} label per row. Rows are normalized into the
// unit ball (divide by max(1, ||x||)) and split into (label-0, label-1)
// pools. K is the per-round arm count the pools must be able to serve.
std::pair<std::vector<Vec>, std::vector<Vec>> load_features_csv(const std::string& path,
                                                                std::size_t d, std::size_t K);

}  // namespace nslb
