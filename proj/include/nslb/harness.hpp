#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nslb/environment.hpp"
#include "nslb/policies.hpp"

namespace nslb {

// How an algorithm's confidence/perturbation scale is resolved per
// replication (it can depend on the trace's measured drift through gamma).
enum class ScaleRule {
    Fixed,        // use AlgorithmSpec::a as given
    Theory,       // UCB kinds: c1;  TS kinds: sqrt(14) * c1
    TheoryNoise,  // noise-calibrated radius sigma * (c1 - sqrt(lambda)) + sqrt(lambda)
};

struct AlgorithmSpec {
    std::string name;  // unique label; keys the RNG streams and the CSV rows
    PolicyKind kind = PolicyKind::DRandLinUcb;
    double lambda = 1.0;
    // nullopt = resolve from the trace's B_T via tuning::optimal_gamma
    // (stationary kinds always run gamma = 1).
    std::optional<double> gamma;
    ScaleRule scale_rule = ScaleRule::Fixed;
    double a = 1.0;
    double delta = 0.05;
    RandomConfidenceSpec confidence{};
    bool bob = false;  // wrap in the bandits-over-bandits meta layer
};

struct ExperimentConfig {
    std::size_t d = 10;
    std::size_t k = 10;
    std::uint64_t t = 1000;
    double sigma = 0.3872983346207417;  // noise sd, sqrt(0.15)
    double lambda = 1.0;
    DriftSpec drift{};
    ArmModel feature_source = UniformBallArms{};
    std::vector<AlgorithmSpec> algorithms;
    std::uint64_t replications = 20;
    std::uint64_t master_seed = 1;
    std::string output_path = "out";
    bool redraw_drift_per_rep = true;
    unsigned threads = 0;  // 0 = hardware concurrency

    void validate() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

// Results for one (algorithm, replication) leg over the full horizon.
struct RegretSeries {
    std::string algorithm;
    std::uint64_t replication = 0;
    std::vector<double> inst;  // index t-1
    std::vector<double> cum;   // running sums of inst
};

struct RunResults {
    std::vector<std::string> algorithm_names;
    std::uint64_t replications = 0;
    std::uint64_t horizon = 0;
    // series[alg_index * replications + rep]
    std::vector<RegretSeries> series;

    const RegretSeries& at(std::size_t alg, std::uint64_t rep) const {
        return series[alg * replications + rep];
    }
    double final_mean(std::size_t alg) const;
    double final_se(std::size_t alg) const;
};

// Runs every (algorithm, replication) leg. Within a replication all
// algorithms see the same trace; reward noise and policy randomness come from
// streams keyed by (master_seed, algorithm name, replication), so results do
// not depend on thread scheduling.
RunResults run_experiment(const ExperimentConfig& config);

struct SummaryRow {
    std::string algorithm;
    std::uint64_t t;
    double mean_cum_regret;
    double se_cum_regret;
};

// Per (algorithm, t): mean and standard error of cumulative regret over
// replications.
std::vector<SummaryRow> summarize(const RunResults& results);

// header: algorithm,replication,t,inst_regret,cum_regret  (10 significant
// digits, LF endings)
void write_trace_csv(const RunResults& results, std::ostream& out);
void write_trace_csv(const RunResults& results, const std::string& path);
RunResults read_trace_csv(const std::string& path);

// header: algorithm,t,mean_cum_regret,se_cum_regret
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path);

struct Preset {
    std::string name;
    std::string description;
    ExperimentConfig config;
};

const std::vector<Preset>& presets();
const Preset& preset_by_name(const std::string& name);

}  // namespace nslb
