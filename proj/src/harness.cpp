#include "nslb/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nslb/errors.hpp"
#include "nslb/meta.hpp"
#include "nslb/tuning.hpp"

namespace nslb {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Config validation
// ---------------------------------------------------------------------------

void ExperimentConfig::validate() const {
    if (d < 1 || k < 1 || t < 1) throw ConfigError("config: d, k, t must be >= 1");
    if (sigma < 0.0) throw ConfigError("config: sigma must be nonnegative");
    if (!(lambda >= 1.0)) throw ConfigError("config: lambda must be >= 1");
    if (replications < 1) throw ConfigError("config: replications must be >= 1");
    if (drift.d != d) throw ConfigError("config: drift dimension disagrees with d");
    if (algorithms.empty()) throw ConfigError("config: no algorithms");
    std::set<std::string> names;
    for (const auto& alg : algorithms) {
        if (alg.name.empty() || alg.name.find(',') != std::string::npos)
            throw ConfigError("config: algorithm names must be nonempty and comma-free");
        if (!names.insert(alg.name).second)
            throw ConfigError("config: duplicate algorithm name " + alg.name);
        if (!(alg.lambda >= 1.0)) throw ConfigError(alg.name + ": lambda must be >= 1");
        if (alg.a < 0.0) throw ConfigError(alg.name + ": a must be nonnegative");
        if (!(alg.delta > 0.0 && alg.delta < 1.0)) throw ConfigError(alg.name + ": delta in (0,1)");
        if (alg.gamma) {
            if (is_discounted(alg.kind) && !(*alg.gamma > 0.0 && *alg.gamma < 1.0))
                throw ConfigError(alg.name + ": discounted kind requires gamma in (0,1)");
            if (!is_discounted(alg.kind) && *alg.gamma != 1.0)
                throw ConfigError(alg.name + ": stationary kind requires gamma = 1");
        }
        if (is_randomized_ucb(alg.kind)) alg.confidence.validate();
        if (alg.bob && !is_discounted(alg.kind))
            throw ConfigError(alg.name + ": bob wraps discounted kinds only");
    }
    if (const auto* csv = std::get_if<CsvPoolArms>(&feature_source))
        if (csv->pool0.empty() || csv->pool1.empty())
            throw ConfigError("config: csv feature pools are empty");
}

// ---------------------------------------------------------------------------
// JSON mapping
// ---------------------------------------------------------------------------

namespace {

DriftSpec drift_from_json(const json& j, std::size_t d) {
    DriftSpec spec;
    spec.d = d;
    const std::string kind = j.value("kind", "stationary");
    if (kind == "stationary") {
        spec.kind = Stationary{};
    } else if (kind == "abrupt_sign_flip") {
        AbruptSignFlip f;
        f.change_round = j.at("change_round").get<std::uint64_t>();
        f.flip_fraction = j.value("flip_fraction", 0.6);
        spec.kind = f;
    } else if (kind == "piecewise") {
        PiecewiseList p;
        for (const auto& seg : j.at("segments"))
            p.segments.emplace_back(seg.at("round").get<std::uint64_t>(),
                                    seg.at("theta").get<Vec>());
        spec.kind = p;
    } else if (kind == "smooth") {
        SmoothDrift s;
        s.rate = j.at("rate").get<double>();
        spec.kind = s;
    } else {
        throw ConfigError("config: unknown drift kind " + kind);
    }
    return spec;
}

json drift_to_json(const DriftSpec& spec) {
    json j;
    if (std::holds_alternative<Stationary>(spec.kind)) {
        j["kind"] = "stationary";
    } else if (const auto* f = std::get_if<AbruptSignFlip>(&spec.kind)) {
        j["kind"] = "abrupt_sign_flip";
        j["change_round"] = f->change_round;
        j["flip_fraction"] = f->flip_fraction;
    } else if (const auto* p = std::get_if<PiecewiseList>(&spec.kind)) {
        j["kind"] = "piecewise";
        j["segments"] = json::array();
        for (const auto& [round, theta] : p->segments)
            j["segments"].push_back({{"round", round}, {"theta", theta}});
    } else {
        j["kind"] = "smooth";
        j["rate"] = std::get<SmoothDrift>(spec.kind).rate;
    }
    return j;
}

ArmModel feature_source_from_json(const json& j, std::size_t d, std::size_t k) {
    const std::string kind = j.value("kind", "synthetic");
    if (kind == "csv") {
        auto [p0, p1] = load_features_csv(j.at("path").get<std::string>(), d, k);
        return CsvPoolArms{std::move(p0), std::move(p1)};
    }
    if (kind != "synthetic") throw ConfigError("config: unknown feature source " + kind);
    const std::string arm_model = j.value("arm_model", "uniform_ball");
    if (arm_model == "uniform_ball") return UniformBallArms{};
    if (arm_model == "two_pool") {
        TwoPoolArms tp;
        tp.pool_size = j.value("pool_size", tp.pool_size);
        tp.mean_shift = j.value("mean_shift", tp.mean_shift);
        tp.n_clusters = j.value("n_clusters", tp.n_clusters);
        tp.cluster_spread = j.value("cluster_spread", tp.cluster_spread);
        return tp;
    }
    throw ConfigError("config: unknown arm model " + arm_model);
}

json feature_source_to_json(const ArmModel& arms) {
    json j;
    if (std::holds_alternative<UniformBallArms>(arms)) {
        j["kind"] = "synthetic";
        j["arm_model"] = "uniform_ball";
    } else if (const auto* tp = std::get_if<TwoPoolArms>(&arms)) {
        j["kind"] = "synthetic";
        j["arm_model"] = "two_pool";
        j["pool_size"] = tp->pool_size;
        j["mean_shift"] = tp->mean_shift;
        j["n_clusters"] = tp->n_clusters;
        j["cluster_spread"] = tp->cluster_spread;
    } else {
        j["kind"] = "csv";
        j["path"] = "";  // pools already materialized; path not retained
    }
    return j;
}

RandomConfidenceSpec confidence_from_json(const json& j) {
    RandomConfidenceSpec spec;
    const std::string family = j.value("family", "truncated_gaussian_nonneg");
    if (family == "gaussian")
        spec.family = RandomConfidenceSpec::Family::Gaussian;
    else if (family == "truncated_gaussian_nonneg")
        spec.family = RandomConfidenceSpec::Family::TruncatedGaussianNonneg;
    else
        throw ConfigError("config: unknown confidence family " + family);
    spec.mean = j.value("mean", 0.0);
    spec.sd = j.value("sd", 0.4);
    return spec;
}

json confidence_to_json(const RandomConfidenceSpec& spec) {
    return {{"family", spec.family == RandomConfidenceSpec::Family::Gaussian
                           ? "gaussian"
                           : "truncated_gaussian_nonneg"},
            {"mean", spec.mean},
            {"sd", spec.sd}};
}

AlgorithmSpec algorithm_from_json(const json& j) {
    AlgorithmSpec alg;
    alg.kind = kind_from_name(j.at("kind").get<std::string>());
    alg.name = j.value("name", std::string(kind_name(alg.kind)));
    alg.lambda = j.value("lambda", 1.0);
    if (j.contains("gamma") && !j["gamma"].is_string())
        alg.gamma = j["gamma"].get<double>();
    else if (j.contains("gamma") && j["gamma"].get<std::string>() != "auto")
        throw ConfigError(alg.name + ": gamma must be a number or \"auto\"");
    if (!is_discounted(alg.kind)) alg.gamma = 1.0;
    if (j.contains("a")) {
        if (j["a"].is_number()) {
            alg.scale_rule = ScaleRule::Fixed;
            alg.a = j["a"].get<double>();
        } else {
            const std::string rule = j["a"].get<std::string>();
            if (rule == "theory")
                alg.scale_rule = ScaleRule::Theory;
            else if (rule == "theory_noise")
                alg.scale_rule = ScaleRule::TheoryNoise;
            else
                throw ConfigError(alg.name + ": a must be a number, \"theory\" or \"theory_noise\"");
        }
    }
    alg.delta = j.value("delta", 0.05);
    if (j.contains("confidence")) alg.confidence = confidence_from_json(j["confidence"]);
    alg.bob = j.value("bob", false);
    return alg;
}

json algorithm_to_json(const AlgorithmSpec& alg) {
    json j;
    j["name"] = alg.name;
    j["kind"] = kind_name(alg.kind);
    j["lambda"] = alg.lambda;
    if (alg.gamma)
        j["gamma"] = *alg.gamma;
    else
        j["gamma"] = "auto";
    switch (alg.scale_rule) {
        case ScaleRule::Fixed: j["a"] = alg.a; break;
        case ScaleRule::Theory: j["a"] = "theory"; break;
        case ScaleRule::TheoryNoise: j["a"] = "theory_noise"; break;
    }
    j["delta"] = alg.delta;
    if (is_randomized_ucb(alg.kind)) j["confidence"] = confidence_to_json(alg.confidence);
    j["bob"] = alg.bob;
    return j;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid json: ") + e.what());
    }
    try {
        ExperimentConfig cfg;
        cfg.d = j.at("d").get<std::size_t>();
        cfg.k = j.at("k").get<std::size_t>();
        cfg.t = j.at("t").get<std::uint64_t>();
        cfg.sigma = j.value("sigma", cfg.sigma);
        cfg.lambda = j.value("lambda", 1.0);
        cfg.drift = drift_from_json(j.value("drift", json{{"kind", "stationary"}}), cfg.d);
        cfg.feature_source = feature_source_from_json(
            j.value("feature_source", json{{"kind", "synthetic"}}), cfg.d, cfg.k);
        for (const auto& alg : j.at("algorithms")) cfg.algorithms.push_back(algorithm_from_json(alg));
        cfg.replications = j.value("replications", cfg.replications);
        cfg.master_seed = j.value("master_seed", cfg.master_seed);
        cfg.output_path = j.value("output_path", cfg.output_path);
        cfg.redraw_drift_per_rep = j.value("redraw_drift_per_rep", true);
        cfg.threads = j.value("threads", 0u);
        cfg.validate();
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
    json j;
    j["d"] = d;
    j["k"] = k;
    j["t"] = t;
    j["sigma"] = sigma;
    j["lambda"] = lambda;
    j["drift"] = drift_to_json(drift);
    j["feature_source"] = feature_source_to_json(feature_source);
    j["algorithms"] = json::array();
    for (const auto& alg : algorithms) j["algorithms"].push_back(algorithm_to_json(alg));
    j["replications"] = replications;
    j["master_seed"] = master_seed;
    j["output_path"] = output_path;
    j["redraw_drift_per_rep"] = redraw_drift_per_rep;
    j["threads"] = threads;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Experiment execution
// ---------------------------------------------------------------------------

namespace {

// Stationary limit gamma -> 1 of tuning::c1's log term.
double c1_stationary(double lambda, std::size_t d, double T) {
    const double dd = static_cast<double>(d);
    return std::sqrt(2.0 * std::log(T) + dd * std::log1p((T - 1.0) / (lambda * dd))) +
           std::sqrt(lambda);
}

double resolve_scale(const AlgorithmSpec& alg, std::size_t d, std::uint64_t T, double gamma,
                     double sigma) {
    if (alg.scale_rule == ScaleRule::Fixed) return alg.a;
    const double Td = static_cast<double>(T);
    const double c1 = gamma < 1.0 ? tuning::c1(alg.lambda, d, gamma, Td)
                                  : c1_stationary(alg.lambda, d, Td);
    if (alg.scale_rule == ScaleRule::Theory)
        return is_thompson(alg.kind) ? tuning::a_theory(c1) : c1;
    // TheoryNoise: the sqrt(2 log ...) part of the radius scales with the
    // noise sub-Gaussian constant; lambda's contribution does not.
    const double rt = std::sqrt(alg.lambda);
    const double radius = sigma * (c1 - rt) + rt;
    return is_thompson(alg.kind) ? std::sqrt(14.0) * radius : radius;
}

double resolve_gamma(const AlgorithmSpec& alg, const ExperimentConfig& cfg,
                     const EnvironmentTrace& trace) {
    if (!is_discounted(alg.kind)) return 1.0;
    if (alg.gamma) return *alg.gamma;
    const auto branch = alg.kind == PolicyKind::DLinTs ? tuning::Algorithm::DLinTs
                                                       : tuning::Algorithm::DRandLinUcb;
    // A (near-)stationary trace degenerates the closed form; fall back to a
    // unit-drift-per-horizon budget.
    const double bt = std::max(trace.total_variation, 1.0 / static_cast<double>(cfg.t));
    return tuning::optimal_gamma(cfg.d, bt, static_cast<double>(cfg.t), cfg.k, branch).gamma;
}

struct Agent {
    virtual ~Agent() = default;
    virtual std::size_t select(const std::vector<Vec>& actions) = 0;
    virtual void update(const Vec& action, double reward, bool change_point) = 0;
};

struct PolicyAgent final : Agent {
    Policy policy;
    PolicyAgent(const PolicyConfig& cfg, std::uint64_t seed) : policy(cfg, seed) {}
    std::size_t select(const std::vector<Vec>& actions) override { return policy.select(actions); }
    void update(const Vec& action, double reward, bool change_point) override {
        policy.update(action, reward, change_point);
    }
};

struct BobAgent final : Agent {
    BobRunner runner;
    BobAgent(const BobConfig& cfg, std::uint64_t seed) : runner(cfg, seed) {}
    std::size_t select(const std::vector<Vec>& actions) override { return runner.select(actions); }
    void update(const Vec& action, double reward, bool change_point) override {
        runner.update(action, reward, change_point);
    }
};

std::unique_ptr<Agent> make_agent(const AlgorithmSpec& alg, const ExperimentConfig& cfg,
                                  const EnvironmentTrace& trace, std::uint64_t seed) {
    if (alg.bob) {
        BobConfig bc;
        bc.d = cfg.d;
        bc.T = cfg.t;
        bc.base_kind = alg.kind;
        bc.lambda = alg.lambda;
        bc.a = alg.a;  // fixed scale; theory rules need a resolved gamma per block
        bc.delta = alg.delta;
        bc.confidence = alg.confidence;
        bc.noise_sd = cfg.sigma;
        return std::make_unique<BobAgent>(bc, seed);
    }
    PolicyConfig pc;
    pc.kind = alg.kind;
    pc.d = cfg.d;
    pc.lambda = alg.lambda;
    pc.gamma = resolve_gamma(alg, cfg, trace);
    pc.a = resolve_scale(alg, cfg.d, cfg.t, pc.gamma, cfg.sigma);
    pc.delta = alg.delta;
    pc.confidence = alg.confidence;
    pc.validate();
    return std::make_unique<PolicyAgent>(pc, seed);
}

void run_replication(const ExperimentConfig& cfg, std::uint64_t rep, RunResults& results) {
    const std::uint64_t theta_seed =
        mix_seed(cfg.master_seed, "theta", cfg.redraw_drift_per_rep ? rep : 0);
    const std::uint64_t arm_seed = mix_seed(cfg.master_seed, "arms", rep);
    const EnvironmentTrace trace = generate_trace_split(cfg.drift, cfg.feature_source, cfg.t,
                                                        cfg.k, cfg.sigma, theta_seed, arm_seed);

    std::vector<double> best_values(cfg.t);
    for (std::uint64_t t = 1; t <= cfg.t; ++t) best_values[t - 1] = best_action(trace, t).second;

    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        const AlgorithmSpec& alg = cfg.algorithms[a];
        auto agent = make_agent(alg, cfg, trace,
                                mix_seed(cfg.master_seed, "policy", alg.name, rep));
        RngStream noise(mix_seed(cfg.master_seed, "noise", alg.name, rep));

        RegretSeries& out = results.series[a * cfg.replications + rep];
        out.algorithm = alg.name;
        out.replication = rep;
        out.inst.resize(cfg.t);
        out.cum.resize(cfg.t);
        double cum = 0.0;
        for (std::uint64_t t = 1; t <= cfg.t; ++t) {
            const auto& actions = trace.actions(t);
            const std::size_t pick = agent->select(actions);
            const double y = reward(trace, t, actions[pick], noise);
            const double inst = best_values[t - 1] - dot(actions[pick], trace.theta(t));
            cum += inst;
            out.inst[t - 1] = inst;
            out.cum[t - 1] = cum;
            agent->update(actions[pick], y, trace.change_at(t));
        }
    }
}

}  // namespace

RunResults run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    RunResults results;
    results.replications = cfg.replications;
    results.horizon = cfg.t;
    for (const auto& alg : cfg.algorithms) results.algorithm_names.push_back(alg.name);
    results.series.resize(cfg.algorithms.size() * cfg.replications);

    unsigned n_threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    n_threads = std::max(1u, std::min<unsigned>(n_threads, cfg.replications));

    if (n_threads == 1) {
        for (std::uint64_t rep = 0; rep < cfg.replications; ++rep)
            run_replication(cfg, rep, results);
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t rep = next.fetch_add(1);
            if (rep >= cfg.replications) return;
            try {
                run_replication(cfg, rep, results);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

// ---------------------------------------------------------------------------
// Summaries and CSV
// ---------------------------------------------------------------------------

namespace {

std::pair<double, double> mean_se(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

double RunResults::final_mean(std::size_t alg) const {
    std::vector<double> finals;
    for (std::uint64_t r = 0; r < replications; ++r) finals.push_back(at(alg, r).cum.back());
    return mean_se(finals).first;
}

double RunResults::final_se(std::size_t alg) const {
    std::vector<double> finals;
    for (std::uint64_t r = 0; r < replications; ++r) finals.push_back(at(alg, r).cum.back());
    return mean_se(finals).second;
}

std::vector<SummaryRow> summarize(const RunResults& results) {
    if (results.series.empty()) throw std::invalid_argument("summarize: no records");
    std::vector<SummaryRow> rows;
    rows.reserve(results.algorithm_names.size() * results.horizon);
    std::vector<double> cum(results.replications);
    for (std::size_t a = 0; a < results.algorithm_names.size(); ++a)
        for (std::uint64_t t = 1; t <= results.horizon; ++t) {
            for (std::uint64_t r = 0; r < results.replications; ++r)
                cum[r] = results.at(a, r).cum[t - 1];
            const auto [mean, se] = mean_se(cum);
            rows.push_back({results.algorithm_names[a], t, mean, se});
        }
    return rows;
}

namespace {

void append_double(std::string& buf, double v) {
    char tmp[32];
    std::snprintf(tmp, sizeof tmp, "%.10g", v);
    buf += tmp;
}

}  // namespace

void write_trace_csv(const RunResults& results, std::ostream& out) {
    std::string buf;
    buf.reserve(1 << 20);
    buf += "algorithm,replication,t,inst_regret,cum_regret\n";
    for (std::size_t a = 0; a < results.algorithm_names.size(); ++a)
        for (std::uint64_t r = 0; r < results.replications; ++r) {
            const RegretSeries& s = results.at(a, r);
            for (std::uint64_t t = 1; t <= results.horizon; ++t) {
                buf += s.algorithm;
                buf += ',';
                buf += std::to_string(r);
                buf += ',';
                buf += std::to_string(t);
                buf += ',';
                append_double(buf, s.inst[t - 1]);
                buf += ',';
                append_double(buf, s.cum[t - 1]);
                buf += '\n';
                if (buf.size() > (1 << 20)) {
                    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
                    buf.clear();
                }
            }
        }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_trace_csv(const RunResults& results, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_trace_csv(results, out);
}

RunResults read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("algorithm,replication,t", 0) != 0)
        throw ParseError("trace csv: missing header", 1);

    std::map<std::string, std::size_t> alg_index;
    RunResults results;
    std::vector<std::map<std::uint64_t, RegretSeries>> by_alg;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string alg, rep_s, t_s, inst_s, cum_s;
        if (!std::getline(ss, alg, ',') || !std::getline(ss, rep_s, ',') ||
            !std::getline(ss, t_s, ',') || !std::getline(ss, inst_s, ',') ||
            !std::getline(ss, cum_s))
            throw ParseError("trace csv: expected 5 fields", line_no);
        try {
            const auto rep = static_cast<std::uint64_t>(std::stoull(rep_s));
            const auto t = static_cast<std::uint64_t>(std::stoull(t_s));
            auto [it, inserted] = alg_index.try_emplace(alg, by_alg.size());
            if (inserted) {
                by_alg.emplace_back();
                results.algorithm_names.push_back(alg);
            }
            RegretSeries& s = by_alg[it->second][rep];
            s.algorithm = alg;
            s.replication = rep;
            if (s.inst.size() < t) {
                s.inst.resize(t);
                s.cum.resize(t);
            }
            s.inst[t - 1] = std::stod(inst_s);
            s.cum[t - 1] = std::stod(cum_s);
            results.horizon = std::max(results.horizon, t);
        } catch (const std::exception&) {
            throw ParseError("trace csv: bad row", line_no);
        }
    }
    if (by_alg.empty()) throw ParseError("trace csv: no records", line_no);
    results.replications = by_alg[0].size();
    for (auto& reps : by_alg) {
        if (reps.size() != results.replications)
            throw ParseError("trace csv: ragged replication counts", line_no);
        for (auto& [rep, series] : reps) results.series.push_back(std::move(series));
    }
    return results;
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    std::string buf = "algorithm,t,mean_cum_regret,se_cum_regret\n";
    for (const auto& row : rows) {
        buf += row.algorithm;
        buf += ',';
        buf += std::to_string(row.t);
        buf += ',';
        append_double(buf, row.mean_cum_regret);
        buf += ',';
        append_double(buf, row.se_cum_regret);
        buf += '\n';
        if (buf.size() > (1 << 20)) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_summary_csv(rows, out);
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

namespace {

AlgorithmSpec make_alg(const std::string& name, PolicyKind kind) {
    AlgorithmSpec alg;
    alg.name = name;
    alg.kind = kind;
    if (!is_discounted(kind)) alg.gamma = 1.0;
    return alg;
}

// The benchmark roster of the reproduction runs: the three discounted
// policies plus the stationary and oracle-restart Thompson baselines.
std::vector<AlgorithmSpec> paper_roster() {
    std::vector<AlgorithmSpec> algs;

    AlgorithmSpec ducb = make_alg("d_lin_ucb", PolicyKind::DLinUcb);
    ducb.scale_rule = ScaleRule::TheoryNoise;  // noise-calibrated radius, delta = 0.05
    algs.push_back(ducb);

    AlgorithmSpec drand = make_alg("d_rand_lin_ucb", PolicyKind::DRandLinUcb);
    drand.confidence = {RandomConfidenceSpec::Family::TruncatedGaussianNonneg, 0.0, 0.4};
    algs.push_back(drand);

    AlgorithmSpec dts = make_alg("d_lin_ts", PolicyKind::DLinTs);
    dts.a = 1.0;  // non-inflated
    algs.push_back(dts);

    AlgorithmSpec ts = make_alg("lin_ts", PolicyKind::GaussianLinTs);
    ts.a = 1.0;
    algs.push_back(ts);

    AlgorithmSpec tsor = make_alg("lin_ts_oracle_restart", PolicyKind::LinTsOracleRestart);
    tsor.a = 1.0;
    algs.push_back(tsor);

    return algs;
}

ExperimentConfig paper_config(std::size_t d, std::size_t k) {
    ExperimentConfig cfg;
    cfg.d = d;
    cfg.k = k;
    cfg.t = 10000;
    cfg.sigma = std::sqrt(0.15);
    cfg.lambda = 1.0;
    cfg.drift.d = d;
    cfg.drift.kind = AbruptSignFlip{4000, 0.6};
    cfg.feature_source = TwoPoolArms{};
    cfg.algorithms = paper_roster();
    cfg.replications = 20;
    cfg.master_seed = 1;
    return cfg;
}

std::vector<Preset> build_presets() {
    std::vector<Preset> out;

    {
        ExperimentConfig cfg = paper_config(5, 10);
        cfg.t = 400;
        cfg.drift.kind = AbruptSignFlip{200, 0.6};
        cfg.replications = 4;
        out.push_back({"quick", "small smoke run: d=5, K=10, T=400, 4 replications", cfg});
    }
    for (std::size_t d : {10, 20, 50})
        for (std::size_t k : {10, 100}) {
            std::string name =
                "paper-abrupt-d" + std::to_string(d) + "-k" + std::to_string(k);
            out.push_back({name,
                           "abrupt sign flip at t=4000 (60% of coordinates), T=10000, "
                           "sigma^2=0.15, two-pool arms, 20 replications",
                           paper_config(d, k)});
        }
    {
        ExperimentConfig cfg = paper_config(10, 10);
        cfg.replications = 10;
        AlgorithmSpec bob_rand = make_alg("bob_d_rand_lin_ucb", PolicyKind::DRandLinUcb);
        bob_rand.confidence = {RandomConfidenceSpec::Family::TruncatedGaussianNonneg, 0.0, 0.4};
        bob_rand.bob = true;
        AlgorithmSpec bob_ts = make_alg("bob_d_lin_ts", PolicyKind::DLinTs);
        bob_ts.bob = true;
        cfg.algorithms = {bob_rand, bob_ts, make_alg("lin_ts", PolicyKind::GaussianLinTs)};
        out.push_back({"bob-abrupt-d10-k10",
                       "bandits-over-bandits (unknown drift) vs stationary Thompson baseline",
                       cfg});
    }
    {
        ExperimentConfig cfg;
        cfg.d = 5;
        cfg.k = 10;
        cfg.t = 2000;
        cfg.sigma = std::sqrt(0.15);
        cfg.drift.d = 5;
        cfg.drift.kind = Stationary{};
        cfg.feature_source = UniformBallArms{};
        AlgorithmSpec ucb = make_alg("lin_ucb", PolicyKind::LinUcb);
        ucb.scale_rule = ScaleRule::TheoryNoise;
        AlgorithmSpec rand_ucb = make_alg("rand_lin_ucb", PolicyKind::RandLinUcb);
        rand_ucb.confidence = {RandomConfidenceSpec::Family::TruncatedGaussianNonneg, 0.0, 0.4};
        AlgorithmSpec ts = make_alg("gaussian_lin_ts", PolicyKind::GaussianLinTs);
        cfg.algorithms = {ucb, rand_ucb, ts};
        cfg.replications = 10;
        out.push_back({"stationary-d5-k10", "stationary baselines: LinUCB vs RandLinUCB vs "
                                            "Gaussian LinTS, T=2000",
                       cfg});
    }
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset& preset_by_name(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p;
    throw ConfigError("unknown preset: " + name);
}

}  // namespace nslb
