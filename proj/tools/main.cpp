// nslb command line: run experiments from a JSON config or a named preset,
// summarize trace CSVs, list presets.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime/numerical error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nslb/errors.hpp"
#include "nslb/harness.hpp"
#include "nslb/kernels.hpp"

namespace {

int do_run(const std::string& config_path, const std::string& preset_name,
           std::uint64_t* seed, std::uint64_t* reps, const std::string& out_dir,
           unsigned* threads) {
    nslb::ExperimentConfig cfg;
    if (!config_path.empty())
        cfg = nslb::ExperimentConfig::from_json_file(config_path);
    else
        cfg = nslb::preset_by_name(preset_name).config;
    if (seed) cfg.master_seed = *seed;
    if (reps) cfg.replications = *reps;
    if (threads) cfg.threads = *threads;
    if (!out_dir.empty()) cfg.output_path = out_dir;
    cfg.validate();

    std::filesystem::create_directories(cfg.output_path);
    const auto trace_path = std::filesystem::path(cfg.output_path) / "trace.csv";
    const auto summary_path = std::filesystem::path(cfg.output_path) / "summary.csv";

    std::cerr << "kernels: " << nslb::kernels::backend_name(nslb::kernels::active_backend())
              << "; algorithms: " << cfg.algorithms.size() << "; replications: "
              << cfg.replications << "; T: " << cfg.t << "\n";

    const nslb::RunResults results = nslb::run_experiment(cfg);
    nslb::write_trace_csv(results, trace_path.string());
    nslb::write_summary_csv(nslb::summarize(results), summary_path.string());

    std::printf("%-28s %14s %12s\n", "algorithm", "final regret", "se");
    for (std::size_t a = 0; a < results.algorithm_names.size(); ++a)
        std::printf("%-28s %14.2f %12.2f\n", results.algorithm_names[a].c_str(),
                    results.final_mean(a), results.final_se(a));
    std::cout << "wrote " << trace_path.string() << " and " << summary_path.string() << "\n";
    return 0;
}

int do_summarize(const std::string& in_path, const std::string& out_path) {
    const nslb::RunResults results = nslb::read_trace_csv(in_path);
    nslb::write_summary_csv(nslb::summarize(results), out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int do_presets_list() {
    for (const auto& p : nslb::presets())
        std::printf("%-24s %s\n", p.name.c_str(), p.description.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-stationary linear bandit simulation harness"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir, in_path, out_path = "summary.csv";
    std::uint64_t seed = 0, reps = 0;
    unsigned threads = 0;
    bool seed_set = false, reps_set = false, threads_set = false;

    auto* run = app.add_subcommand("run", "run an experiment and write trace/summary CSVs");
    auto* cfg_opt = run->add_option("--config", config_path, "experiment config (json)");
    auto* preset_opt = run->add_option("--preset", preset_name, "named preset (see `presets list`)");
    cfg_opt->excludes(preset_opt);
    run->add_option("--seed", seed, "override master seed")->each([&](const std::string&) { seed_set = true; });
    run->add_option("--reps", reps, "override replication count")->each([&](const std::string&) { reps_set = true; });
    run->add_option("--threads", threads, "worker threads (0 = hardware)")->each([&](const std::string&) { threads_set = true; });
    run->add_option("--out", out_dir, "output directory");

    auto* summ = app.add_subcommand("summarize", "aggregate a trace CSV into per-round means");
    summ->add_option("--in", in_path, "trace csv")->required();
    summ->add_option("--out", out_path, "summary csv output");

    auto* pre = app.add_subcommand("presets", "preset catalog");
    auto* pre_list = pre->add_subcommand("list", "list available presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            if (config_path.empty() && preset_name.empty())
                throw nslb::ConfigError("run: provide --config or --preset");
            return do_run(config_path, preset_name, seed_set ? &seed : nullptr,
                          reps_set ? &reps : nullptr, out_dir, threads_set ? &threads : nullptr);
        }
        if (summ->parsed()) return do_summarize(in_path, out_path);
        if (pre->parsed()) {
            if (pre->get_subcommands().empty() || pre_list->parsed()) return do_presets_list();
        }
        return 2;
    } catch (const nslb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
