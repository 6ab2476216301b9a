#include "nslb/environment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nslb {
namespace {

Vec unit_sphere(RngStream& rng, std::size_t d) {
    Vec v(d);
    double n = 0.0;
    do {
        for (auto& e : v) e = rng.normal();
        n = norm2(v);
    } while (n == 0.0);
    scale(1.0 / n, v);
    return v;
}

// Project into the closed unit ball; drift rules may step outside it.
void project_unit_ball(Vec& v) {
    const double n = norm2(v);
    if (n > 1.0) scale(1.0 / n, v);
}

std::vector<Vec> build_theta_seq(const DriftSpec& drift, std::uint64_t T, RngStream& rng,
                                 std::vector<char>& change_flags) {
    const std::size_t d = drift.d;
    std::vector<Vec> seq;
    seq.reserve(T);

    if (std::holds_alternative<Stationary>(drift.kind)) {
        Vec theta = unit_sphere(rng, d);
        seq.assign(T, theta);
    } else if (const auto* flip = std::get_if<AbruptSignFlip>(&drift.kind)) {
        if (flip->change_round < 1 || flip->change_round > T)
            throw std::invalid_argument("generate_trace: change round outside horizon");
        if (!(flip->flip_fraction >= 0.0 && flip->flip_fraction <= 1.0))
            throw std::invalid_argument("generate_trace: flip fraction outside [0,1]");
        Vec before = unit_sphere(rng, d);
        // The flipped coordinates are the first ceil(fraction * d) of a
        // seeded permutation.
        const auto n_flip = static_cast<std::size_t>(
            std::min<double>(static_cast<double>(d),
                             std::ceil(flip->flip_fraction * static_cast<double>(d))));
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = d; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
        Vec after = before;
        for (std::size_t i = 0; i < n_flip; ++i) after[perm[i]] = -after[perm[i]];
        for (std::uint64_t t = 1; t <= T; ++t)
            seq.push_back(t >= flip->change_round ? after : before);
        if (n_flip > 0 && flip->change_round > 1) change_flags[flip->change_round - 1] = 1;
    } else if (const auto* pw = std::get_if<PiecewiseList>(&drift.kind)) {
        if (pw->segments.empty() || pw->segments.front().first != 1)
            throw std::invalid_argument("generate_trace: piecewise drift must start at round 1");
        for (std::size_t i = 0; i < pw->segments.size(); ++i) {
            const auto& [round, theta] = pw->segments[i];
            if (theta.size() != d) throw DimensionMismatch("generate_trace: segment dimension");
            if (round > T) throw std::invalid_argument("generate_trace: segment round outside horizon");
            if (i > 0 && round <= pw->segments[i - 1].first)
                throw std::invalid_argument("generate_trace: segment rounds must increase");
        }
        std::size_t seg = 0;
        for (std::uint64_t t = 1; t <= T; ++t) {
            while (seg + 1 < pw->segments.size() && pw->segments[seg + 1].first <= t) {
                ++seg;
                change_flags[t - 1] = 1;
            }
            Vec theta = pw->segments[seg].second;
            project_unit_ball(theta);
            seq.push_back(std::move(theta));
        }
    } else {
        const auto& smooth = std::get<SmoothDrift>(drift.kind);
        if (smooth.rate < 0.0) throw std::invalid_argument("generate_trace: negative drift rate");
        Vec theta = unit_sphere(rng, d);
        for (std::uint64_t t = 1; t <= T; ++t) {
            seq.push_back(theta);
            Vec step = unit_sphere(rng, d);
            axpy(smooth.rate, step, theta);
            const double n = norm2(theta);
            if (n > 0.0) scale(1.0 / n, theta);
        }
    }
    return seq;
}

Vec sample_two_pool(const std::vector<Vec>& pool, RngStream& rng) {
    return pool[rng.uniform_index(pool.size())];
}

std::vector<std::vector<Vec>> build_action_sets(const ArmModel& arms, std::uint64_t T,
                                                std::size_t d, std::size_t K, RngStream& rng) {
    std::vector<std::vector<Vec>> sets(T);

    if (std::holds_alternative<UniformBallArms>(arms)) {
        for (auto& set : sets) {
            set.reserve(K);
            for (std::size_t k = 0; k < K; ++k) {
                Vec x = unit_sphere(rng, d);
                scale(rng.uniform01(), x);
                set.push_back(std::move(x));
            }
        }
        return sets;
    }

    // Pool-based models: build (or take) the two pools, then sample K arms
    // per round equally from each.
    std::vector<Vec> pool0, pool1;
    if (const auto* tp = std::get_if<TwoPoolArms>(&arms)) {
        if (tp->pool_size < 1) throw std::invalid_argument("generate_trace: empty arm pool");
        if (tp->cluster_spread < 0.0)
            throw std::invalid_argument("generate_trace: negative cluster spread");
        const Vec axis = unit_sphere(rng, d);
        const double sd = 1.0 / std::sqrt(static_cast<double>(d));
        auto make_pool = [&](double sign) {
            // cluster centers; a single "center" at the pool mean when the
            // pool is unclustered
            std::vector<Vec> centers(std::max<std::size_t>(1, tp->n_clusters),
                                     Vec(d, 0.0));
            for (auto& c : centers)
                for (std::size_t i = 0; i < d; ++i) {
                    c[i] = sign * tp->mean_shift * axis[i];
                    if (tp->n_clusters > 0) c[i] += sd * rng.normal();
                }
            const double jitter = tp->n_clusters > 0 ? tp->cluster_spread * sd : sd;
            std::vector<Vec> pool(tp->pool_size);
            for (auto& x : pool) {
                const Vec& c = centers[tp->n_clusters > 0
                                           ? rng.uniform_index(centers.size())
                                           : 0];
                x.resize(d);
                for (std::size_t i = 0; i < d; ++i) x[i] = c[i] + jitter * rng.normal();
                const double n = norm2(x);
                if (n > 1.0) scale(1.0 / n, x);
            }
            return pool;
        };
        pool0 = make_pool(+1.0);
        pool1 = make_pool(-1.0);
    } else {
        const auto& csv = std::get<CsvPoolArms>(arms);
        pool0 = csv.pool0;
        pool1 = csv.pool1;
        if (pool0.empty() || pool1.empty())
            throw std::invalid_argument("generate_trace: csv arm pools must be nonempty");
    }

    const std::size_t half = K / 2;
    for (auto& set : sets) {
        set.reserve(K);
        for (std::size_t k = 0; k < half; ++k) set.push_back(sample_two_pool(pool0, rng));
        for (std::size_t k = half; k < K; ++k) set.push_back(sample_two_pool(pool1, rng));
    }
    return sets;
}

}  // namespace

EnvironmentTrace generate_trace_split(const DriftSpec& drift, const ArmModel& arms,
                                      std::uint64_t T, std::size_t K, double noise_sd,
                                      std::uint64_t theta_seed, std::uint64_t arm_seed) {
    if (T < 1) throw std::invalid_argument("generate_trace: T must be >= 1");
    if (K < 1) throw std::invalid_argument("generate_trace: K must be >= 1");
    if (drift.d < 1) throw std::invalid_argument("generate_trace: d must be >= 1");
    if (noise_sd < 0.0) throw std::invalid_argument("generate_trace: negative noise sd");

    EnvironmentTrace trace;
    trace.T = T;
    trace.d = drift.d;
    trace.K = K;
    trace.noise_sd = noise_sd;
    trace.change_flags.assign(T, 0);

    RngStream theta_rng(theta_seed);
    trace.theta_seq = build_theta_seq(drift, T, theta_rng, trace.change_flags);

    RngStream arm_rng(arm_seed);
    trace.action_sets = build_action_sets(arms, T, drift.d, K, arm_rng);

    double bt = 0.0;
    for (std::uint64_t t = 0; t + 1 < T; ++t) {
        Vec diff = trace.theta_seq[t + 1];
        axpy(-1.0, trace.theta_seq[t], diff);
        bt += norm2(diff);
    }
    trace.total_variation = bt;
    return trace;
}

EnvironmentTrace generate_trace(const DriftSpec& drift, const ArmModel& arms, std::uint64_t T,
                                std::size_t K, double noise_sd, std::uint64_t seed) {
    return generate_trace_split(drift, arms, T, K, noise_sd, mix_seed(seed, "theta"),
                                mix_seed(seed, "arms"));
}

double reward(const EnvironmentTrace& trace, std::uint64_t t, const Vec& x, RngStream& rng) {
    if (t < 1 || t > trace.T) throw std::invalid_argument("reward: round outside horizon");
    const double mean = dot(x, trace.theta(t));
    return trace.noise_sd == 0.0 ? mean : mean + trace.noise_sd * rng.normal();
}

std::pair<std::size_t, double> best_action(const EnvironmentTrace& trace, std::uint64_t t) {
    if (t < 1 || t > trace.T) throw std::invalid_argument("best_action: round outside horizon");
    const auto& set = trace.actions(t);
    const Vec& theta = trace.theta(t);
    std::size_t best = 0;
    double best_value = dot(set[0], theta);
    for (std::size_t i = 1; i < set.size(); ++i) {
        const double v = dot(set[i], theta);
        if (v > best_value) {
            best = i;
            best_value = v;
        }
    }
    return {best, best_value};
}

std::pair<std::vector<Vec>, std::vector<Vec>> load_features_csv(const std::string& path,
                                                                std::size_t d, std::size_t K) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open feature csv: " + path, 0);
    std::vector<Vec> pools[2];
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string field;
        Vec x;
        x.reserve(d);
        long label = -1;
        std::size_t col = 0;
        while (std::getline(ss, field, ',')) {
            ++col;
            std::size_t pos = 0;
            double v;
            try {
                v = std::stod(field, &pos);
            } catch (const std::exception&) {
                throw ParseError("feature csv: bad number '" + field + "'", line_no);
            }
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
            if (pos != field.size())
                throw ParseError("feature csv: trailing characters in '" + field + "'", line_no);
            if (col <= d) {
                x.push_back(v);
            } else if (col == d + 1) {
                if (v != 0.0 && v != 1.0)
                    throw ParseError("feature csv: label must be 0 or 1", line_no);
                label = static_cast<long>(v);
            }
        }
        if (col != d + 1)
            throw DimensionMismatch("feature csv: expected " + std::to_string(d + 1) +
                                    " columns, got " + std::to_string(col) + " (line " +
                                    std::to_string(line_no) + ")");
        const double n = norm2(x);
        if (n > 1.0) scale(1.0 / n, x);
        pools[label].push_back(std::move(x));
    }
    if (K > 0 && (pools[0].empty() || pools[1].empty()))
        throw ParseError("feature csv: both label pools must be nonempty to serve " +
                             std::to_string(K) + " arms per round",
                         line_no);
    return {std::move(pools[0]), std::move(pools[1])};
}

}  // namespace nslb
