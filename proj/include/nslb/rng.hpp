#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nslb {

// splitmix64 finalizer; the workhorse for deriving independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over a label string. Stable across platforms, unlike std::hash.
constexpr std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t a) { return splitmix64(a); }

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, Rest... rest);
template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::string_view label, Rest... rest);

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, Rest... rest) {
    return mix_seed(splitmix64(a) ^ splitmix64(splitmix64(b) + 0x9e3779b97f4a7c15ULL), rest...);
}

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::string_view label, Rest... rest) {
    return mix_seed(a, hash_label(label), rest...);
}

// One logical random stream. Single-owner by convention: a stream is never
// shared across threads; parallel work derives its own streams via mix_seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    double normal() { return normal_(eng_); }
    double normal(double mean, double sd) { return mean + sd * normal(); }
    double uniform01() { return uniform_(eng_); }
    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
    }
    std::uint64_t next_u64() { return eng_(); }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace nslb
