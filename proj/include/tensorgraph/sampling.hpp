#ifndef TENSORGRAPH_SAMPLING_HPP
#define TENSORGRAPH_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tensorgraph/core.hpp"

namespace tensorgraph {

struct Seed {
    std::uint64_t value = 0;
};

/// Names the generator so that other implementations can reproduce samples:
///  - engine: std::mt19937_64 seeded with the 64-bit seed;
///  - bounded draw below m: discard r < (2^64 - m) mod m, return r mod m;
///  - permutation of {0..n-1}: start from identity, for i = n-1 down to 1
///    swap entries i and draw(i + 1);
///  - colors 0..D drawn in order from one engine;
///  - sub-seed mix(seed, i): splitmix64 finalizer of seed + (i + 1) * 0x9E3779B97F4A7C15.
inline constexpr std::string_view generator_id = "mt19937_64/fisher-yates-descending/rejection/splitmix64-mix";

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Unbiased integer in [0, bound).
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound);

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& engine);

/// One independent uniform permutation per color; color c joins white i to
/// black sigma_c(i). Vertices are labelled w1..wn and b1..bn.
ColoredGraph random_colored(int rank, std::size_t n, Seed seed);

/// Rejection sampling of connected graphs; attempt i uses mix(seed, i).
ColoredGraph random_connected(int rank, std::size_t n, Seed seed, std::size_t max_attempts);

/// Exact non-negative rational, always reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational of(std::uint64_t num, std::uint64_t den);
    std::string to_string() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct CensusReport {
    std::size_t samples = 0;
    int rank = 0;
    std::size_t n = 0;
    Rational mean_faces;
    std::map<std::size_t, std::size_t> bubble_count_distribution; // bubbles per sample -> frequency
    std::map<int, std::size_t> genus_histogram;                   // over all bubbles of all samples
    Rational planar_fraction;    // samples whose bubbles are all planar
    Rational connected_fraction; // samples that are connected
    std::string generator;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Sample j is random_colored(rank, n, mix(seed, j)). The report does not
/// depend on `parallelism`.
CensusReport census(int rank, std::size_t n, std::size_t samples, Seed seed, unsigned parallelism = 1);

} // namespace tensorgraph

#endif // TENSORGRAPH_SAMPLING_HPP
