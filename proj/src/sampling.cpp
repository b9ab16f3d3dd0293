#include "tensorgraph/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "tensorgraph/bubbles.hpp"
#include "tensorgraph/topology.hpp"

namespace tensorgraph {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = engine();
        if (r >= threshold)
            return r % bound;
    }
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& engine)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i-- > 1;)
        std::swap(p[i], p[draw_below(engine, i + 1)]);
    return p;
}

ColoredGraph random_colored(int rank, std::size_t n, Seed seed)
{
    if (rank < 2 || rank > 30 || n < 1)
        throw Error(ErrorCode::BadParameters, "need rank in 2..30 and n >= 1");
    std::mt19937_64 engine(seed.value);
    std::vector<std::vector<std::size_t>> matchings;
    for (int c = 0; c <= rank; ++c)
        matchings.push_back(random_permutation(n, engine));
    std::vector<std::string> whites, blacks;
    for (std::size_t i = 1; i <= n; ++i) {
        whites.push_back("w" + std::to_string(i));
        blacks.push_back("b" + std::to_string(i));
    }
    return colored_from_matchings(rank, std::move(whites), std::move(blacks), matchings);
}

ColoredGraph random_connected(int rank, std::size_t n, Seed seed, std::size_t max_attempts)
{
    if (max_attempts < 1)
        throw Error(ErrorCode::BadParameters, "max_attempts must be at least 1");
    for (std::size_t i = 0; i < max_attempts; ++i) {
        ColoredGraph g = random_colored(rank, n, Seed{mix_seed(seed.value, i)});
        if (components(g, ColorSet::all(rank)).size() == 1)
            return g;
    }
    throw Error(ErrorCode::AttemptsExhausted,
                "no connected graph in " + std::to_string(max_attempts) + " attempts");
}

Rational Rational::of(std::uint64_t num, std::uint64_t den)
{
    const std::uint64_t d = std::gcd(num, den);
    return d == 0 ? Rational{0, 1} : Rational{num / d, den / d};
}

std::string Rational::to_string() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

struct SampleStats {
    std::size_t faces = 0;
    std::size_t bubbles = 0;
    std::map<int, std::size_t> genera;
    bool all_planar = true;
    bool connected = false;
};

SampleStats measure(int rank, std::size_t n, std::uint64_t seed)
{
    const ColoredGraph g = random_colored(rank, n, Seed{seed});
    SampleStats stats;
    stats.faces = bicolored_faces(g).count();
    const BubbleCensus bubbles = bubble_census(g);
    stats.bubbles = bubbles.total;
    stats.genera = bubbles.genus_histogram;
    stats.all_planar = bubbles.planar_count == bubbles.total;
    stats.connected = components(g, ColorSet::all(rank)).size() == 1;
    return stats;
}

} // namespace

CensusReport census(int rank, std::size_t n, std::size_t samples, Seed seed, unsigned parallelism)
{
    if (samples < 1 || rank < 2 || rank > 30 || n < 1)
        throw Error(ErrorCode::BadParameters, "need samples >= 1, rank in 2..30 and n >= 1");

    std::vector<SampleStats> stats(samples);
    const unsigned workers = std::clamp<unsigned>(parallelism, 1, static_cast<unsigned>(std::min<std::size_t>(samples, 256)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t j = next++; j < samples; j = next++)
            stats[j] = measure(rank, n, mix_seed(seed.value, j));
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }

    CensusReport report;
    report.samples = samples;
    report.rank = rank;
    report.n = n;
    report.generator = std::string(generator_id);
    std::uint64_t faces = 0, planar = 0, connected = 0;
    for (const auto& s : stats) {
        faces += s.faces;
        ++report.bubble_count_distribution[s.bubbles];
        for (auto [genus, count] : s.genera)
            report.genus_histogram[genus] += count;
        planar += s.all_planar ? 1 : 0;
        connected += s.connected ? 1 : 0;
    }
    report.mean_faces = Rational::of(faces, samples);
    report.planar_fraction = Rational::of(planar, samples);
    report.connected_fraction = Rational::of(connected, samples);
    return report;
}

} // namespace tensorgraph
