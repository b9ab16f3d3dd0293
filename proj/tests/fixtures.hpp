#ifndef TENSORGRAPH_TESTS_FIXTURES_HPP
#define TENSORGRAPH_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "tensorgraph/core.hpp"

namespace fixtures {

using namespace tensorgraph;

using Perm = std::vector<std::size_t>;

inline ColoredGraph from_perms(const std::vector<Perm>& sigmas)
{
    const int rank = static_cast<int>(sigmas.size()) - 1;
    std::vector<std::string> whites, blacks;
    for (std::size_t i = 1; i <= sigmas.front().size(); ++i) {
        whites.push_back("w" + std::to_string(i));
        blacks.push_back("b" + std::to_string(i));
    }
    return colored_from_matchings(rank, whites, blacks, sigmas);
}

inline ColoredGraph dipole() { return from_perms({{0}, {0}, {0}, {0}}); }

inline ColoredGraph quad() { return from_perms({{0, 1}, {0, 1}, {1, 0}, {1, 0}}); }

/// sigma0 = sigma1 = id, sigma2 = (123), sigma3 = (132)
inline ColoredGraph nonplanar() { return from_perms({{0, 1, 2}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

inline StrandedGraph tadpole(std::vector<StrandedEdgeSpec> edges)
{
    return build_stranded(3, {{"v", {"h0", "h1", "h2", "h3"}}}, edges);
}

inline StrandedGraph tadpole_a() { return tadpole({{{"h0", "h1"}, {}}, {{"h2", "h3"}, {}}}); }

inline StrandedGraph tadpole_b() { return tadpole({{{"h0", "h2"}, {}}, {{"h1", "h3"}, {}}}); }

inline std::string data_path(const std::string& name) { return std::string(TENSORGRAPH_TEST_DATA) + "/" + name; }

} // namespace fixtures

#endif
