#ifndef TENSORGRAPH_TESTS_ORACLES_HPP
#define TENSORGRAPH_TESTS_ORACLES_HPP

// Brute-force reference computations. They read only raw graph data and
// never call the library's algorithms.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "tensorgraph/core.hpp"

namespace oracle {

using namespace tensorgraph;
using Perm = std::vector<std::size_t>;

inline std::size_t cycle_count(const Perm& p)
{
    std::vector<bool> seen(p.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = p[j])
            seen[j] = true;
    }
    return cycles;
}

inline std::multiset<std::size_t> cycle_lengths(const Perm& p)
{
    std::multiset<std::size_t> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j], ++len)
            seen[j] = true;
        if (len)
            out.insert(len);
    }
    return out;
}

inline Perm inverse(const Perm& p)
{
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[p[i]] = i;
    return q;
}

/// b after a^-1: black -> white via a, then white -> black via b.
inline Perm pair_permutation(const Perm& a, const Perm& b)
{
    Perm ai = inverse(a), out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        out[x] = b[ai[x]];
    return out;
}

inline std::vector<Perm> matchings(const ColoredGraph& g)
{
    std::vector<Perm> out(static_cast<std::size_t>(g.num_colors()), Perm(g.size()));
    for (const auto& e : g.edges())
        out[static_cast<std::size_t>(e.color)][e.white.index] = e.black.index;
    return out;
}

/// Faces of a colored graph as the sum over color pairs of cycle counts.
inline std::size_t colored_face_count(const ColoredGraph& g, ColorSet colors)
{
    const auto m = matchings(g);
    std::size_t total = 0;
    const auto list = colors.to_vector();
    for (std::size_t x = 0; x < list.size(); ++x)
        for (std::size_t y = x + 1; y < list.size(); ++y)
            total += cycle_count(pair_permutation(m[static_cast<std::size_t>(list[x])], m[static_cast<std::size_t>(list[y])]));
    return total;
}

/// Number of components by repeated relaxation over an explicit edge list.
inline std::size_t component_count(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<std::size_t> label(vertices);
    std::iota(label.begin(), label.end(), std::size_t{0});
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : edges) {
            const std::size_t m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) {
                label[a] = label[b] = m;
                changed = true;
            }
        }
    }
    return std::set<std::size_t>(label.begin(), label.end()).size();
}

inline std::size_t colored_components(const ColoredGraph& g, ColorSet colors)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g.edges())
        if (colors.contains(e.color))
            edges.emplace_back(e.white.index, g.size() + e.black.index);
    return component_count(g.num_vertices(), edges);
}

/// Slot orbits from first principles: a slot is (vertex, position, label);
/// the edge link is rebuilt from raw strand permutations.
struct SlotOrbits {
    std::size_t count = 0;
    std::vector<std::size_t> lengths; // in slots
};

inline SlotOrbits strand_orbits(const StrandedGraph& s)
{
    using Key = std::tuple<std::size_t, int, int>;
    const int d = s.rank();
    const int val = d + 1;
    std::map<Key, std::vector<Key>> adj;
    for (std::size_t v = 0; v < s.num_vertices(); ++v)
        for (int i = 0; i < val; ++i)
            for (int j = 0; j < val; ++j)
                if (i != j)
                    adj[{v, i, j}].push_back({v, j, i});
    for (const auto& e : s.edges()) {
        const auto [a, b] = e.ends;
        for (int k = 0; k < d; ++k) {
            const int la = (a.position + k + 1) % val;
            const int lb = (b.position + d - e.strand_permutation[static_cast<std::size_t>(k)]) % val;
            const Key x{a.vertex, a.position, la}, y{b.vertex, b.position, lb};
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
    }
    SlotOrbits out;
    std::set<Key> seen;
    for (const auto& [start, _] : adj) {
        if (seen.count(start))
            continue;
        std::vector<Key> stack{start};
        seen.insert(start);
        std::size_t size = 0;
        while (!stack.empty()) {
            Key k = stack.back();
            stack.pop_back();
            ++size;
            for (const Key& n : adj[k])
                if (seen.insert(n).second)
                    stack.push_back(n);
        }
        ++out.count;
        out.lengths.push_back(size);
    }
    return out;
}

/// All rotation vectors admitting the corner pattern, by full enumeration.
inline std::vector<std::vector<int>> mo_solutions(const StrandedGraph& s, std::array<int, 4> pattern)
{
    std::vector<std::vector<int>> out;
    std::vector<int> rot(s.num_vertices(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (v == rot.size()) {
            for (const auto& e : s.edges()) {
                const auto [a, b] = e.ends;
                if (pattern[static_cast<std::size_t>((a.position + rot[a.vertex]) % 4)] ==
                    pattern[static_cast<std::size_t>((b.position + rot[b.vertex]) % 4)])
                    return;
            }
            out.push_back(rot);
            return;
        }
        for (int r = 0; r < 4; ++r) {
            rot[v] = r;
            go(v + 1);
        }
    };
    go(0);
    return out;
}

/// Edge-colored isomorphism up to a color permutation, allowing the two
/// vertex classes to be exchanged. Exhaustive; small graphs only.
inline bool isomorphic_up_to_colors(const ColoredGraph& a, const ColoredGraph& b)
{
    if (a.rank() != b.rank() || a.size() != b.size())
        return false;
    const auto ma = matchings(a);
    const auto mb = matchings(b);
    const std::size_t n = a.size();
    std::vector<std::size_t> colors(static_cast<std::size_t>(a.num_colors()));
    std::iota(colors.begin(), colors.end(), std::size_t{0});
    for (int swap = 0; swap < 2; ++swap) {
        std::vector<Perm> target = mb;
        if (swap)
            for (auto& p : target)
                p = inverse(p);
        do {
            Perm white(n);
            std::iota(white.begin(), white.end(), std::size_t{0});
            do {
                // black bijection forced by color 0
                Perm black(n);
                for (std::size_t i = 0; i < n; ++i)
                    black[ma[0][i]] = target[colors[0]][white[i]];
                bool ok = true;
                for (std::size_t c = 0; c < colors.size() && ok; ++c)
                    for (std::size_t i = 0; i < n && ok; ++i)
                        ok = black[ma[c][i]] == target[colors[c]][white[i]];
                if (ok)
                    return true;
            } while (std::next_permutation(white.begin(), white.end()));
        } while (std::next_permutation(colors.begin(), colors.end()));
    }
    return false;
}

} // namespace oracle

#endif
