#include "tensorgraph/bubbles.hpp"

#include <algorithm>

namespace tensorgraph {

namespace {

// Color subsets of cardinal k of {0..colors-1}, lexicographic in their sorted lists.
std::vector<ColorSet> subsets(int colors, int k)
{
    std::vector<ColorSet> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        ColorSet s;
        for (int c : pick)
            s.insert(c);
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == colors - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace

const std::string& Bubble::least_label() const
{
    return parent_->label(*std::min_element(vertices().begin(), vertices().end(), [&](std::size_t a, std::size_t b) {
        return parent_->label(a) < parent_->label(b);
    }));
}

DetachedBubble Bubble::detach() const
{
    DetachedBubble d;
    d.colors = colors_.to_vector();
    for (std::size_t v : vertices())
        d.vertices.push_back(parent_->label(v));
    for (std::size_t e : edges()) {
        const auto& edge = parent_->edges()[e];
        d.edges.push_back({edge.color, parent_->label(edge.white), parent_->label(edge.black)});
    }
    return d;
}

std::vector<Bubble> enumerate_bubbles(const ColoredGraph& g, int k)
{
    if (k < 1 || k > g.num_colors())
        throw Error(ErrorCode::BadCardinal, "k = " + std::to_string(k) + " outside 1.." + std::to_string(g.num_colors()));

    std::vector<Bubble> out;
    for (ColorSet s : subsets(g.num_colors(), k)) {
        std::vector<Bubble> group;
        for (auto& comp : components(g, s))
            group.emplace_back(g, s, std::move(comp));
        std::stable_sort(group.begin(), group.end(),
                         [](const Bubble& a, const Bubble& b) { return a.least_label() < b.least_label(); });
        std::move(group.begin(), group.end(), std::back_inserter(out));
    }
    return out;
}

RibbonCounts bubble_ribbon(const Bubble& b)
{
    const ColoredGraph& g = b.parent();
    const auto colors = b.colors().to_vector();
    const std::size_t k = colors.size();
    const std::size_t n = g.size();

    std::vector<std::vector<std::size_t>> inverse(static_cast<std::size_t>(g.num_colors()), std::vector<std::size_t>(n));
    for (ColorId c : colors)
        for (std::size_t i = 0; i < n; ++i)
            inverse[static_cast<std::size_t>(c)][g.matching(c)[i]] = i;

    // darts are (vertex, color slot); vertex numbering is local to the bubble
    std::vector<std::size_t> local(g.num_vertices(), 0);
    for (std::size_t i = 0; i < b.vertices().size(); ++i)
        local[b.vertices()[i]] = i;

    auto across = [&](std::size_t v, std::size_t slot) {
        const VertexRef ref = g.vertex(v);
        const auto c = static_cast<std::size_t>(colors[slot]);
        return ref.parity == Parity::white ? g.global_id({Parity::black, g.matching(colors[slot])[ref.index]})
                                           : g.global_id({Parity::white, inverse[c][ref.index]});
    };

    std::vector<bool> visited(b.vertices().size() * k, false);
    std::size_t faces = 0;
    for (std::size_t start = 0; start < visited.size(); ++start) {
        if (visited[start])
            continue;
        ++faces;
        std::size_t dart = start;
        do {
            visited[dart] = true;
            const std::size_t v = b.vertices()[dart / k];
            const std::size_t slot = dart % k;
            const std::size_t w = across(v, slot);
            const bool white = g.vertex(w).parity == Parity::white;
            const std::size_t next = white ? (slot + 1) % k : (slot + k - 1) % k;
            dart = local[w] * k + next;
        } while (dart != start);
    }

    auto counts = ribbon_counts(b.vertices().size(), b.edges().size(), faces, Connectivity::connected);
    if (!counts.genus)
        throw Error(ErrorCode::Internal, "bubble with Euler characteristic " + std::to_string(counts.chi));
    return counts;
}

BubbleCensus bubble_census(const ColoredGraph& g, int k)
{
    BubbleCensus census;
    for (auto& bubble : enumerate_bubbles(g, k)) {
        if (k == 3 && bubble.vertices().size() < 2)
            throw Error(ErrorCode::Internal, "isolated vertex in a three-color subgraph");
        RibbonCounts counts = bubble_ribbon(bubble);
        const int genus = *counts.genus;
        ++census.total;
        census.planar_count += genus == 0 ? 1 : 0;
        ++census.genus_histogram[genus];
        census.records.push_back({std::move(bubble), counts, genus, genus == 0});
    }
    return census;
}

} // namespace tensorgraph
