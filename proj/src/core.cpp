#include "tensorgraph/core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tensorgraph {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

std::string describe_edge(std::size_t k, const ColoredEdge& e, const std::vector<std::string>& whites,
                          const std::vector<std::string>& blacks)
{
    auto name = [&](VertexRef v) -> std::string {
        const auto& list = v.parity == Parity::white ? whites : blacks;
        return v.index < list.size() ? list[v.index] : "?";
    };
    return "edges[" + std::to_string(k) + "] (color " + std::to_string(e.color) + ", " + name(e.white) + " - " +
           name(e.black) + ")";
}

std::vector<Violation> collect_violations(int rank, const std::vector<std::string>& whites,
                                          const std::vector<std::string>& blacks, std::span<const ColoredEdge> edges)
{
    std::vector<Violation> out;
    if (rank < 2 || rank > 30) {
        out.push_back({ErrorCode::InvalidRank, "rank", "rank " + std::to_string(rank) + " outside 2..30"});
        return out;
    }
    if (whites.size() != blacks.size())
        out.push_back({ErrorCode::UnequalParts, "graph",
                       std::to_string(whites.size()) + " whites vs " + std::to_string(blacks.size()) + " blacks"});

    std::unordered_set<std::string> seen;
    for (const auto* list : {&whites, &blacks})
        for (const auto& label : *list)
            if (!seen.insert(label).second)
                out.push_back({ErrorCode::DuplicateLabel, label, "vertex label declared twice"});

    const auto colors = static_cast<std::size_t>(rank + 1);
    // first edge index per (vertex, color); npos when absent
    std::vector<std::size_t> white_seen(whites.size() * colors, npos);
    std::vector<std::size_t> black_seen(blacks.size() * colors, npos);

    for (std::size_t k = 0; k < edges.size(); ++k) {
        const ColoredEdge& e = edges[k];
        const std::string where = describe_edge(k, e, whites, blacks);
        if (e.color < 0 || e.color > rank) {
            out.push_back({ErrorCode::ColorOutOfRange, where, "color must lie in 0.." + std::to_string(rank)});
            continue;
        }
        if (e.white.parity != Parity::white || e.black.parity != Parity::black) {
            out.push_back({ErrorCode::ParityViolation, where, "an edge must join a white vertex to a black vertex"});
            continue;
        }
        if (e.white.index >= whites.size() || e.black.index >= blacks.size()) {
            out.push_back({ErrorCode::UnknownNode, where, "endpoint index out of range"});
            continue;
        }
        const auto c = static_cast<std::size_t>(e.color);
        for (auto [table, v, list] : {std::tuple{&white_seen, e.white.index, &whites},
                                      std::tuple{&black_seen, e.black.index, &blacks}}) {
            std::size_t& first = (*table)[v * colors + c];
            if (first == npos)
                first = k;
            else
                out.push_back({ErrorCode::DuplicateColorAtVertex, where,
                               "vertex " + (*list)[v] + " already has color " + std::to_string(e.color) +
                                   " on edges[" + std::to_string(first) + "]"});
        }
    }

    for (auto [table, list] : {std::pair{&white_seen, &whites}, std::pair{&black_seen, &blacks}})
        for (std::size_t v = 0; v < list->size(); ++v)
            for (std::size_t c = 0; c < colors; ++c)
                if ((*table)[v * colors + c] == npos)
                    out.push_back({ErrorCode::MissingColorAtVertex, (*list)[v],
                                   "no edge of color " + std::to_string(c)});
    return out;
}

} // namespace

int ColorSet::size() const { return std::popcount(mask_); }

int ColorSet::max() const { return mask_ == 0 ? -1 : 31 - std::countl_zero(mask_); }

std::vector<ColorId> ColorSet::to_vector() const
{
    std::vector<ColorId> out;
    for (ColorId c = 0; c < 32; ++c)
        if (contains(c))
            out.push_back(c);
    return out;
}

ColoredGraph ColoredGraph::unchecked(int rank, std::vector<std::string> whites, std::vector<std::string> blacks,
                                     std::vector<ColoredEdge> edges)
{
    ColoredGraph g;
    g.rank_ = rank;
    g.whites_ = std::move(whites);
    g.blacks_ = std::move(blacks);
    g.edges_ = std::move(edges);
    std::stable_sort(g.edges_.begin(), g.edges_.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
        return std::pair(a.color, a.white.index) < std::pair(b.color, b.white.index);
    });
    g.matchings_.assign(static_cast<std::size_t>(std::max(rank + 1, 0)), std::vector<std::size_t>(g.whites_.size(), npos));
    for (const auto& e : g.edges_)
        if (e.color >= 0 && e.color <= rank && e.white.index < g.whites_.size())
            g.matchings_[static_cast<std::size_t>(e.color)][e.white.index] = e.black.index;
    return g;
}

VertexRef ColoredGraph::vertex(std::size_t global) const
{
    if (global < whites_.size())
        return {Parity::white, global};
    return {Parity::black, global - whites_.size()};
}

ColoredGraph build_colored(int rank, std::vector<std::string> whites, std::vector<std::string> blacks,
                           std::span<const ColoredEdgeSpec> edges)
{
    if (rank < 2 || rank > 30)
        throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(rank) + " outside 2..30");
    if (whites.size() != blacks.size())
        throw Error(ErrorCode::UnequalParts,
                    std::to_string(whites.size()) + " whites vs " + std::to_string(blacks.size()) + " blacks");

    std::unordered_map<std::string, VertexRef> index;
    for (std::size_t i = 0; i < whites.size(); ++i)
        if (!index.emplace(whites[i], VertexRef{Parity::white, i}).second)
            throw Error(ErrorCode::DuplicateLabel, "vertex " + whites[i] + " declared twice");
    for (std::size_t i = 0; i < blacks.size(); ++i)
        if (!index.emplace(blacks[i], VertexRef{Parity::black, i}).second)
            throw Error(ErrorCode::DuplicateLabel, "vertex " + blacks[i] + " declared twice");

    std::vector<ColoredEdge> resolved;
    resolved.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& spec = edges[k];
        const std::string where = "edges[" + std::to_string(k) + "]";
        auto w = index.find(spec.white);
        auto b = index.find(spec.black);
        if (w == index.end())
            throw Error(ErrorCode::UnknownNode, where + ": undeclared vertex " + spec.white);
        if (b == index.end())
            throw Error(ErrorCode::UnknownNode, where + ": undeclared vertex " + spec.black);
        resolved.push_back({spec.color, w->second, b->second});
    }

    auto violations = collect_violations(rank, whites, blacks, resolved);
    if (!violations.empty())
        throw Error(violations.front().rule, violations.front().element + ": " + violations.front().message);
    return ColoredGraph::unchecked(rank, std::move(whites), std::move(blacks), std::move(resolved));
}

ColoredGraph colored_from_matchings(int rank, std::vector<std::string> whites, std::vector<std::string> blacks,
                                    const std::vector<std::vector<std::size_t>>& matchings)
{
    std::vector<ColoredEdgeSpec> edges;
    for (std::size_t c = 0; c < matchings.size(); ++c)
        for (std::size_t i = 0; i < matchings[c].size(); ++i) {
            if (i >= whites.size() || matchings[c][i] >= blacks.size())
                throw Error(ErrorCode::UnknownNode, "matching " + std::to_string(c) + " refers past the vertex lists");
            edges.push_back({static_cast<ColorId>(c), whites[i], blacks[matchings[c][i]]});
        }
    return build_colored(rank, std::move(whites), std::move(blacks), edges);
}

ValidationReport validate_colored(const ColoredGraph& g)
{
    return {collect_violations(g.rank(), g.whites(), g.blacks(), g.edges())};
}

std::vector<Component> components(const ColoredGraph& g, ColorSet colors)
{
    if (colors.max() > g.rank())
        throw Error(ErrorCode::ColorOutOfRange, "color set exceeds rank " + std::to_string(g.rank()));

    DisjointSets sets(g.num_vertices());
    for (const auto& e : g.edges())
        if (colors.contains(e.color))
            sets.unite(g.global_id(e.white), g.global_id(e.black));

    std::vector<std::size_t> slot(g.num_vertices(), npos);
    std::vector<Component> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::size_t root = sets.find(v);
        if (slot[root] == npos) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].vertices.push_back(v);
    }
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (colors.contains(edges[k].color))
            out[slot[sets.find(g.global_id(edges[k].white))]].edges.push_back(k);
    return out;
}

// ---------------------------------------------------------------------------

int StrandedGraph::slot_index(const StrandSlot& s) const
{
    return (s.label - s.half_edge.position + valence()) % valence() - 1;
}

StrandSlot StrandedGraph::slot(HalfEdgeRef h, int index) const
{
    return {h, (h.position + index + 1) % valence()};
}

StrandSlot StrandedGraph::edge_partner(const StrandSlot& s) const
{
    const std::size_t e = edge_at(s.half_edge);
    const int end = end_at(s.half_edge);
    const StrandedEdge& edge = edges_[e];
    const int k = slot_index(s);
    if (end == 0)
        return slot(edge.ends[1], rank_ - 1 - edge.strand_permutation[static_cast<std::size_t>(k)]);
    return slot(edge.ends[0], inverse_permutations_[e][static_cast<std::size_t>(rank_ - 1 - k)]);
}

std::size_t StrandedGraph::slot_id(const StrandSlot& s) const
{
    return flat(s.half_edge) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(slot_index(s));
}

StrandSlot StrandedGraph::slot_from_id(std::size_t id) const
{
    const auto r = static_cast<std::size_t>(rank_);
    const auto val = static_cast<std::size_t>(valence());
    const std::size_t half = id / r;
    return slot({half / val, static_cast<int>(half % val)}, static_cast<int>(id % r));
}

void StrandedGraph::index_edges()
{
    incidence_.assign(vertices_.size() * static_cast<std::size_t>(valence()), npos);
    inverse_permutations_.clear();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        for (int end = 0; end < 2; ++end)
            incidence_[flat(edges_[e].ends[static_cast<std::size_t>(end)])] = 2 * e + static_cast<std::size_t>(end);
        const auto& perm = edges_[e].strand_permutation;
        std::vector<int> inverse(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
            inverse[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
        inverse_permutations_.push_back(std::move(inverse));
    }
}

StrandedGraph build_stranded(int rank, std::vector<StrandedVertex> vertices, std::span<const StrandedEdgeSpec> edges)
{
    if (rank < 2 || rank > 30)
        throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(rank) + " outside 2..30");

    const auto valence = static_cast<std::size_t>(rank + 1);
    std::unordered_set<std::string> vertex_ids;
    std::unordered_map<std::string, HalfEdgeRef> half_edges;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto& vertex = vertices[v];
        if (!vertex_ids.insert(vertex.id).second)
            throw Error(ErrorCode::DuplicateLabel, "vertex " + vertex.id + " declared twice");
        if (vertex.half_edges.size() != valence)
            throw Error(ErrorCode::WrongValence, "vertex " + vertex.id + " has " +
                                                     std::to_string(vertex.half_edges.size()) + " half-edges, expected " +
                                                     std::to_string(valence));
        for (std::size_t p = 0; p < valence; ++p)
            if (!half_edges.emplace(vertex.half_edges[p], HalfEdgeRef{v, static_cast<int>(p)}).second)
                throw Error(ErrorCode::DuplicateLabel, "half-edge " + vertex.half_edges[p] + " declared twice");
    }

    StrandedGraph s;
    s.rank_ = rank;
    std::vector<bool> used(vertices.size() * valence, false);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& spec = edges[e];
        const std::string where = "edges[" + std::to_string(e) + "]";
        StrandedEdge edge;
        for (std::size_t end = 0; end < 2; ++end) {
            auto it = half_edges.find(spec.half_edges[end]);
            if (it == half_edges.end())
                throw Error(ErrorCode::UnknownHalfEdge, where + ": undeclared half-edge " + spec.half_edges[end]);
            const HalfEdgeRef h = it->second;
            const std::size_t f = h.vertex * valence + static_cast<std::size_t>(h.position);
            if (used[f])
                throw Error(ErrorCode::HalfEdgeReused, where + ": half-edge " + spec.half_edges[end] + " already used");
            used[f] = true;
            edge.ends[end] = h;
        }

        edge.strand_permutation = spec.strand_permutation;
        if (edge.strand_permutation.empty()) {
            edge.strand_permutation.resize(static_cast<std::size_t>(rank));
            std::iota(edge.strand_permutation.begin(), edge.strand_permutation.end(), 0);
        }
        if (edge.strand_permutation.size() != static_cast<std::size_t>(rank))
            throw Error(ErrorCode::BadPermutation, where + ": permutation must have " + std::to_string(rank) + " entries");
        std::vector<bool> hit(static_cast<std::size_t>(rank), false);
        for (int x : edge.strand_permutation) {
            if (x < 0 || x >= rank || hit[static_cast<std::size_t>(x)])
                throw Error(ErrorCode::BadPermutation, where + ": strand permutation is not a bijection");
            hit[static_cast<std::size_t>(x)] = true;
        }
        s.edges_.push_back(std::move(edge));
    }

    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (std::size_t p = 0; p < valence; ++p)
            if (!used[v * valence + p])
                throw Error(ErrorCode::DanglingHalfEdge,
                            "half-edge " + vertices[v].half_edges[p] + " of vertex " + vertices[v].id + " is in no edge");

    s.vertices_ = std::move(vertices);
    s.index_edges();
    return s;
}

StrandedGraph to_stranded(const ColoredGraph& g)
{
    const int rank = g.rank();
    StrandedGraph s;
    s.rank_ = rank;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const bool white = g.vertex(v).parity == Parity::white;
        StrandedVertex vertex{g.label(v), {}};
        for (int p = 0; p <= rank; ++p)
            vertex.half_edges.push_back(g.label(v) + "/" + std::to_string(white ? p : rank - p));
        s.vertices_.push_back(std::move(vertex));
    }
    std::vector<int> identity(static_cast<std::size_t>(rank));
    std::iota(identity.begin(), identity.end(), 0);
    for (const auto& e : g.edges()) {
        const HalfEdgeRef w{g.global_id(e.white), e.color};
        const HalfEdgeRef b{g.global_id(e.black), rank - e.color};
        s.edges_.push_back({{w, b}, identity});
    }
    s.index_edges();
    return s;
}

std::vector<std::vector<std::size_t>> stranded_components(const StrandedGraph& s)
{
    DisjointSets sets(s.num_vertices());
    for (const auto& e : s.edges())
        sets.unite(e.ends[0].vertex, e.ends[1].vertex);
    std::vector<std::size_t> slot(s.num_vertices(), npos);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t v = 0; v < s.num_vertices(); ++v) {
        std::size_t root = sets.find(v);
        if (slot[root] == npos) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(v);
    }
    return out;
}

} // namespace tensorgraph
