#ifndef TENSORGRAPH_CORE_HPP
#define TENSORGRAPH_CORE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tensorgraph/error.hpp"

namespace tensorgraph {

/// Color of an edge, in 0..=rank.
using ColorId = int;

/// Small set of colors stored as a bitmask. Ranks above 30 are not supported.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr ColorSet(std::initializer_list<ColorId> colors)
    {
        for (ColorId c : colors)
            insert(c);
    }

    static constexpr ColorSet all(int rank) { return ColorSet(static_cast<std::uint32_t>((1u << (rank + 1)) - 1u)); }
    static constexpr ColorSet from_mask(std::uint32_t mask) { return ColorSet(mask); }

    constexpr void insert(ColorId c) { mask_ |= 1u << c; }
    constexpr bool contains(ColorId c) const { return c >= 0 && c < 32 && ((mask_ >> c) & 1u); }
    constexpr std::uint32_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    int size() const;
    /// Highest color in the set, or -1 when empty.
    int max() const;
    std::vector<ColorId> to_vector() const;

    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
    std::uint32_t mask_ = 0;
};

enum class Parity : std::uint8_t { white, black };

/// A vertex of a colored graph: index into the whites or blacks list.
struct VertexRef {
    Parity parity;
    std::size_t index;

    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct ColoredEdge {
    ColorId color;
    VertexRef white;
    VertexRef black;

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Edge given by labels, as read from a document.
struct ColoredEdgeSpec {
    ColorId color;
    std::string white;
    std::string black;
};

/// Bipartite rank-D tensor graph: one perfect matching white -> black per color.
///
/// Graphs returned by build_colored are valid: every color class is a perfect
/// matching, edges are stored color-major then by white index, so the edge of
/// color c at white i has id `c * size() + i`.
///
/// Global vertex ids number the whites first, then the blacks.
class ColoredGraph {
public:
    /// Wraps raw data without any check. Use validate_colored on the result.
    static ColoredGraph unchecked(int rank, std::vector<std::string> whites, std::vector<std::string> blacks,
                                  std::vector<ColoredEdge> edges);

    int rank() const { return rank_; }
    int num_colors() const { return rank_ + 1; }
    /// Number of white (equivalently black) vertices.
    std::size_t size() const { return whites_.size(); }
    std::size_t num_vertices() const { return whites_.size() + blacks_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<std::string>& whites() const { return whites_; }
    const std::vector<std::string>& blacks() const { return blacks_; }
    std::span<const ColoredEdge> edges() const { return edges_; }

    /// Black index matched to each white index by color c.
    std::span<const std::size_t> matching(ColorId c) const { return matchings_[static_cast<std::size_t>(c)]; }
    std::size_t edge_id(ColorId c, std::size_t white) const { return static_cast<std::size_t>(c) * size() + white; }

    std::size_t global_id(VertexRef v) const { return v.parity == Parity::white ? v.index : whites_.size() + v.index; }
    VertexRef vertex(std::size_t global) const;
    const std::string& label(VertexRef v) const { return v.parity == Parity::white ? whites_[v.index] : blacks_[v.index]; }
    const std::string& label(std::size_t global) const { return label(vertex(global)); }

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b)
    {
        return a.rank_ == b.rank_ && a.whites_ == b.whites_ && a.blacks_ == b.blacks_ && a.edges_ == b.edges_;
    }

private:
    int rank_ = 0;
    std::vector<std::string> whites_;
    std::vector<std::string> blacks_;
    std::vector<ColoredEdge> edges_;
    std::vector<std::vector<std::size_t>> matchings_;
};

struct Violation {
    ErrorCode rule;
    std::string element;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

/// Reorganizes an edge list into per-color matchings. Throws Error on the first violation.
ColoredGraph build_colored(int rank, std::vector<std::string> whites, std::vector<std::string> blacks,
                           std::span<const ColoredEdgeSpec> edges);

/// Builds from matchings[c][i] = black index of the color-c partner of white i.
ColoredGraph colored_from_matchings(int rank, std::vector<std::string> whites, std::vector<std::string> blacks,
                                    const std::vector<std::vector<std::size_t>>& matchings);

/// Checks every rule and lists all violations, not just the first.
ValidationReport validate_colored(const ColoredGraph& g);

struct Component {
    std::vector<std::size_t> vertices; // global ids, ascending
    std::vector<std::size_t> edges;    // edge ids, ascending
};

/// Connected components of the subgraph keeping every vertex and only edges
/// whose color lies in `colors`. Ordered by least global vertex id.
std::vector<Component> components(const ColoredGraph& g, ColorSet colors);

// ---------------------------------------------------------------------------
// Stranded graphs

/// Position `position` in the cyclic half-edge order of vertex `vertex`.
struct HalfEdgeRef {
    std::size_t vertex;
    int position;

    friend auto operator<=>(const HalfEdgeRef&, const HalfEdgeRef&) = default;
};

/// Strand slot of a half-edge. `label` names the other position of the vertex
/// this strand runs to, so label != half_edge.position.
struct StrandSlot {
    HalfEdgeRef half_edge;
    int label;

    friend auto operator<=>(const StrandSlot&, const StrandSlot&) = default;
};

struct StrandedVertex {
    std::string id;
    std::vector<std::string> half_edges; // cyclic order, rank + 1 labels

    friend bool operator==(const StrandedVertex&, const StrandedVertex&) = default;
};

/// Strand permutations index the D slots of a half-edge at position i by
/// cyclic offset: slot k runs to label (i + k + 1) mod (D + 1). The far end
/// is read in the opposite direction, so slot k on ends[0] meets slot
/// D - 1 - perm[k] on ends[1]. The identity is the untwisted edge.
struct StrandedEdge {
    std::array<HalfEdgeRef, 2> ends;
    std::vector<int> strand_permutation;

    friend bool operator==(const StrandedEdge&, const StrandedEdge&) = default;
};

struct StrandedEdgeSpec {
    std::array<std::string, 2> half_edges;
    std::vector<int> strand_permutation; // empty means identity
};

class StrandedGraph {
public:
    int rank() const { return rank_; }
    int valence() const { return rank_ + 1; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_slots() const { return num_vertices() * static_cast<std::size_t>(valence() * rank_); }

    const std::vector<StrandedVertex>& vertices() const { return vertices_; }
    const std::vector<StrandedEdge>& edges() const { return edges_; }

    const std::string& half_edge_label(HalfEdgeRef h) const
    {
        return vertices_[h.vertex].half_edges[static_cast<std::size_t>(h.position)];
    }
    /// Edge containing half-edge h and which end (0 or 1) h is.
    std::size_t edge_at(HalfEdgeRef h) const { return incidence_[flat(h)] / 2; }
    int end_at(HalfEdgeRef h) const { return static_cast<int>(incidence_[flat(h)] % 2); }
    HalfEdgeRef opposite(HalfEdgeRef h) const { return edges_[edge_at(h)].ends[1 - end_at(h)]; }

    /// Index of a slot within its half-edge, in 0..rank-1.
    int slot_index(const StrandSlot& s) const;
    StrandSlot slot(HalfEdgeRef h, int index) const;

    /// The slot reached by following the strand along the edge.
    StrandSlot edge_partner(const StrandSlot& s) const;
    /// The slot reached by following the strand through the vertex.
    StrandSlot vertex_partner(const StrandSlot& s) const { return {{s.half_edge.vertex, s.label}, s.half_edge.position}; }

    /// Dense numbering of slots: (vertex, position, slot index) row-major.
    std::size_t slot_id(const StrandSlot& s) const;
    StrandSlot slot_from_id(std::size_t id) const;

    friend bool operator==(const StrandedGraph& a, const StrandedGraph& b)
    {
        return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    friend StrandedGraph build_stranded(int, std::vector<StrandedVertex>, std::span<const StrandedEdgeSpec>);
    friend StrandedGraph to_stranded(const ColoredGraph&);

    std::size_t flat(HalfEdgeRef h) const { return h.vertex * static_cast<std::size_t>(valence()) + static_cast<std::size_t>(h.position); }
    void index_edges();

    int rank_ = 0;
    std::vector<StrandedVertex> vertices_;
    std::vector<StrandedEdge> edges_;
    std::vector<std::size_t> incidence_;                 // per half-edge: 2 * edge + end
    std::vector<std::vector<int>> inverse_permutations_; // per edge
};

StrandedGraph build_stranded(int rank, std::vector<StrandedVertex> vertices, std::span<const StrandedEdgeSpec> edges);

/// White cyclic order is colors 0..D, black is D..0. Half-edge labels are
/// "<vertex>/<color>"; every edge is untwisted. Edge ids match the colored graph.
StrandedGraph to_stranded(const ColoredGraph& g);

/// Connected components of a stranded graph, as sorted vertex index lists.
std::vector<std::vector<std::size_t>> stranded_components(const StrandedGraph& s);

} // namespace tensorgraph

#endif // TENSORGRAPH_CORE_HPP
