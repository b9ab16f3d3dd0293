#ifndef TENSORGRAPH_TOPOLOGY_HPP
#define TENSORGRAPH_TOPOLOGY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tensorgraph/core.hpp"

namespace tensorgraph {

/// Faces of a stranded graph: closed strand circuits. Each cycle starts at its
/// least slot and alternates edge and vertex transitions, edge first.
struct StrandFaces {
    std::vector<std::vector<StrandSlot>> faces;

    std::size_t count() const { return faces.size(); }
};

/// One alternating cycle of a two-color subgraph, as edge ids. The first
/// edge has color `first`; the cycle then alternates with `second`.
struct ColorFace {
    ColorId first;
    ColorId second;
    std::vector<std::size_t> edges;
};

struct ColorFaces {
    std::vector<ColorFace> faces;

    std::size_t count() const { return faces.size(); }
};

StrandFaces trace_faces(const StrandedGraph& s);

/// Faces of a colored graph: for each color pair {a, b} with a < b, the
/// cycles of the {a, b}-subgraph, pairs in lexicographic order.
ColorFaces bicolored_faces(const ColoredGraph& g);

/// Same, restricted to the pairs drawn from `colors`.
ColorFaces bicolored_faces(const ColoredGraph& g, ColorSet colors);

long long euler_characteristic(std::size_t vertices, std::size_t edges, std::size_t faces);

enum class Connectivity { connected, disconnected };

/// Genus (2 - chi) / 2 of a connected orientable ribbon graph.
/// Throws Disconnected, OddEuler or NegativeGenus.
int genus(std::size_t vertices, std::size_t edges, std::size_t faces, Connectivity connectivity);

bool is_planar(std::size_t vertices, std::size_t edges, std::size_t faces, Connectivity connectivity);

struct RibbonCounts {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    long long chi = 0;
    std::optional<int> genus; // set only for connected input with even chi <= 2

    bool planar() const { return genus == 0; }
};

/// Fills chi, and genus when it is defined. Never throws.
RibbonCounts ribbon_counts(std::size_t vertices, std::size_t edges, std::size_t faces, Connectivity connectivity);

} // namespace tensorgraph

#endif // TENSORGRAPH_TOPOLOGY_HPP
