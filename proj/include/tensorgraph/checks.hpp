#ifndef TENSORGRAPH_CHECKS_HPP
#define TENSORGRAPH_CHECKS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tensorgraph/core.hpp"

namespace tensorgraph {

struct TwistReport {
    bool untwisted = true;
    std::vector<std::size_t> offending_edges;
};

/// Untwisted iff every strand permutation is the identity.
TwistReport is_untwisted(const StrandedGraph& s);

// ---------------------------------------------------------------------------
// Multi-orientability (rank 3 only)

enum class Sign : std::int8_t { negative = -1, positive = 1 };

enum class PatternVariant { alternating, block };

/// Corner signs read along a vertex's cyclic half-edge order: two positive
/// and two negative.
struct SignPattern {
    PatternVariant variant;
    std::array<Sign, 4> signs;

    static SignPattern alternating();
    static SignPattern block();
};

/// Signs per half-edge. Vertex v with rotation r gives position p the sign
/// pattern.signs[(p + r) % 4].
struct SignAssignment {
    SignPattern pattern;
    std::vector<std::array<Sign, 4>> signs;
    std::vector<int> rotations;

    Sign sign(HalfEdgeRef h) const { return signs[h.vertex][static_cast<std::size_t>(h.position)]; }
};

struct NotAdmissible {
    std::vector<std::size_t> component;       // vertex indices where the search failed
    std::vector<std::size_t> conflict_edges;  // edges whose constraints rejected rotations
    std::string message;
};

struct MoResult {
    std::optional<SignAssignment> assignment;
    std::optional<NotAdmissible> evidence;

    bool admissible() const { return assignment.has_value(); }
};

/// Backtracking over per-vertex pattern rotations, vertices in label order and
/// rotations ascending; the first solution found is the lexicographically
/// least. Throws WrongRank or TwistedInput.
MoResult mo_admissibility(const StrandedGraph& s, const SignPattern& pattern = SignPattern::alternating());

/// Witness on to_stranded(g): at a white vertex color c gets + iff c is even,
/// at a black vertex the opposite.
SignAssignment colored_mo_witness(const ColoredGraph& g);

/// Empty when `a` is a consistent assignment for s: each vertex reads a
/// rotation of the pattern and every edge joins + to -.
std::vector<std::string> check_sign_assignment(const StrandedGraph& s, const SignAssignment& a);

// ---------------------------------------------------------------------------
// Colorability

struct Coloring {
    ColoredGraph witness;
    std::vector<Parity> parity; // per stranded vertex
    /// White: color at position p is (p + r) mod (D+1); black: (r - p) mod (D+1).
    std::vector<int> rotation;
    std::vector<ColorId> edge_colors; // per stranded edge
};

struct ColorabilityResult {
    std::optional<Coloring> coloring;
    std::string obstruction;

    bool colorable() const { return coloring.has_value(); }
};

ColorabilityResult colorability(const StrandedGraph& s);

} // namespace tensorgraph

#endif // TENSORGRAPH_CHECKS_HPP
