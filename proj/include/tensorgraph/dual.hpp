#ifndef TENSORGRAPH_DUAL_HPP
#define TENSORGRAPH_DUAL_HPP

#include <cstddef>

#include "tensorgraph/core.hpp"

namespace tensorgraph {

/// Simplex counts of the triangulation dual to a rank-3 colored graph:
/// vertices are tetrahedra, edges triangles, bicolored faces segments and
/// three-color bubbles points.
struct DualComplexCounts {
    std::size_t tetrahedra = 0;
    std::size_t triangles = 0;
    std::size_t segments = 0;
    std::size_t points = 0;

    friend bool operator==(const DualComplexCounts&, const DualComplexCounts&) = default;
};

/// Throws WrongRank unless g has rank 3.
DualComplexCounts dual_counts(const ColoredGraph& g);

/// points - segments + triangles - tetrahedra
long long complex_euler(const DualComplexCounts& c);

} // namespace tensorgraph

#endif // TENSORGRAPH_DUAL_HPP
