#include "tensorgraph/dual.hpp"

#include "tensorgraph/bubbles.hpp"
#include "tensorgraph/topology.hpp"

namespace tensorgraph {

DualComplexCounts dual_counts(const ColoredGraph& g)
{
    if (g.rank() != 3)
        throw Error(ErrorCode::WrongRank, "dual counts need rank 3, got " + std::to_string(g.rank()));
    return {g.num_vertices(), g.num_edges(), bicolored_faces(g).count(), enumerate_bubbles(g, 3).size()};
}

long long complex_euler(const DualComplexCounts& c)
{
    return static_cast<long long>(c.points) - static_cast<long long>(c.segments) +
           static_cast<long long>(c.triangles) - static_cast<long long>(c.tetrahedra);
}

} // namespace tensorgraph
