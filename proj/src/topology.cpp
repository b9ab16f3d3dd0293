#include "tensorgraph/topology.hpp"

#include <string>

namespace tensorgraph {

StrandFaces trace_faces(const StrandedGraph& s)
{
    StrandFaces out;
    std::vector<bool> visited(s.num_slots(), false);
    // slot ids follow (vertex, position, label-offset) order, so scanning
    // ids ascending starts each face at its least slot
    for (std::size_t id = 0; id < visited.size(); ++id) {
        if (visited[id])
            continue;
        std::vector<StrandSlot> face;
        StrandSlot cur = s.slot_from_id(id);
        do {
            visited[s.slot_id(cur)] = true;
            face.push_back(cur);
            cur = s.edge_partner(cur);
            visited[s.slot_id(cur)] = true;
            face.push_back(cur);
            cur = s.vertex_partner(cur);
        } while (s.slot_id(cur) != id);
        out.faces.push_back(std::move(face));
    }
    return out;
}

ColorFaces bicolored_faces(const ColoredGraph& g) { return bicolored_faces(g, ColorSet::all(g.rank())); }

ColorFaces bicolored_faces(const ColoredGraph& g, ColorSet colors)
{
    const std::size_t n = g.size();
    // black index -> white index, per color
    std::vector<std::vector<std::size_t>> inverse(static_cast<std::size_t>(g.num_colors()), std::vector<std::size_t>(n));
    for (ColorId c = 0; c <= g.rank(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            inverse[static_cast<std::size_t>(c)][g.matching(c)[i]] = i;

    ColorFaces out;
    const auto list = colors.to_vector();
    for (std::size_t x = 0; x < list.size(); ++x)
        for (std::size_t y = x + 1; y < list.size(); ++y) {
            const ColorId a = list[x];
            const ColorId b = list[y];
            std::vector<bool> visited(n, false);
            for (std::size_t start = 0; start < n; ++start) {
                if (visited[start])
                    continue;
                ColorFace face{a, b, {}};
                std::size_t w = start;
                do {
                    visited[w] = true;
                    const std::size_t black = g.matching(a)[w];
                    const std::size_t next = inverse[static_cast<std::size_t>(b)][black];
                    face.edges.push_back(g.edge_id(a, w));
                    face.edges.push_back(g.edge_id(b, next));
                    w = next;
                } while (w != start);
                out.faces.push_back(std::move(face));
            }
        }
    return out;
}

long long euler_characteristic(std::size_t vertices, std::size_t edges, std::size_t faces)
{
    return static_cast<long long>(vertices) - static_cast<long long>(edges) + static_cast<long long>(faces);
}

int genus(std::size_t vertices, std::size_t edges, std::size_t faces, Connectivity connectivity)
{
    if (connectivity != Connectivity::connected)
        throw Error(ErrorCode::Disconnected, "genus is defined for a single connected ribbon graph");
    const long long chi = euler_characteristic(vertices, edges, faces);
    if (chi % 2 != 0)
        throw Error(ErrorCode::OddEuler, "Euler characteristic " + std::to_string(chi) + " is odd");
    if (chi > 2)
        throw Error(ErrorCode::NegativeGenus, "Euler characteristic " + std::to_string(chi) + " exceeds 2");
    return static_cast<int>((2 - chi) / 2);
}

bool is_planar(std::size_t vertices, std::size_t edges, std::size_t faces, Connectivity connectivity)
{
    return genus(vertices, edges, faces, connectivity) == 0;
}

RibbonCounts ribbon_counts(std::size_t vertices, std::size_t edges, std::size_t faces, Connectivity connectivity)
{
    RibbonCounts r{vertices, edges, faces, euler_characteristic(vertices, edges, faces), std::nullopt};
    if (connectivity == Connectivity::connected && r.chi % 2 == 0 && r.chi <= 2)
        r.genus = static_cast<int>((2 - r.chi) / 2);
    return r;
}

} // namespace tensorgraph
