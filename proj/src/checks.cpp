#include "tensorgraph/checks.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

namespace tensorgraph {

namespace {

using Domain = std::uint64_t;

struct Arc {
    std::size_t edge;
    int own_position;
    std::size_t other;
    int other_position;
};

/// Binary constraint search over per-vertex options, one connected component
/// at a time, vertices in label order and options ascending.
class VertexSearch {
public:
    using Compatible = std::function<bool(int option_a, int position_a, int option_b, int position_b)>;

    VertexSearch(const StrandedGraph& s, int options, Compatible compatible)
        : s_(s), options_(options), compatible_(std::move(compatible)), arcs_(s.num_vertices())
    {
        for (std::size_t e = 0; e < s.num_edges(); ++e) {
            const auto& [a, b] = s.edges()[e].ends;
            arcs_[a.vertex].push_back({e, a.position, b.vertex, b.position});
            if (a.vertex != b.vertex)
                arcs_[b.vertex].push_back({e, b.position, a.vertex, a.position});
        }
    }

    /// Restricts the options a vertex may take before the search.
    void restrict(std::size_t v, Domain allowed) { initial_.emplace_back(v, allowed); }

    /// Solves every component. Returns false at the first failing component.
    bool solve()
    {
        assignment_.assign(s_.num_vertices(), -1);
        Domain full = options_ >= 64 ? ~Domain{0} : (Domain{1} << options_) - 1;
        std::vector<Domain> domains(s_.num_vertices(), full);
        for (auto [v, allowed] : initial_)
            domains[v] &= allowed;

        for (auto& comp : stranded_components(s_)) {
            std::sort(comp.begin(), comp.end(), [&](std::size_t a, std::size_t b) {
                return s_.vertices()[a].id < s_.vertices()[b].id;
            });
            conflicts_.clear();
            for (std::size_t v : comp)
                for (const Arc& arc : arcs_[v])
                    if (arc.other == v) {
                        Domain keep = 0;
                        for (int o = 0; o < options_; ++o)
                            if (((domains[v] >> o) & 1) && compatible_(o, arc.own_position, o, arc.other_position))
                                keep |= Domain{1} << o;
                        if (keep != domains[v])
                            conflicts_.insert(arc.edge);
                        domains[v] = keep;
                    }
            if (!assign(comp, 0, domains)) {
                failed_component_ = comp;
                std::sort(failed_component_.begin(), failed_component_.end());
                return false;
            }
        }
        return true;
    }

    const std::vector<int>& assignment() const { return assignment_; }
    const std::vector<std::size_t>& failed_component() const { return failed_component_; }
    std::vector<std::size_t> conflicts() const { return {conflicts_.begin(), conflicts_.end()}; }

private:
    bool assign(const std::vector<std::size_t>& order, std::size_t depth, const std::vector<Domain>& domains)
    {
        if (depth == order.size())
            return true;
        const std::size_t v = order[depth];
        for (int o = 0; o < options_; ++o) {
            if (!((domains[v] >> o) & 1))
                continue;
            std::vector<Domain> next = domains;
            next[v] = Domain{1} << o;
            assignment_[v] = o;
            bool ok = true;
            for (const Arc& arc : arcs_[v]) {
                if (arc.other == v || assignment_[arc.other] >= 0)
                    continue;
                Domain keep = 0;
                for (int p = 0; p < options_; ++p)
                    if (((next[arc.other] >> p) & 1) && compatible_(o, arc.own_position, p, arc.other_position))
                        keep |= Domain{1} << p;
                if (keep != next[arc.other])
                    conflicts_.insert(arc.edge);
                next[arc.other] = keep;
                if (keep == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && assign(order, depth + 1, next))
                return true;
            assignment_[v] = -1;
        }
        return false;
    }

    const StrandedGraph& s_;
    int options_;
    Compatible compatible_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<std::pair<std::size_t, Domain>> initial_;
    std::vector<int> assignment_;
    std::vector<std::size_t> failed_component_;
    std::set<std::size_t> conflicts_;
};

std::array<Sign, 4> rotated(const SignPattern& pattern, int r)
{
    std::array<Sign, 4> out{};
    for (std::size_t p = 0; p < 4; ++p)
        out[p] = pattern.signs[(p + static_cast<std::size_t>(r)) % 4];
    return out;
}

std::string vertex_list(const StrandedGraph& s, const std::vector<std::size_t>& vs)
{
    std::string out;
    for (std::size_t v : vs)
        out += (out.empty() ? "" : ", ") + s.vertices()[v].id;
    return out;
}

} // namespace

TwistReport is_untwisted(const StrandedGraph& s)
{
    TwistReport report;
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        const auto& perm = s.edges()[e].strand_permutation;
        for (std::size_t k = 0; k < perm.size(); ++k)
            if (perm[k] != static_cast<int>(k)) {
                report.offending_edges.push_back(e);
                break;
            }
    }
    report.untwisted = report.offending_edges.empty();
    return report;
}

SignPattern SignPattern::alternating()
{
    return {PatternVariant::alternating, {Sign::positive, Sign::negative, Sign::positive, Sign::negative}};
}

SignPattern SignPattern::block()
{
    return {PatternVariant::block, {Sign::positive, Sign::positive, Sign::negative, Sign::negative}};
}

MoResult mo_admissibility(const StrandedGraph& s, const SignPattern& pattern)
{
    if (s.rank() != 3)
        throw Error(ErrorCode::WrongRank, "multi-orientability is defined for rank 3, got " + std::to_string(s.rank()));
    if (auto twists = is_untwisted(s); !twists.untwisted)
        throw Error(ErrorCode::TwistedInput,
                    "edge " + std::to_string(twists.offending_edges.front()) + " has a twisted strand permutation");

    // rotations giving the same signs as a smaller one are skipped
    Domain distinct = 0;
    for (int r = 0; r < 4; ++r) {
        bool repeat = false;
        for (int q = 0; q < r; ++q)
            repeat = repeat || rotated(pattern, q) == rotated(pattern, r);
        if (!repeat)
            distinct |= Domain{1} << r;
    }

    VertexSearch search(s, 4, [&](int ra, int pa, int rb, int pb) {
        return rotated(pattern, ra)[static_cast<std::size_t>(pa)] != rotated(pattern, rb)[static_cast<std::size_t>(pb)];
    });
    for (std::size_t v = 0; v < s.num_vertices(); ++v)
        search.restrict(v, distinct);

    MoResult result;
    if (!search.solve()) {
        NotAdmissible evidence{search.failed_component(), search.conflicts(), {}};
        std::string edges;
        for (std::size_t e : evidence.conflict_edges) {
            const auto& ends = s.edges()[e].ends;
            edges += (edges.empty() ? "" : ", ") + ("{" + s.half_edge_label(ends[0]) + ", " + s.half_edge_label(ends[1]) + "}");
        }
        evidence.message = "no rotation of the corner pattern satisfies every edge among vertices [" +
                           vertex_list(s, evidence.component) + "]; conflicting edges: " + edges;
        result.evidence = std::move(evidence);
        return result;
    }

    SignAssignment a{pattern, {}, search.assignment()};
    for (int r : a.rotations)
        a.signs.push_back(rotated(pattern, r));
    result.assignment = std::move(a);
    return result;
}

SignAssignment colored_mo_witness(const ColoredGraph& g)
{
    if (g.rank() != 3)
        throw Error(ErrorCode::WrongRank, "multi-orientability is defined for rank 3, got " + std::to_string(g.rank()));
    const SignPattern pattern = SignPattern::alternating();
    SignAssignment a{pattern, {}, {}};
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const bool white = g.vertex(v).parity == Parity::white;
        std::array<Sign, 4> signs{};
        for (int p = 0; p < 4; ++p) {
            const ColorId c = white ? p : 3 - p;
            const bool positive = (c % 2 == 0) == white;
            signs[static_cast<std::size_t>(p)] = positive ? Sign::positive : Sign::negative;
        }
        int rotation = -1;
        for (int r = 0; r < 4 && rotation < 0; ++r)
            if (rotated(pattern, r) == signs)
                rotation = r;
        if (rotation < 0)
            throw Error(ErrorCode::Internal, "parity signs do not follow the alternating pattern");
        a.signs.push_back(signs);
        a.rotations.push_back(rotation);
    }
    return a;
}

std::vector<std::string> check_sign_assignment(const StrandedGraph& s, const SignAssignment& a)
{
    std::vector<std::string> problems;
    if (s.rank() != 3)
        problems.push_back("rank is not 3");
    if (a.signs.size() != s.num_vertices() || a.rotations.size() != s.num_vertices()) {
        problems.push_back("assignment size does not match the vertex count");
        return problems;
    }
    for (std::size_t v = 0; v < s.num_vertices(); ++v) {
        const int r = a.rotations[v];
        if (r < 0 || r > 3 || rotated(a.pattern, r) != a.signs[v])
            problems.push_back("vertex " + s.vertices()[v].id + " does not read a rotation of the pattern");
    }
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        const auto& [x, y] = s.edges()[e].ends;
        if (a.sign(x) == a.sign(y))
            problems.push_back("edge {" + s.half_edge_label(x) + ", " + s.half_edge_label(y) + "} joins equal signs");
    }
    return problems;
}

ColorabilityResult colorability(const StrandedGraph& s)
{
    ColorabilityResult result;
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        const auto& [x, y] = s.edges()[e].ends;
        if (x.vertex == y.vertex) {
            result.obstruction = "edge {" + s.half_edge_label(x) + ", " + s.half_edge_label(y) +
                                 "} is a self-loop at " + s.vertices()[x.vertex].id +
                                 " and cannot join a white vertex to a black vertex";
            return result;
        }
    }
    if (auto twists = is_untwisted(s); !twists.untwisted) {
        const auto& ends = s.edges()[twists.offending_edges.front()].ends;
        result.obstruction = "edge {" + s.half_edge_label(ends[0]) + ", " + s.half_edge_label(ends[1]) +
                             "} is twisted; colored strands never twist";
        return result;
    }

    const int colors = s.valence();
    // option o: parity o / colors (0 white), rotation o % colors
    auto color_at = [colors](int option, int position) {
        const int r = option % colors;
        return option < colors ? (position + r) % colors : ((r - position) % colors + colors) % colors;
    };
    VertexSearch search(s, 2 * colors, [&](int oa, int pa, int ob, int pb) {
        return (oa < colors) != (ob < colors) && color_at(oa, pa) == color_at(ob, pb);
    });
    if (!search.solve()) {
        result.obstruction = "no consistent coloring of the component [" + vertex_list(s, search.failed_component()) + "]";
        return result;
    }

    Coloring coloring{ColoredGraph{}, {}, {}, {}};
    std::vector<std::string> whites, blacks;
    for (std::size_t v = 0; v < s.num_vertices(); ++v) {
        const int o = search.assignment()[v];
        coloring.parity.push_back(o < colors ? Parity::white : Parity::black);
        coloring.rotation.push_back(o % colors);
        (o < colors ? whites : blacks).push_back(s.vertices()[v].id);
    }
    std::vector<ColoredEdgeSpec> edges;
    for (const auto& edge : s.edges()) {
        auto [x, y] = edge.ends;
        if (coloring.parity[x.vertex] == Parity::black)
            std::swap(x, y);
        const ColorId c = color_at(search.assignment()[x.vertex], x.position);
        coloring.edge_colors.push_back(c);
        edges.push_back({c, s.vertices()[x.vertex].id, s.vertices()[y.vertex].id});
    }
    try {
        coloring.witness = build_colored(s.rank(), std::move(whites), std::move(blacks), edges);
    } catch (const Error& err) {
        throw Error(ErrorCode::Internal, std::string("coloring search produced an invalid witness: ") + err.what());
    }
    result.coloring = std::move(coloring);
    return result;
}

} // namespace tensorgraph
