#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tensorgraph/checks.hpp"
#include "tensorgraph/sampling.hpp"

using namespace tensorgraph;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Internal;
}

std::vector<ColoredEdgeSpec> all_colors(const std::string& w, const std::string& b, int rank)
{
    std::vector<ColoredEdgeSpec> out;
    for (int c = 0; c <= rank; ++c)
        out.push_back({c, w, b});
    return out;
}

} // namespace

TEST_CASE("build_colored: dipole")
{
    const auto edges = all_colors("w1", "b1", 3);
    const ColoredGraph g = build_colored(3, {"w1"}, {"b1"}, edges);
    CHECK(g.size() == 1);
    CHECK(g.num_edges() == 4);
    CHECK(validate_colored(g).valid());
    for (int c = 0; c <= 3; ++c)
        CHECK(g.matching(c)[0] == 0);
    CHECK(g == fixtures::dipole());
}

TEST_CASE("build_colored: repeated color is rejected")
{
    std::vector<ColoredEdgeSpec> edges{{0, "w1", "b1"}, {1, "w1", "b1"}, {2, "w1", "b1"}, {2, "w1", "b1"}};
    CHECK(code_of([&] { build_colored(3, {"w1"}, {"b1"}, edges); }) == ErrorCode::DuplicateColorAtVertex);
    try {
        build_colored(3, {"w1"}, {"b1"}, edges);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("edges[3]") != std::string::npos);
    }
}

TEST_CASE("build_colored: quad graph sees every color once per vertex")
{
    const ColoredGraph g = fixtures::quad();
    CHECK(validate_colored(g).valid());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> seen(4, 0);
        for (const auto& e : g.edges())
            if (g.global_id(e.white) == v || g.global_id(e.black) == v)
                ++seen[static_cast<std::size_t>(e.color)];
        CHECK(seen == std::vector<int>{1, 1, 1, 1});
    }
}

TEST_CASE("build_colored: error paths")
{
    const auto edges = all_colors("w1", "b1", 3);
    CHECK(code_of([&] { build_colored(3, {"w1", "w2"}, {"b1"}, edges); }) == ErrorCode::UnequalParts);
    CHECK(code_of([&] { build_colored(1, {"w1"}, {"b1"}, edges); }) == ErrorCode::InvalidRank);

    auto missing = edges;
    missing.pop_back();
    CHECK(code_of([&] { build_colored(3, {"w1"}, {"b1"}, missing); }) == ErrorCode::MissingColorAtVertex);

    auto unknown = edges;
    unknown[1].black = "b9";
    CHECK(code_of([&] { build_colored(3, {"w1"}, {"b1"}, unknown); }) == ErrorCode::UnknownNode);

    auto out_of_range = edges;
    out_of_range[3].color = 4;
    CHECK(code_of([&] { build_colored(3, {"w1"}, {"b1"}, out_of_range); }) == ErrorCode::ColorOutOfRange);

    auto swapped = edges;
    std::swap(swapped[0].white, swapped[0].black);
    CHECK(code_of([&] { build_colored(3, {"w1"}, {"b1"}, swapped); }) == ErrorCode::ParityViolation);

    CHECK(code_of([&] { build_colored(3, {"x"}, {"x"}, edges); }) == ErrorCode::DuplicateLabel);
}

TEST_CASE("validate_colored lists every violation")
{
    SUBCASE("dipole and quad are valid")
    {
        CHECK(validate_colored(fixtures::dipole()).valid());
        CHECK(validate_colored(fixtures::quad()).valid());
    }
    SUBCASE("two color-0 edges at w1, bypassing the constructor")
    {
        const VertexRef w1{Parity::white, 0}, w2{Parity::white, 1};
        const VertexRef b1{Parity::black, 0}, b2{Parity::black, 1};
        std::vector<ColoredEdge> edges;
        for (int c = 0; c <= 3; ++c) {
            edges.push_back({c, w1, b1});
            edges.push_back({c, w2, b2});
        }
        edges[2] = {0, w1, b2}; // replaces color 1 at w1-b1
        const auto g = ColoredGraph::unchecked(3, {"w1", "w2"}, {"b1", "b2"}, edges);
        const auto report = validate_colored(g);
        CHECK_FALSE(report.valid());
        std::set<ErrorCode> rules;
        for (const auto& v : report.violations)
            rules.insert(v.rule);
        CHECK(rules.count(ErrorCode::DuplicateColorAtVertex));
        CHECK(rules.count(ErrorCode::MissingColorAtVertex));
        // w1 loses color 1, b1 loses color 1, b2 doubles color 0
        CHECK(report.violations.size() >= 3);
    }
    SUBCASE("parity violation")
    {
        std::vector<ColoredEdge> edges;
        for (int c = 0; c <= 3; ++c)
            edges.push_back({c, {Parity::white, 0}, {Parity::black, 0}});
        edges[0].black = {Parity::white, 0};
        const auto report = validate_colored(ColoredGraph::unchecked(3, {"w1"}, {"b1"}, edges));
        CHECK(report.violations.front().rule == ErrorCode::ParityViolation);
    }
}

TEST_CASE("components")
{
    const ColoredGraph dipole = fixtures::dipole();
    CHECK(components(dipole, {}).size() == 2);

    const auto all3 = components(dipole, {0, 1, 2});
    REQUIRE(all3.size() == 1);
    CHECK(all3[0].vertices.size() == 2);
    CHECK(all3[0].edges.size() == 3);

    const ColoredGraph quad = fixtures::quad();
    const auto pairs = components(quad, {0, 1});
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].vertices == std::vector<std::size_t>{0, 2}); // w1, b1
    CHECK(pairs[1].vertices == std::vector<std::size_t>{1, 3}); // w2, b2
    CHECK(pairs[0].edges.size() == 2);
    CHECK(oracle::colored_components(quad, {0, 1}) == 2);

    CHECK_THROWS_AS(components(quad, {4}), Error);
}

TEST_CASE("components: full color set is connectivity and partitions refine it")
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        const ColoredGraph g = random_colored(3, 1 + s % 6, Seed{s});
        const auto full = components(g, ColorSet::all(3));
        CHECK(full.size() == oracle::colored_components(g, ColorSet::all(3)));
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
            const auto part = components(g, ColorSet::from_mask(mask));
            CHECK(part.size() == oracle::colored_components(g, ColorSet::from_mask(mask)));
            CHECK(part.size() >= full.size());
            // each part component lies inside one full component
            for (const auto& p : part) {
                int owners = 0;
                for (const auto& f : full)
                    owners += std::includes(f.vertices.begin(), f.vertices.end(), p.vertices.begin(), p.vertices.end());
                CHECK(owners == 1);
            }
        }
    }
}

TEST_CASE("to_stranded")
{
    const StrandedGraph d = to_stranded(fixtures::dipole());
    CHECK(d.num_vertices() == 2);
    CHECK(d.num_edges() == 4);
    CHECK(d.num_slots() == 2 * 12);
    CHECK(d.vertices()[0].half_edges == std::vector<std::string>{"w1/0", "w1/1", "w1/2", "w1/3"});
    CHECK(d.vertices()[1].half_edges == std::vector<std::string>{"b1/3", "b1/2", "b1/1", "b1/0"});

    const StrandedGraph q = to_stranded(fixtures::quad());
    CHECK(q.num_vertices() == 4);
    CHECK(q.num_edges() == 8);
    for (const auto& e : q.edges())
        CHECK(e.strand_permutation == std::vector<int>{0, 1, 2});
    CHECK(is_untwisted(q).untwisted);
}

TEST_CASE("to_stranded is injective on matchings")
{
    // all 2^4 rank-3 graphs on two vertex pairs (each matching id or swap)
    std::vector<StrandedGraph> seen;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<fixtures::Perm> sig;
        for (int c = 0; c < 4; ++c)
            sig.push_back((mask >> c) & 1 ? fixtures::Perm{1, 0} : fixtures::Perm{0, 1});
        const StrandedGraph s = to_stranded(fixtures::from_perms(sig));
        for (const auto& other : seen)
            CHECK_FALSE(other == s);
        seen.push_back(s);
    }
}

TEST_CASE("build_stranded")
{
    const StrandedGraph a = fixtures::tadpole_a();
    CHECK(a.num_vertices() == 1);
    CHECK(a.num_edges() == 2);
    CHECK(a.opposite({0, 0}) == HalfEdgeRef{0, 1});
    CHECK(a.opposite({0, 3}) == HalfEdgeRef{0, 2});

    CHECK(code_of([] { fixtures::tadpole({{{"h0", "h1"}, {}}}); }) == ErrorCode::DanglingHalfEdge);
    CHECK(code_of([] { fixtures::tadpole({{{"h0", "h1"}, {0, 0, 1}}, {{"h2", "h3"}, {}}}); }) ==
          ErrorCode::BadPermutation);
    CHECK(code_of([] { fixtures::tadpole({{{"h0", "h1"}, {0, 1}}, {{"h2", "h3"}, {}}}); }) ==
          ErrorCode::BadPermutation);
    CHECK(code_of([] { fixtures::tadpole({{{"h0", "h1"}, {}}, {{"h1", "h3"}, {}}}); }) == ErrorCode::HalfEdgeReused);
    CHECK(code_of([] { fixtures::tadpole({{{"h0", "h0"}, {}}, {{"h2", "h3"}, {}}}); }) == ErrorCode::HalfEdgeReused);
    CHECK(code_of([] { fixtures::tadpole({{{"h0", "hx"}, {}}, {{"h2", "h3"}, {}}}); }) == ErrorCode::UnknownHalfEdge);
    CHECK(code_of([] {
              std::vector<StrandedEdgeSpec> none;
              build_stranded(3, {{"v", {"h0", "h1", "h2"}}}, none);
          }) == ErrorCode::WrongValence);
}

TEST_CASE("strand transitions are involutions")
{
    for (const StrandedGraph& s :
         {fixtures::tadpole_a(), fixtures::tadpole_b(), to_stranded(fixtures::quad()),
          fixtures::tadpole({{{"h0", "h1"}, {2, 0, 1}}, {{"h2", "h3"}, {1, 0, 2}}})}) {
        for (std::size_t id = 0; id < s.num_slots(); ++id) {
            const StrandSlot slot = s.slot_from_id(id);
            CHECK(s.slot_id(slot) == id);
            CHECK(s.edge_partner(s.edge_partner(slot)) == slot);
            CHECK(s.vertex_partner(s.vertex_partner(slot)) == slot);
            CHECK_FALSE(s.edge_partner(slot) == slot);
        }
    }
}
