#include <doctest.h>

#include "fixtures.hpp"
#include "tensorgraph/dual.hpp"
#include "tensorgraph/sampling.hpp"

using namespace tensorgraph;

TEST_CASE("dual_counts")
{
    CHECK(dual_counts(fixtures::dipole()) == DualComplexCounts{2, 4, 6, 4});
    CHECK(dual_counts(fixtures::quad()) == DualComplexCounts{4, 8, 8, 4});
    for (std::uint64_t s = 0; s < 50; ++s) {
        const std::size_t n = 1 + s % 9;
        const DualComplexCounts c = dual_counts(random_colored(3, n, Seed{s}));
        CHECK(c.tetrahedra == 2 * n);
        CHECK(c.triangles == 4 * n);
    }
    try {
        dual_counts(fixtures::from_perms({{0}, {0}, {0}}));
        FAIL("expected WrongRank");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongRank);
    }
}

TEST_CASE("complex_euler")
{
    CHECK(complex_euler(dual_counts(fixtures::dipole())) == 0);
    CHECK(complex_euler(dual_counts(fixtures::quad())) == 0);
    CHECK(complex_euler({1, 1, 1, 1}) == 0);
    CHECK(complex_euler({2, 4, 6, 5}) == 1);
}
