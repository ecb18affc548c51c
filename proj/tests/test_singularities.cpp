#include <doctest.h>

#include "toricg2/catalog.hpp"
#include "toricg2/singularities.hpp"

#include <algorithm>

using namespace toricg2;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("smooth cones are terminal") {
    CHECK(is_terminal_cone({iv({1, 0}), iv({0, 1})}));
    CHECK(is_terminal_cone({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}));
    CHECK(is_terminal_cone({iv({1, 0}), iv({1, 1})}));
}

TEST_CASE("the half-point quotient cone is terminal, its surface shadow is not") {
    // In dimension 3 the multiplicity-2 cone over e1, e2, (1,1,2) has an
    // empty simplex: terminal.
    CHECK(is_terminal_cone({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}));
    // In dimension 2 every singular cone picks up a boundary point.
    CHECK(!is_terminal_cone({iv({1, 0}), iv({1, 2})}));
    CHECK(!is_terminal_cone({iv({1, 0}), iv({-1, -2})}));
    // Midpoint witness (0,-1,0) of conv(0, (0,0,1), (0,-2,-1)).
    CHECK(!is_terminal_cone({iv({0, 0, 1}), iv({0, -2, -1})}));
}

TEST_CASE("skew cone family is terminal across its whole parameter range") {
    for (int d = 3; d <= 6; ++d)
        for (int p = 1; p <= d - 1; ++p)
            for (long c = 1; c <= d - p; ++c) {
                const auto gens = skew_terminal_cone(d, p, Int(c));
                REQUIRE(gens.size() == static_cast<size_t>(d));
                CHECK(is_terminal_cone(gens));
            }
}

TEST_CASE("skew cone fixture in dimension 3") {
    // d=3, p=2, c=1: e1, e2, e3 - e2.
    const auto gens = skew_terminal_cone(3, 2, 1);
    CHECK(gens[0] == iv({1, 0, 0}));
    CHECK(gens[1] == iv({0, 1, 0}));
    CHECK(gens[2] == iv({0, -1, 1}));
}

TEST_CASE("skew cone parameter validation") {
    CHECK_THROWS_AS(skew_terminal_cone(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(skew_terminal_cone(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(skew_terminal_cone(3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(skew_terminal_cone(3, 2, 0), std::invalid_argument);
    // c = d-p+1 is one past the terminal range.
    CHECK_THROWS_AS(skew_terminal_cone(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(skew_terminal_cone(4, 2, 3), std::invalid_argument);
}

TEST_CASE("just outside the skew range the cone stops being terminal") {
    // e1, e2, 2*e3 - e2 would be the (d,p,c) = (3,2,2) member: the simplex
    // conv(0, e1, e2, (0,-1,2)) contains (0,0,1).
    CHECK(!is_terminal_cone({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, -1, 2})}));
}

TEST_CASE("projective space is smooth") {
    for (int d = 2; d <= 4; ++d) {
        const GorensteinReport rep = gorenstein_report(projective_space(d));
        CHECK(rep.terminal);
        CHECK(rep.gorenstein);
        CHECK(rep.index == 1);
        CHECK(rep.minimal_singular_cones.empty());
        CHECK(std::all_of(rep.max_cone_mult.begin(), rep.max_cone_mult.end(),
                          [](const Int& m) { return m == 1; }));
    }
}

TEST_CASE("the weighted plane is Gorenstein of index 1 but not smooth") {
    const GorensteinReport rep = gorenstein_report(weighted_p2_112());
    CHECK(!rep.terminal);  // surface singularities are never terminal
    CHECK(rep.gorenstein);
    CHECK(rep.index == 1);
    REQUIRE(rep.minimal_singular_cones.size() == 1);
    CHECK(rep.minimal_singular_cones[0] == std::vector<int>{1, 2});
}

TEST_CASE("a non-Gorenstein surface") {
    Fan f;
    f.dim = 2;
    f.rays = {iv({0, 1}), iv({1, 0}), iv({-1, -3})};
    f.max_cones = {{0, 1}, {0, 2}, {1, 2}};
    const GorensteinReport rep = gorenstein_report(f);
    CHECK(!rep.gorenstein);
    // Dual vector of cone {1,2}: m = (1, -2/3); denominators lcm to 3.
    CHECK(rep.index == 3);
}

TEST_CASE("singularity report of the terminal Fano fourfold") {
    const GorensteinReport rep = gorenstein_report(terminal_fano_4fold());
    CHECK(rep.terminal);
    CHECK(!rep.gorenstein);
    CHECK(rep.index == 6);
    const std::vector<std::vector<int>> expected = {
        {0, 2, 4}, {0, 3, 4, 5}, {1, 3, 5}};
    CHECK(rep.minimal_singular_cones == expected);

    // Multiplicity histogram over the nine maximal cones: 1x4, 2x4, 3x1.
    std::vector<Int> mults = rep.max_cone_mult;
    std::sort(mults.begin(), mults.end());
    const std::vector<Int> want = {Int(1), Int(1), Int(1), Int(1), Int(2),
                                   Int(2), Int(2), Int(2), Int(3)};
    CHECK(mults == want);
}

TEST_CASE("singularity report of the d-dimensional terminal family") {
    for (int d = 4; d <= 6; ++d) {
        const GorensteinReport rep = gorenstein_report(terminal_fano_dfold(d));
        CHECK(rep.terminal);
        CHECK(!rep.minimal_singular_cones.empty());  // genuinely singular
    }
}

TEST_CASE("singularity report of the Gorenstein threefold") {
    const GorensteinReport rep = gorenstein_report(gorenstein_fano_3fold());
    CHECK(!rep.terminal);
    CHECK(rep.gorenstein);
    CHECK(rep.index == 1);
    const std::vector<std::vector<int>> expected = {{2, 3}};
    CHECK(rep.minimal_singular_cones == expected);
}

TEST_CASE("per-cone indices divide into the fan index") {
    const GorensteinReport rep = gorenstein_report(terminal_fano_4fold());
    REQUIRE(rep.max_cone_index.size() == 9);
    Int l = 1;
    for (const Int& x : rep.max_cone_index) {
        CHECK(x > 0);
        CHECK(rep.index % x == 0);
        l = lcm(l, x);
    }
    CHECK(l == rep.index);
}
