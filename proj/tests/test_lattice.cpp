#include <doctest.h>

#include "toricg2/lattice.hpp"

#include <algorithm>

using namespace toricg2;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("primitive_part divides out the content") {
    const auto [p, f] = primitive_part(iv({6, -9}));
    CHECK(p == iv({2, -3}));
    CHECK(f == 3);
    const auto [p2, f2] = primitive_part(iv({0, 0, -5}));
    CHECK(p2 == iv({0, 0, -1}));
    CHECK(f2 == 5);
    const auto [p3, f3] = primitive_part(iv({1, 1}));
    CHECK(p3 == iv({1, 1}));
    CHECK(f3 == 1);
}

TEST_CASE("primitive_part rejects the zero vector") {
    CHECK_THROWS_WITH_AS(primitive_part(iv({0, 0})),
                         "zero vector has no primitive part",
                         std::invalid_argument);
}

TEST_CASE("solve_dependency on spanning ray sets") {
    // e1, e2, -e1-e2: the projective-plane dependency.
    CHECK(solve_dependency({iv({1, 0}), iv({0, 1}), iv({-1, -1})}) ==
          iv({1, 1, 1}));
    // Weighted plane rays (0,1),(1,0),(-1,-2): weights (2,1,1).
    CHECK(solve_dependency({iv({0, 1}), iv({1, 0}), iv({-1, -2})}) ==
          iv({2, 1, 1}));
    // Sign normalization: first nonzero coefficient is positive even when the
    // natural solve produces the opposite orientation.
    CHECK(solve_dependency({iv({-1, 0}), iv({0, 1}), iv({-1, 1})}) ==
          iv({1, 1, -1}));
    // A coefficient may be zero when one vector is redundant for the relation.
    const IVec c = solve_dependency({iv({1, 0}), iv({-1, 0}), iv({0, 1})});
    CHECK(c == iv({1, 1, 0}));
}

TEST_CASE("solve_dependency requires a one-dimensional relation space") {
    CHECK_THROWS_WITH_AS(
        solve_dependency({iv({1, 0}), iv({2, 0}), iv({3, 0})}),
        "degenerate wall", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        solve_dependency({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}),
                          iv({2, 1, 0})}),
        "degenerate wall", std::invalid_argument);
}

TEST_CASE("lattice points in a segment") {
    const auto pts = lattice_points_in_simplex({iv({0, 0}), iv({3, 0})});
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == iv({0, 0}));
    CHECK(pts[3] == iv({3, 0}));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("lattice points in triangles") {
    // Unit triangle: only the three vertices.
    CHECK(lattice_points_in_simplex({iv({0, 0}), iv({1, 0}), iv({0, 1})})
              .size() == 3);
    // Doubled triangle: 6 points (vertices + edge midpoints).
    CHECK(lattice_points_in_simplex({iv({0, 0}), iv({2, 0}), iv({0, 2})})
              .size() == 6);
    // Interior point example: conv((0,0),(3,0),(0,3)) has 10 points, one of
    // them interior.
    const auto pts =
        lattice_points_in_simplex({iv({0, 0}), iv({3, 0}), iv({0, 3})});
    CHECK(pts.size() == 10);
    CHECK(std::find(pts.begin(), pts.end(), iv({1, 1})) != pts.end());
}

TEST_CASE("lattice points in a lower-dimensional simplex inside Z^3") {
    // Triangle embedded in the plane z = 1; used by terminality scans.
    const auto pts = lattice_points_in_simplex(
        {iv({0, 0, 1}), iv({2, 0, 1}), iv({0, 2, 1})});
    CHECK(pts.size() == 6);
    for (const auto& p : pts) CHECK(p[2] == 1);
}

TEST_CASE("lattice points in singular-cone simplices") {
    // conv(0, e1, e2, (1,1,2)) is the half-point quotient simplex: lattice
    // points are exactly its four vertices (no extra point at any height).
    const auto empty4 = lattice_points_in_simplex(
        {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})});
    CHECK(empty4.size() == 4);
    // conv(0, (0,0,1), (0,-2,-1)) picks up the edge midpoint (0,-1,0).
    const auto tri = lattice_points_in_simplex(
        {iv({0, 0, 0}), iv({0, 0, 1}), iv({0, -2, -1})});
    CHECK(tri.size() == 4);
    CHECK(std::find(tri.begin(), tri.end(), iv({0, -1, 0})) != tri.end());
}

TEST_CASE("lattice point enumeration rejects affinely dependent vertices") {
    CHECK_THROWS_AS(lattice_points_in_simplex(
                        {iv({0, 0}), iv({1, 0}), iv({2, 0})}),
                    std::invalid_argument);
}
