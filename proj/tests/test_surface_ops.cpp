#include <doctest.h>

#include "toricg2/catalog.hpp"
#include "toricg2/errors.hpp"
#include "toricg2/gamma2.hpp"

#include <algorithm>

using namespace toricg2;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Fan weighted_p2_113() {
    Fan f;
    f.dim = 2;
    f.rays = {iv({0, 1}), iv({1, 0}), iv({-1, -3})};
    f.max_cones = {{0, 1}, {0, 2}, {1, 2}};
    require_valid(f);
    return f;
}

} // namespace

TEST_CASE("self-intersection numbers of standard surfaces") {
    const QVec p2 = surface_self_intersections(projective_space(2));
    CHECK(p2 == QVec{Rat(1), Rat(1), Rat(1)});

    for (long a = 0; a <= 4; ++a) {
        const QVec f = surface_self_intersections(hirzebruch(a));
        REQUIRE(f.size() == 4);
        CHECK(f[0] == 0);
        CHECK(f[1] == -a);
        CHECK(f[2] == 0);
        CHECK(f[3] == a);
    }

    const QVec w = surface_self_intersections(weighted_p2_112());
    CHECK(w[0] == 2);
    CHECK(w[1] == Rat(1) / 2);
    CHECK(w[2] == Rat(1) / 2);
}

TEST_CASE("gamma2 of standard surfaces") {
    CHECK(gamma2_surface(projective_space(2)) == 3);
    CHECK(gamma2_surface(weighted_p2_112()) == 3);
    for (long a = 0; a <= 5; ++a) CHECK(gamma2_surface(hirzebruch(a)) == 0);
    CHECK(gamma2_surface(product_p1_p1()) == 0);
    CHECK(gamma2_surface(blowup_p2(0)) == 3);
    CHECK(gamma2_surface(blowup_p2(1)) == 0);
    CHECK(gamma2_surface(blowup_p2(2)) == -3);
    CHECK(gamma2_surface(blowup_p2(3)) == -6);
}

TEST_CASE("surface operations reject other dimensions") {
    CHECK_THROWS_AS(surface_self_intersections(projective_space(3)),
                    unsupported_error);
    CHECK_THROWS_AS(gamma2_surface(projective_space(3)), unsupported_error);
    CHECK_THROWS_AS(contract_ray(projective_space(3), 0), unsupported_error);
    CHECK_THROWS_AS(crepant_resolution_surface(projective_space(3)),
                    unsupported_error);
}

TEST_CASE("contracting the exceptional ray of a blown-up plane") {
    // blowup_p2(1) inserts (1,1) as ray 3; contracting it returns P2.
    const Fan dp1 = blowup_p2(1);
    const RayContraction rc = contract_ray(dp1, 3);
    CHECK(rc.removed_ray == 3);
    CHECK(rc.a == 1);
    CHECK(rc.b == 1);
    CHECK(rc.q == 1);
    CHECK(rc.fan.ray_count() == 3);
    CHECK(gamma2_surface(rc.fan) == 3);
    CHECK(gamma2_drop(dp1, 3) == 3);
}

TEST_CASE("contracting the minus-one section of F1") {
    // In hirzebruch(1) the ray (0,1) is the -1 curve; removing it leaves a
    // fan isomorphic to the projective plane.
    const Fan f1 = hirzebruch(1);
    const QVec si = surface_self_intersections(f1);
    CHECK(si[1] == -1);
    const RayContraction rc = contract_ray(f1, 1);
    CHECK(rc.a == 1);
    CHECK(rc.b == 1);
    CHECK(rc.q == 1);
    CHECK(gamma2_surface(rc.fan) == 3);
    CHECK(gamma2_drop(f1, 1) == 3);
}

TEST_CASE("weighted contraction of the resolved weighted plane") {
    // Resolving P(1,1,2) inserts (0,-1); contracting it again is the weighted
    // blow-down with (a, b, q) = (1, 1, 2).
    const Fan res = crepant_resolution_surface(weighted_p2_112());
    REQUIRE(res.ray_count() == 4);
    CHECK(res.rays[3] == iv({0, -1}));
    const RayContraction rc = contract_ray(res, 3);
    CHECK(rc.a == 1);
    CHECK(rc.b == 1);
    CHECK(rc.q == 2);
    CHECK(gamma2_drop(res, 3) == 3);
    CHECK(gamma2_surface(rc.fan) == 3);
}

TEST_CASE("non-contractible rays are rejected") {
    for (int r = 0; r < 3; ++r) {
        CHECK_THROWS_WITH_AS(contract_ray(projective_space(2), r),
                             "not contractible", std::invalid_argument);
        CHECK_THROWS_WITH_AS(contract_ray(weighted_p2_112(), r),
                             "not contractible", std::invalid_argument);
    }
    // On P1 x P1 opposite rays are antipodal: never contractible.
    for (int r = 0; r < 4; ++r)
        CHECK_THROWS_AS(contract_ray(product_p1_p1(), r),
                        std::invalid_argument);
    CHECK_THROWS_AS(contract_ray(projective_space(2), 9),
                    std::invalid_argument);
}

TEST_CASE("crepant resolution of the weighted plane is the expected fan") {
    const Fan res = crepant_resolution_surface(weighted_p2_112());
    CHECK(res.rays[0] == iv({0, 1}));
    CHECK(res.rays[1] == iv({1, 0}));
    CHECK(res.rays[2] == iv({-1, -2}));
    CHECK(res.rays[3] == iv({0, -1}));
    const QVec si = surface_self_intersections(res);
    CHECK(si == QVec{Rat(2), Rat(0), Rat(0), Rat(-2)});
    CHECK(gamma2_surface(res) == 0);
    // gamma2 falls by twice the half-drop of a weight-(1,1) crepant curve.
    CHECK(gamma2_surface(weighted_p2_112()) - gamma2_surface(res) ==
          2 * crepant_half_drop(1, 1));
}

TEST_CASE("crepant resolution is the identity on smooth fans") {
    const Fan res = crepant_resolution_surface(projective_space(2));
    CHECK(res.ray_count() == 3);
    CHECK(gamma2_surface(res) == 3);
    const Fan resf = crepant_resolution_surface(hirzebruch(3));
    CHECK(resf.ray_count() == 4);
}

TEST_CASE("crepant resolution requires a Gorenstein fan") {
    CHECK_THROWS_WITH_AS(crepant_resolution_surface(weighted_p2_113()),
                         "fan is not Gorenstein", std::invalid_argument);
}

TEST_CASE("crepant half-drop values and monotonicity") {
    CHECK(crepant_half_drop(1, 1) == Rat(3) / 2);
    CHECK(crepant_half_drop(1, 2) == Rat(1) + Rat(1) / 2 - Rat(1) / 3);
    CHECK(crepant_half_drop(2, 3) == Rat(19) / 30);
    CHECK(crepant_half_drop(2, 3) == crepant_half_drop(3, 2));
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b) {
            const Rat v = crepant_half_drop(a, b);
            CHECK(v > 0);
            CHECK(v <= Rat(3) / 2);
            CHECK(crepant_half_drop(a + 1, b) < v);
        }
    CHECK_THROWS_AS(crepant_half_drop(0, 1), std::invalid_argument);
}
