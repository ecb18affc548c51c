#include <doctest.h>

#include "toricg2/catalog.hpp"
#include "toricg2/fan.hpp"

#include <algorithm>

using namespace toricg2;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("catalog fans validate and have the advertised shape") {
    CHECK(projective_space(1).ray_count() == 2);
    CHECK(projective_space(3).max_cones.size() == 4);
    CHECK(projective_space(3).rho() == 1);

    const Fan fa = hirzebruch(5);
    CHECK(fa.ray_count() == 4);
    CHECK(fa.rays[2] == iv({-1, 5}));
    CHECK(fa.rho() == 2);

    CHECK(weighted_p2_112().ray_count() == 3);
    CHECK(product_p1_p1().max_cones.size() == 4);

    for (int k = 0; k <= 3; ++k) {
        const Fan b = blowup_p2(k);
        CHECK(b.ray_count() == 3 + k);
        CHECK(static_cast<int>(b.max_cones.size()) == 3 + k);
        CHECK(b.rho() == 1 + k);
    }
    CHECK(blowup_p2(1).rays[3] == iv({1, 1}));
    CHECK(blowup_p2(2).rays[4] == iv({0, -1}));
    CHECK(blowup_p2(3).rays[5] == iv({-1, 0}));

    const Fan t4 = terminal_fano_4fold();
    CHECK(t4.dim == 4);
    CHECK(t4.ray_count() == 6);
    CHECK(t4.max_cones.size() == 9);
    CHECK(t4.rho() == 2);
    CHECK(t4.rays[4] == iv({-1, -2, -1, 0}));
    CHECK(t4.rays[5] == iv({0, -1, -2, -1}));

    for (int d = 4; d <= 8; ++d) {
        const Fan td = terminal_fano_dfold(d);
        CHECK(td.dim == d);
        CHECK(td.ray_count() == d + 2);
        CHECK(static_cast<int>(td.max_cones.size()) == 2 * d);
        CHECK(td.rho() == 2);
    }
    const Fan t5 = terminal_fano_dfold(5);
    CHECK(t5.rays[3] == iv({-1, -1, -1, -3, 0}));
    CHECK(t5.rays[4] == iv({0, 0, 0, 1, 0}));
    CHECK(t5.rays[5] == iv({0, 0, 0, -1, -1}));
    CHECK(t5.rays[6] == iv({0, 0, 0, 0, 1}));

    const Fan g3 = gorenstein_fano_3fold();
    CHECK(g3.dim == 3);
    CHECK(g3.ray_count() == 5);
    CHECK(g3.max_cones.size() == 6);
    CHECK(g3.rho() == 2);
}

TEST_CASE("builder parameter validation") {
    CHECK_THROWS_AS(projective_space(0), std::invalid_argument);
    CHECK_THROWS_AS(hirzebruch(-1), std::invalid_argument);
    CHECK_THROWS_AS(blowup_p2(-1), std::invalid_argument);
    CHECK_THROWS_AS(blowup_p2(4), std::invalid_argument);
    CHECK_THROWS_AS(terminal_fano_dfold(3), std::invalid_argument);
}

TEST_CASE("catalog entry table") {
    const auto& entries = catalog_entries();
    REQUIRE(entries.size() == 8);
    CHECK(entries[0].name == "projective-space");
    CHECK(entries[0].takes_parameter);
    CHECK(entries[2].name == "weighted-p2-112");
    CHECK(!entries[2].takes_parameter);
    for (const auto& e : entries) CHECK(!e.description.empty());
}

TEST_CASE("catalog_build dispatches by name") {
    CHECK(catalog_build("projective-space", 2).ray_count() == 3);
    CHECK(catalog_build("hirzebruch", 3).rays[2] == iv({-1, 3}));
    CHECK(catalog_build("weighted-p2-112").ray_count() == 3);
    CHECK(catalog_build("p1xp1").ray_count() == 4);
    CHECK(catalog_build("blowup-p2", 2).ray_count() == 5);
    CHECK(catalog_build("terminal-fano-4fold").ray_count() == 6);
    CHECK(catalog_build("terminal-fano-dfold", 6).dim == 6);
    CHECK(catalog_build("gorenstein-fano-3fold").ray_count() == 5);
}

TEST_CASE("catalog_build rejects bad requests") {
    CHECK_THROWS_WITH_AS(catalog_build("no-such-fan"),
                         "unknown catalog fan: no-such-fan",
                         std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("hirzebruch"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("p1xp1", 1), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("projective-space", 0),
                    std::invalid_argument);
}

TEST_CASE("catalog fans survive a JSON round-trip") {
    for (const auto& entry : catalog_entries()) {
        std::optional<long> param;
        if (entry.takes_parameter)
            param = entry.name == "blowup-p2" ? 2 : 4;
        const Fan f = catalog_build(entry.name, param);
        const std::string text = fan_to_json(f);
        const Fan g = fan_from_json(text);
        CHECK(g.dim == f.dim);
        CHECK(g.rays == f.rays);
        CHECK(g.max_cones == f.max_cones);
        CHECK(fan_to_json(g) == text);
    }
}
