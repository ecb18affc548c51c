#include <doctest.h>

#include "toricg2/catalog.hpp"
#include "toricg2/report.hpp"

using namespace toricg2;

TEST_CASE("input hashing is the reference FNV-1a") {
    CHECK(input_hash("") == "fnv1a64:cbf29ce484222325");
    // One-byte avalanche: hashing "a" must differ from hashing "b".
    CHECK(input_hash("a") != input_hash("b"));
    CHECK(input_hash("a") == input_hash("a"));
}

TEST_CASE("check report carries every section") {
    const Fan f = terminal_fano_4fold();
    const ordered_json j = check_report(f, fan_to_json(f), true);
    CHECK(j["schema"] == "toricg2/check/1");
    CHECK(j["provenance"]["tool"] == "toricg2");
    CHECK(j["provenance"]["version"] == "1.0.0");
    CHECK(j["structure"]["valid"] == true);
    CHECK(j["structure"]["dim"] == 4);
    CHECK(j["structure"]["rays"] == 6);
    CHECK(j["structure"]["max_cones"] == 9);
    CHECK(j["structure"]["rho"] == 2);
    CHECK(j["singularities"]["terminal"] == true);
    CHECK(j["singularities"]["gorenstein"] == false);
    CHECK(j["singularities"]["index"] == "6");
    CHECK(j["singularities"]["singular_cones"].size() == 3);
    CHECK(j["fano"]["fano"] == true);
    CHECK(j["fano"]["min_relation_sum"] == "5");
    CHECK(j["gamma2"]["verdict"] == "positive");
    CHECK(j["gamma2"]["violations"].empty());
    REQUIRE(j["gamma2"]["entries"].size() == 3);
    CHECK(j["gamma2"]["entries"][1]["role"] == "S2");
    CHECK(j["gamma2"]["entries"][1]["value"] == "8");
    CHECK(j["gamma2"]["entries"][1]["sign"] == 1);
}

TEST_CASE("reports are deterministic byte for byte") {
    const Fan f = gorenstein_fano_3fold();
    const std::string text = fan_to_json(f);
    CHECK(dump_report(check_report(f, text, true)) ==
          dump_report(check_report(f, text, true)));
    CHECK(dump_report(ne2_report_json(f, text)) ==
          dump_report(ne2_report_json(f, text)));
    const std::string dumped = dump_report(check_report(f, text, true));
    CHECK(dumped.back() == '\n');
}

TEST_CASE("gamma2 report fields") {
    const Fan f = terminal_fano_4fold();
    const ordered_json j = gamma2_report_json(f, {5, 4}, "input");
    CHECK(j["schema"] == "toricg2/gamma2/1");
    CHECK(j["tau"] == std::vector<int>{4, 5});  // sorted on output
    CHECK(j["value"] == "8");
    CHECK(j["sign"] == 1);
    CHECK(j["note"].get<std::string>().find("sign is exact") !=
          std::string::npos);
}

TEST_CASE("ne2 report fields") {
    const Fan f = terminal_fano_4fold();
    const ordered_json j = ne2_report_json(f, "x");
    CHECK(j["schema"] == "toricg2/ne2/1");
    CHECK(j["relation_x"] == "2*x1 + 3*x2 + 2*x5 = x4 + x6");
    CHECK(j["relation_y"] == "3*x3 + 2*x4 + 2*x6 = x1 + x5");
    CHECK(j["x_side"] == std::vector<int>{0, 1, 4});
    CHECK(j["y_side"] == std::vector<int>{2, 3, 5});
    CHECK(j["x_last"] == 1);
    CHECK(j["y_last"] == 2);
    CHECK(j["x_ratios"] == std::vector<std::string>{"1/2", "1/2"});
    CHECK(j["s1"] == std::vector<int>{0, 4});
    CHECK(j["s2"] == std::vector<int>{4, 5});
    CHECK(j["s3"] == std::vector<int>{3, 5});

    // Absent generators are JSON null, not empty arrays.
    const ordered_json k = ne2_report_json(terminal_fano_dfold(4), "y");
    CHECK(k["s1"].is_null());
    CHECK(k["s2"] == std::vector<int>{1, 2});
    CHECK(k["s3"] == std::vector<int>{2, 4});
}

TEST_CASE("surface report fields") {
    const ordered_json j = surface_report_json(hirzebruch(2), "h");
    CHECK(j["schema"] == "toricg2/surface/1");
    REQUIRE(j["self_intersections"].size() == 4);
    CHECK(j["self_intersections"][1]["ray"] == 1);
    CHECK(j["self_intersections"][1]["self_intersection"] == "-2");
    CHECK(j["gamma2"] == "0");
    CHECK(j["sign"] == 0);

    const ordered_json w = surface_report_json(weighted_p2_112(), "w");
    CHECK(w["self_intersections"][1]["self_intersection"] == "1/2");
    CHECK(w["gamma2"] == "3");
    CHECK(w["sign"] == 1);
}
