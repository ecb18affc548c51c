#include "toricg2/report.hpp"

#include "toricg2/singularities.hpp"
#include "toricg2/walls.hpp"

#include <cstdint>
#include <cstdio>

namespace toricg2 {

const char* tool_name() { return "toricg2"; }

const char* tool_version() { return "1.0.0"; }

std::string input_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

namespace {

ordered_json provenance(const std::string& input_bytes) {
    return ordered_json{{"tool", tool_name()},
                        {"version", tool_version()},
                        {"input_hash", input_hash(input_bytes)}};
}

ordered_json gamma2_section(const Gamma2Report& rep) {
    ordered_json entries = ordered_json::array();
    for (const Gamma2Entry& e : rep.entries)
        entries.push_back(ordered_json{{"role", e.role},
                                       {"tau", e.tau},
                                       {"value", to_string(e.value)},
                                       {"sign", e.sign},
                                       {"method", e.method}});
    return ordered_json{{"verdict", rep.verdict},
                        {"detail", rep.detail},
                        {"entries", entries},
                        {"violations", rep.violations}};
}

} // namespace

ordered_json check_report(const Fan& fan, const std::string& input_bytes, bool deep) {
    ordered_json j;
    j["schema"] = "toricg2/check/1";
    j["provenance"] = provenance(input_bytes);
    j["structure"] = ordered_json{{"valid", true},
                                  {"dim", fan.dim},
                                  {"rays", fan.ray_count()},
                                  {"max_cones", fan.max_cones.size()},
                                  {"rho", fan.rho()},
                                  {"deep", deep}};

    const GorensteinReport sing = gorenstein_report(fan);
    ordered_json cones = ordered_json::array();
    for (const auto& c : sing.minimal_singular_cones) cones.push_back(c);
    j["singularities"] = ordered_json{{"terminal", sing.terminal},
                                      {"gorenstein", sing.gorenstein},
                                      {"index", to_string(sing.index)},
                                      {"singular_cones", cones}};

    const FanoReport fano = fano_report(fan);
    j["fano"] = ordered_json{{"fano", fano.fano},
                             {"min_relation_sum", to_string(fano.min_sum)},
                             {"min_wall_tau", fano.min_wall_tau}};

    j["gamma2"] = gamma2_section(classify_gamma2(fan));
    return j;
}

ordered_json gamma2_report_json(const Fan& fan, const std::vector<int>& tau,
                                const std::string& input_bytes) {
    const Rat value = gamma2_dot_quad(fan, tau);
    ordered_json j;
    j["schema"] = "toricg2/gamma2/1";
    j["provenance"] = provenance(input_bytes);
    std::vector<int> t = tau;
    std::sort(t.begin(), t.end());
    j["tau"] = t;
    j["value"] = to_string(value);
    j["sign"] = sign_of(value);
    j["note"] = "value equals gamma2 . V(tau) up to a positive rational factor; "
                "the sign is exact";
    return j;
}

ordered_json ne2_report_json(const Fan& fan, const std::string& input_bytes) {
    const Ne2Generators gen = ne2_generators(fan);
    const Rho2Structure& ch = gen.chains;

    auto ratio_list = [&](const std::vector<int>& chain, bool x_side) {
        ordered_json out = ordered_json::array();
        for (int r : chain) {
            const Rat ratio = x_side ? Rat(ch.d(r)) / Rat(ch.a(r))
                                     : Rat(ch.c(r)) / Rat(ch.b(r));
            out.push_back(to_string(ratio));
        }
        return out;
    };

    ordered_json j;
    j["schema"] = "toricg2/ne2/1";
    j["provenance"] = provenance(input_bytes);
    j["relation_x"] = relation_string(fan, ch.rel_x);
    j["relation_y"] = relation_string(fan, ch.rel_y);
    j["x_side"] = ch.x_side;
    j["y_side"] = ch.y_side;
    j["x_chain"] = ch.x_chain;
    j["x_last"] = ch.x_last;
    j["x_ratios"] = ratio_list(ch.x_chain, true);
    j["y_chain"] = ch.y_chain;
    j["y_last"] = ch.y_last;
    j["y_ratios"] = ratio_list(ch.y_chain, false);
    j["s1"] = gen.s1 ? ordered_json(*gen.s1) : ordered_json(nullptr);
    j["s2"] = gen.s2;
    j["s3"] = gen.s3 ? ordered_json(*gen.s3) : ordered_json(nullptr);
    return j;
}

ordered_json surface_report_json(const Fan& fan, const std::string& input_bytes) {
    const QVec table = surface_self_intersections(fan);
    ordered_json j;
    j["schema"] = "toricg2/surface/1";
    j["provenance"] = provenance(input_bytes);
    ordered_json rows = ordered_json::array();
    Rat total = 0;
    for (int v = 0; v < fan.ray_count(); ++v) {
        rows.push_back(ordered_json{{"ray", v}, {"self_intersection", to_string(table[v])}});
        total += table[v];
    }
    j["self_intersections"] = rows;
    j["gamma2"] = to_string(total);
    j["sign"] = sign_of(total);
    return j;
}

std::string dump_report(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace toricg2
