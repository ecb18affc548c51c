/// @file main.cpp
/// @brief Command-line front end for the toricg2 shared library.
///
/// Exit codes: 0 = analysis completed (whatever the verdict), 2 = input
/// error (unreadable/malformed/invalid input, unsupported request),
/// 3 = internal invariant violation (including failed cited positivity).

#include "toricg2/toricg2.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

/// Owning wrapper for strings returned by the C API.
struct CString {
    char* ptr = nullptr;
    ~CString() { tg2_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

/// Owning wrapper for fan handles.
struct FanHandle {
    tg2_fan* ptr = nullptr;
    ~FanHandle() { tg2_fan_free(ptr); }
};

int exit_code_for(tg2_status status) {
    switch (status) {
        case TG2_OK:
            return kExitOk;
        case TG2_ERR_INTERNAL:
            return kExitInternal;
        default:
            return kExitInput;
    }
}

int fail(tg2_status status, const CString& error, const char* what) {
    std::cerr << "error: " << what;
    if (!error.str().empty()) std::cerr << ": " << error.str();
    std::cerr << "\n";
    return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

/// Parse a fan file into a handle; on failure prints a diagnostic and
/// stores the exit code.
bool load_fan(const std::string& path, FanHandle& fan, int& code) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        code = kExitInput;
        return false;
    }
    CString err;
    const tg2_status st = tg2_fan_parse_json(text.c_str(), &fan.ptr, &err.ptr);
    if (st != TG2_OK) {
        code = fail(st, err, "cannot parse fan file");
        return false;
    }
    return true;
}

std::string ray_name(int index) { return "x" + std::to_string(index + 1); }

std::string cone_name(const json& indices) {
    std::string out = "cone(";
    bool first = true;
    for (const auto& i : indices) {
        if (!first) out += ",";
        out += ray_name(i.get<int>());
        first = false;
    }
    return out + ")";
}

void print_check_human(const json& j) {
    const json& s = j.at("structure");
    std::cout << "structure: dim " << s.at("dim").get<int>() << ", "
              << s.at("rays").get<int>() << " rays, "
              << s.at("max_cones").get<int>() << " maximal cones, rho = "
              << s.at("rho").get<int>() << " (valid"
              << (s.at("deep").get<bool>() ? ", deep validation" : "") << ")\n";

    const json& g = j.at("singularities");
    std::cout << "singularities: " << (g.at("terminal").get<bool>() ? "terminal" : "not terminal")
              << ", " << (g.at("gorenstein").get<bool>() ? "Gorenstein" : "not Gorenstein")
              << " (index " << g.at("index").get<std::string>() << ")";
    if (!g.at("singular_cones").empty()) {
        std::cout << ", singular locus:";
        for (const auto& c : g.at("singular_cones")) std::cout << " " << cone_name(c);
    }
    std::cout << "\n";

    const json& f = j.at("fano");
    std::cout << "fano: " << (f.at("fano").get<bool>() ? "yes" : "no")
              << " (min wall relation sum " << f.at("min_relation_sum").get<std::string>()
              << ")\n";

    const json& gamma = j.at("gamma2");
    std::cout << "gamma2 verdict: " << gamma.at("verdict").get<std::string>() << "\n";
    std::cout << "  " << gamma.at("detail").get<std::string>() << "\n";
    for (const auto& e : gamma.at("entries")) {
        std::cout << "  " << e.at("role").get<std::string>() << " "
                  << cone_name(e.at("tau")) << ": value "
                  << e.at("value").get<std::string>() << " (sign "
                  << e.at("sign").get<int>() << ", "
                  << e.at("method").get<std::string>() << ")\n";
    }
    for (const auto& v : gamma.at("violations"))
        std::cout << "  VIOLATION: " << v.get<std::string>() << "\n";
}

int cmd_check(const std::string& path, bool json_mode, bool deep) {
    FanHandle fan;
    int code = kExitOk;
    if (!load_fan(path, fan, code)) return code;

    CString vjson;
    tg2_status st = tg2_fan_validate(fan.ptr, deep ? 1 : -1, &vjson.ptr);
    if (st != TG2_OK) return fail(st, CString{}, "validation failed to run");
    const json v = json::parse(vjson.str());
    if (!v.at("valid").get<bool>()) {
        if (json_mode) {
            json out{{"schema", "toricg2/check/1"},
                     {"structure", json{{"valid", false}, {"errors", v.at("errors")}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "error: invalid fan:\n";
            for (const auto& e : v.at("errors"))
                std::cerr << "  - " << e.get<std::string>() << "\n";
        }
        return kExitInput;
    }

    CString report, err;
    st = tg2_check(fan.ptr, deep ? 1 : -1, &report.ptr, &err.ptr);
    if (st != TG2_OK) return fail(st, err, "check failed");
    const json rep = json::parse(report.str());
    if (json_mode)
        std::cout << report.str();
    else
        print_check_human(rep);
    if (!rep.at("gamma2").at("violations").empty()) return kExitInternal;
    return kExitOk;
}

int cmd_gamma2(const std::string& path, const std::string& tau_arg, bool json_mode) {
    FanHandle fan;
    int code = kExitOk;
    if (!load_fan(path, fan, code)) return code;

    std::vector<int> tau;
    std::stringstream ss(tau_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            tau.push_back(v);
        } catch (const std::exception&) {
            std::cerr << "error: --tau expects comma-separated ray indices, got '"
                      << item << "'\n";
            return kExitInput;
        }
    }

    CString report, err;
    const tg2_status st = tg2_gamma2_tau(fan.ptr, tau.data(), tau.size(),
                                         &report.ptr, &err.ptr);
    if (st != TG2_OK) return fail(st, err, "gamma2 evaluation failed");
    const json rep = json::parse(report.str());
    if (json_mode) {
        std::cout << report.str();
    } else {
        std::cout << "gamma2 value on " << cone_name(rep.at("tau")) << " = "
                  << rep.at("value").get<std::string>() << " (sign "
                  << rep.at("sign").get<int>() << ")\n";
        std::cout << "note: " << rep.at("note").get<std::string>() << "\n";
    }
    return kExitOk;
}

int cmd_ne2(const std::string& path, bool json_mode) {
    FanHandle fan;
    int code = kExitOk;
    if (!load_fan(path, fan, code)) return code;

    CString report, err;
    const tg2_status st = tg2_ne2(fan.ptr, &report.ptr, &err.ptr);
    if (st != TG2_OK) return fail(st, err, "ne2 analysis failed");
    if (json_mode) {
        std::cout << report.str();
        return kExitOk;
    }
    const json rep = json::parse(report.str());
    auto names = [](const json& list) {
        std::string out;
        for (const auto& i : list) {
            if (!out.empty()) out += ", ";
            out += ray_name(i.get<int>());
        }
        return out.empty() ? std::string("(none)") : out;
    };
    std::cout << "extremal relations:\n";
    std::cout << "  R1: " << rep.at("relation_x").get<std::string>() << "\n";
    std::cout << "  R2: " << rep.at("relation_y").get<std::string>() << "\n";
    std::cout << "x side: {" << names(rep.at("x_side")) << "}, distinguished "
              << ray_name(rep.at("x_last").get<int>()) << "\n";
    std::cout << "y side: {" << names(rep.at("y_side")) << "}, distinguished "
              << ray_name(rep.at("y_last").get<int>()) << "\n";
    auto chain_line = [&](const char* label, const json& chain, const json& ratios) {
        std::cout << label << ": " << names(chain);
        if (!chain.empty()) {
            std::cout << "  (ratios";
            for (const auto& r : ratios) std::cout << " " << r.get<std::string>();
            std::cout << ")";
        }
        std::cout << "\n";
    };
    chain_line("x chain (sorted)", rep.at("x_chain"), rep.at("x_ratios"));
    chain_line("y chain (sorted)", rep.at("y_chain"), rep.at("y_ratios"));
    auto gen_line = [&](const char* label, const json& g) {
        std::cout << label << ": ";
        if (g.is_null())
            std::cout << "absent\n";
        else
            std::cout << cone_name(g) << "\n";
    };
    gen_line("S1", rep.at("s1"));
    gen_line("S2", rep.at("s2"));
    gen_line("S3", rep.at("s3"));
    return kExitOk;
}

int cmd_surface(const std::string& path, bool json_mode) {
    FanHandle fan;
    int code = kExitOk;
    if (!load_fan(path, fan, code)) return code;

    CString report, err;
    const tg2_status st = tg2_surface(fan.ptr, &report.ptr, &err.ptr);
    if (st != TG2_OK) return fail(st, err, "surface analysis failed");
    if (json_mode) {
        std::cout << report.str();
        return kExitOk;
    }
    const json rep = json::parse(report.str());
    for (const auto& row : rep.at("self_intersections"))
        std::cout << "D_" << (row.at("ray").get<int>() + 1)
                  << "^2 = " << row.at("self_intersection").get<std::string>() << "\n";
    std::cout << "gamma2 = " << rep.at("gamma2").get<std::string>() << " (sign "
              << rep.at("sign").get<int>() << ")\n";
    return kExitOk;
}

int cmd_catalog_list(bool json_mode) {
    CString listing;
    const tg2_status st = tg2_catalog_list(&listing.ptr);
    if (st != TG2_OK) return fail(st, CString{}, "catalog listing failed");
    if (json_mode) {
        std::cout << listing.str();
        return kExitOk;
    }
    const json j = json::parse(listing.str());
    for (const auto& e : j.at("entries")) {
        std::cout << e.at("name").get<std::string>();
        if (e.at("parametric").get<bool>()) std::cout << " <param>";
        std::cout << " - " << e.at("description").get<std::string>() << "\n";
    }
    return kExitOk;
}

int cmd_catalog_emit(const std::string& name, bool has_param, long param,
                     const std::string& out_path) {
    FanHandle fan;
    CString err;
    tg2_status st = tg2_fan_from_catalog(name.c_str(), has_param ? 1 : 0, param,
                                         &fan.ptr, &err.ptr);
    if (st != TG2_OK) return fail(st, err, "cannot build catalog fan");
    CString text;
    st = tg2_fan_emit_json(fan.ptr, &text.ptr);
    if (st != TG2_OK) return fail(st, CString{}, "cannot emit fan");
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInput;
        }
        out << text.str();
    }
    return kExitOk;
}

int cmd_verify(bool json_mode) {
    CString text;
    int all_passed = 0;
    const tg2_status st = tg2_verify(json_mode ? 1 : 0, &text.ptr, &all_passed);
    if (st != TG2_OK) return fail(st, CString{}, "verification failed to run");
    std::cout << text.str();
    return all_passed != 0 ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gamma2 positivity analyzer for complete simplicial fans"};
    app.set_version_flag("--version", std::string(tg2_version()));
    app.require_subcommand(1);

    std::string path, tau_arg, emit_name, emit_out;
    bool json_mode = false, deep = false;
    long param = 0;

    CLI::App* check = app.add_subcommand("check", "full analysis report");
    check->add_option("fan-file", path, "fan JSON file")->required();
    check->add_flag("--json", json_mode, "machine-readable output");
    check->add_flag("--deep", deep, "force the pairwise cone-separation check");

    CLI::App* gamma2 = app.add_subcommand(
        "gamma2", "gamma2 value on a quadrilateral-star cone");
    gamma2->add_option("fan-file", path, "fan JSON file")->required();
    gamma2->add_option("--tau", tau_arg, "comma-separated ray indices (0-based)")
        ->required();
    gamma2->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* ne2 = app.add_subcommand(
        "ne2", "effective 2-cycle generators for Picard number 2");
    ne2->add_option("fan-file", path, "fan JSON file")->required();
    ne2->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* surface = app.add_subcommand(
        "surface", "divisor self-intersections and gamma2 for surfaces");
    surface->add_option("fan-file", path, "fan JSON file")->required();
    surface->add_flag("--json", json_mode, "machine-readable output");

    CLI::App* catalog = app.add_subcommand("catalog", "built-in example fans");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "list catalog entries");
    cat_list->add_flag("--json", json_mode, "machine-readable output");
    CLI::App* cat_emit = catalog->add_subcommand("emit", "emit a catalog fan");
    cat_emit->add_option("name", emit_name, "catalog entry name")->required();
    CLI::Option* param_opt =
        cat_emit->add_option("--param", param, "integer parameter");
    cat_emit->add_option("-o,--output", emit_out, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the built-in verification suite");
    verify->add_flag("--json", json_mode, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (check->parsed()) return cmd_check(path, json_mode, deep);
    if (gamma2->parsed()) return cmd_gamma2(path, tau_arg, json_mode);
    if (ne2->parsed()) return cmd_ne2(path, json_mode);
    if (surface->parsed()) return cmd_surface(path, json_mode);
    if (catalog->parsed()) {
        if (cat_list->parsed()) return cmd_catalog_list(json_mode);
        return cmd_catalog_emit(emit_name, param_opt->count() > 0, param, emit_out);
    }
    if (verify->parsed()) return cmd_verify(json_mode);
    return kExitInput;
}
