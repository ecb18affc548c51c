#include "toricg2/toricg2.h"

#include "toricg2/catalog.hpp"
#include "toricg2/errors.hpp"
#include "toricg2/fan.hpp"
#include "toricg2/gamma2.hpp"
#include "toricg2/report.hpp"
#include "toricg2/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

struct tg2_fan {
    toricg2::Fan fan;
    std::string source;  // raw input bytes, hashed into report provenance
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** out_error, const std::string& msg) {
    if (out_error != nullptr) *out_error = dup_string(msg);
}

/// Run a callable, mapping exceptions to status codes and error text.
template <typename Fn>
tg2_status guarded(char** out_error, Fn&& fn) {
    if (out_error != nullptr) *out_error = nullptr;
    try {
        return fn();
    } catch (const toricg2::parse_error& e) {
        set_error(out_error, e.what());
        return TG2_ERR_PARSE;
    } catch (const toricg2::invalid_fan_error& e) {
        set_error(out_error, e.what());
        return TG2_ERR_INVALID_FAN;
    } catch (const toricg2::unsupported_error& e) {
        set_error(out_error, e.what());
        return TG2_ERR_UNSUPPORTED;
    } catch (const toricg2::internal_error& e) {
        set_error(out_error, e.what());
        return TG2_ERR_INTERNAL;
    } catch (const std::invalid_argument& e) {
        set_error(out_error, e.what());
        return TG2_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(out_error, e.what());
        return TG2_ERR_INTERNAL;
    }
}

std::optional<bool> deep_flag(int deep) {
    if (deep < 0) return std::nullopt;
    return deep > 0;
}

} // namespace

extern "C" {

const char* tg2_version(void) { return toricg2::tool_version(); }

void tg2_string_free(char* s) { std::free(s); }

void tg2_fan_free(tg2_fan* fan) { delete fan; }

tg2_status tg2_fan_parse_json(const char* text, tg2_fan** out_fan,
                              char** out_error) {
    if (out_fan != nullptr) *out_fan = nullptr;
    if (text == nullptr || out_fan == nullptr) {
        set_error(out_error, "null argument");
        return TG2_ERR_ARGUMENT;
    }
    return guarded(out_error, [&] {
        auto handle = std::make_unique<tg2_fan>();
        handle->source = text;
        handle->fan = toricg2::fan_from_json(handle->source);
        *out_fan = handle.release();
        return TG2_OK;
    });
}

tg2_status tg2_fan_from_catalog(const char* name, int has_param, long param,
                                tg2_fan** out_fan, char** out_error) {
    if (out_fan != nullptr) *out_fan = nullptr;
    if (name == nullptr || out_fan == nullptr) {
        set_error(out_error, "null argument");
        return TG2_ERR_ARGUMENT;
    }
    return guarded(out_error, [&] {
        auto handle = std::make_unique<tg2_fan>();
        handle->fan = toricg2::catalog_build(
            name, has_param != 0 ? std::optional<long>(param) : std::nullopt);
        handle->source = toricg2::fan_to_json(handle->fan);
        *out_fan = handle.release();
        return TG2_OK;
    });
}

tg2_status tg2_fan_emit_json(const tg2_fan* fan, char** out_json) {
    if (out_json != nullptr) *out_json = nullptr;
    if (fan == nullptr || out_json == nullptr) return TG2_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        *out_json = dup_string(toricg2::fan_to_json(fan->fan));
        return TG2_OK;
    });
}

tg2_status tg2_fan_validate(const tg2_fan* fan, int deep, char** out_json) {
    if (out_json != nullptr) *out_json = nullptr;
    if (fan == nullptr || out_json == nullptr) return TG2_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const toricg2::ValidationReport rep =
            toricg2::validate_fan(fan->fan, deep_flag(deep));
        toricg2::ordered_json j;
        j["valid"] = rep.ok;
        j["deep"] = rep.deep;
        j["errors"] = rep.errors;
        *out_json = dup_string(toricg2::dump_report(j));
        return TG2_OK;
    });
}

tg2_status tg2_check(const tg2_fan* fan, int deep, char** out_json,
                     char** out_error) {
    if (out_json != nullptr) *out_json = nullptr;
    if (fan == nullptr || out_json == nullptr) {
        set_error(out_error, "null argument");
        return TG2_ERR_ARGUMENT;
    }
    return guarded(out_error, [&] {
        const toricg2::ValidationReport rep =
            toricg2::validate_fan(fan->fan, deep_flag(deep));
        if (!rep.ok) {
            std::string joined = "invalid fan:";
            for (const std::string& e : rep.errors) joined += "\n  " + e;
            throw toricg2::invalid_fan_error(joined);
        }
        *out_json = dup_string(toricg2::dump_report(
            toricg2::check_report(fan->fan, fan->source, rep.deep)));
        return TG2_OK;
    });
}

tg2_status tg2_gamma2_tau(const tg2_fan* fan, const int* tau, size_t tau_len,
                          char** out_json, char** out_error) {
    if (out_json != nullptr) *out_json = nullptr;
    if (fan == nullptr || out_json == nullptr || (tau == nullptr && tau_len > 0)) {
        set_error(out_error, "null argument");
        return TG2_ERR_ARGUMENT;
    }
    return guarded(out_error, [&] {
        const std::vector<int> t(tau, tau + tau_len);
        *out_json = dup_string(toricg2::dump_report(
            toricg2::gamma2_report_json(fan->fan, t, fan->source)));
        return TG2_OK;
    });
}

tg2_status tg2_ne2(const tg2_fan* fan, char** out_json, char** out_error) {
    if (out_json != nullptr) *out_json = nullptr;
    if (fan == nullptr || out_json == nullptr) {
        set_error(out_error, "null argument");
        return TG2_ERR_ARGUMENT;
    }
    return guarded(out_error, [&] {
        *out_json = dup_string(toricg2::dump_report(
            toricg2::ne2_report_json(fan->fan, fan->source)));
        return TG2_OK;
    });
}

tg2_status tg2_surface(const tg2_fan* fan, char** out_json, char** out_error) {
    if (out_json != nullptr) *out_json = nullptr;
    if (fan == nullptr || out_json == nullptr) {
        set_error(out_error, "null argument");
        return TG2_ERR_ARGUMENT;
    }
    return guarded(out_error, [&] {
        *out_json = dup_string(toricg2::dump_report(
            toricg2::surface_report_json(fan->fan, fan->source)));
        return TG2_OK;
    });
}

tg2_status tg2_catalog_list(char** out_json) {
    if (out_json != nullptr) *out_json = nullptr;
    if (out_json == nullptr) return TG2_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        toricg2::ordered_json entries = toricg2::ordered_json::array();
        for (const toricg2::CatalogEntry& e : toricg2::catalog_entries())
            entries.push_back(toricg2::ordered_json{
                {"name", e.name},
                {"description", e.description},
                {"parametric", e.takes_parameter}});
        toricg2::ordered_json j;
        j["schema"] = "toricg2/catalog/1";
        j["entries"] = entries;
        *out_json = dup_string(toricg2::dump_report(j));
        return TG2_OK;
    });
}

tg2_status tg2_verify(int as_json, char** out_text, int* out_all_passed) {
    if (out_text != nullptr) *out_text = nullptr;
    if (out_all_passed != nullptr) *out_all_passed = 0;
    if (out_text == nullptr) return TG2_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const std::vector<toricg2::FixtureResult> results =
            toricg2::run_verification();
        bool all = true;
        for (const toricg2::FixtureResult& r : results) all = all && r.pass;
        if (out_all_passed != nullptr) *out_all_passed = all ? 1 : 0;
        *out_text = dup_string(
            as_json != 0
                ? toricg2::dump_report(toricg2::verification_json(results))
                : toricg2::verification_matrix(results));
        return TG2_OK;
    });
}

} // extern "C"
