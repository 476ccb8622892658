#pragma once

#include <json.hpp>

#include "qcalc/verify.hpp"

namespace qc {

using ordered_json = nlohmann::ordered_json;

inline ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["status"] = r.status;
    j["order"] = r.order;
    ordered_json fr = ordered_json::object();
    for (const auto& [name, range] : r.family_ranges)
        fr[name] = ordered_json::array({range.first, range.second});
    j["family_ranges"] = fr;
    if (r.has_mismatch) {
        j["first_mismatch"] = {{"monomial", r.mm_monomial},
                               {"lhs", r.mm_lhs},
                               {"rhs", r.mm_rhs},
                               {"instance", r.mm_instance}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    j["anchor"] = r.anchor;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.expect_mismatch) j["expected_mismatch"] = true;
    return j;
}

inline ordered_json reports_to_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

/// Validates one report object against the documented schema; returns an
/// error description or the empty string.
inline std::string validate_report_json(const ordered_json& j) {
    auto need = [&](const char* key) -> std::string {
        if (!j.contains(key)) return std::string("missing field: ") + key;
        return "";
    };
    for (const char* k : {"id", "status", "order", "family_ranges", "first_mismatch",
                          "elapsed_ms", "anchor"}) {
        std::string e = need(k);
        if (!e.empty()) return e;
    }
    if (!j["id"].is_string()) return "id must be a string";
    std::string st = j["status"].get<std::string>();
    if (st != "verified" && st != "mismatch" && st != "error" && st != "skipped")
        return "bad status: " + st;
    if (!j["order"].is_number_integer()) return "order must be an integer";
    if (!j["family_ranges"].is_object()) return "family_ranges must be an object";
    for (const auto& [k, v] : j["family_ranges"].items())
        if (!v.is_array() || v.size() != 2) return "family range " + k + " must be [lo, hi]";
    const auto& fm = j["first_mismatch"];
    if (!fm.is_null()) {
        if (!fm.is_object()) return "first_mismatch must be null or object";
        for (const char* k : {"monomial", "lhs", "rhs"})
            if (!fm.contains(k) || !fm[k].is_string())
                return std::string("first_mismatch needs string field ") + k;
        if (st != "mismatch") return "first_mismatch present but status is " + st;
    } else if (st == "mismatch") {
        return "status mismatch requires first_mismatch";
    }
    if (!j["elapsed_ms"].is_number()) return "elapsed_ms must be a number";
    if (!j["anchor"].is_string()) return "anchor must be a string";
    if (st == "skipped" && (!j.contains("reason") || j["reason"].get<std::string>().empty()))
        return "skipped reports must carry a nonempty reason";
    return "";
}

}  // namespace qc
