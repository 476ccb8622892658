// qcalc: expand the polynomial/series families and verify the registered
// identities from the command line. Exit codes: 0 success, 1 unexpected
// mismatch or builder error, 2 usage / unknown identity, 3 scale
// unavailable for the requested expansion.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "qcalc/json_report.hpp"
#include "qcalc/registry.hpp"
#include "qcalc/render.hpp"

using namespace qc;

namespace {

int run_list(const std::string& filter, bool json) {
    ordered_json arr = ordered_json::array();
    int count = 0;
    for (const auto& spec : registry()) {
        if (!filter.empty() && spec.id.rfind(filter, 0) != 0) continue;
        ++count;
        if (json) {
            ordered_json j;
            j["id"] = spec.id;
            j["section"] = spec.section;
            j["anchor"] = spec.anchor;
            j["required_scale"] = spec.required_scale;
            j["default_order"] = spec.default_order;
            if (spec.expect_mismatch) j["expected_mismatch"] = true;
            if (!spec.note.empty()) j["note"] = spec.note;
            ordered_json fam = ordered_json::object();
            for (const auto& p : spec.family)
                fam[p.name] = ordered_json::array({p.lo, p.hi});
            j["family_ranges"] = fam;
            arr.push_back(j);
        } else {
            std::cout << spec.id;
            if (spec.required_scale > 1) std::cout << "  [scale " << spec.required_scale << "]";
            if (spec.expect_mismatch) std::cout << "  [documented mismatch]";
            std::cout << "\n    " << spec.section << ": " << spec.anchor << "\n";
        }
    }
    if (json)
        std::cout << arr.dump(2) << "\n";
    else
        std::cout << count << " identities\n";
    return 0;
}

void print_report_text(const VerificationReport& r) {
    // Claims are about formal coefficients only, so "verified to order N",
    // never anything analytic.
    if (r.status == "verified")
        std::cout << r.id << ": verified to order " << r.order;
    else
        std::cout << r.id << ": " << r.status << " (order " << r.order << ")";
    if (r.status == "mismatch" && r.expect_mismatch) std::cout << "  [documented]";
    std::cout << "\n";
    if (r.has_mismatch) {
        std::cout << "    first mismatch at " << r.mm_monomial;
        if (!r.mm_instance.empty()) std::cout << "  (" << r.mm_instance << ")";
        std::cout << "\n    lhs: " << r.mm_lhs << "\n    rhs: " << r.mm_rhs << "\n";
    }
    if (!r.reason.empty()) std::cout << "    reason: " << r.reason << "\n";
}

int finish_reports(const std::vector<VerificationReport>& reports, bool json) {
    if (json) {
        std::cout << reports_to_json(reports).dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_text(r);
        auto s = summarize(reports);
        std::cout << "verified " << s.verified << ", skipped " << s.skipped
                  << ", documented mismatches " << s.expected_mismatches << ", failures "
                  << s.mismatched + s.errors << "\n";
    }
    return summarize(reports).all_acceptable ? 0 : 1;
}

LaurentPoly parse_monomial_token(const Context& ctx, const std::string& tok) {
    // Accepts: 0, 1, q, q^k (k possibly negative), sqrt(q), declared symbol
    // names, and any of those with a leading minus.
    if (tok == "0") return LaurentPoly::zero(ctx);
    if (tok == "1") return LaurentPoly::one(ctx);
    std::string t = tok;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    LaurentPoly p(ctx);
    if (t == "q") {
        p = LaurentPoly::qpow(ctx, 1);
    } else if (t == "sqrt(q)") {
        p = LaurentPoly::qpow_half(ctx, 1);
    } else if (t.rfind("q^", 0) == 0) {
        p = LaurentPoly::qpow(ctx, std::stol(t.substr(2)));
    } else if (ctx->has(t)) {
        p = LaurentPoly::var(ctx, t);
    } else {
        throw CLI::ValidationError("cannot parse parameter token: " + tok);
    }
    return neg ? -p : p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qcalc: exact q-series kernel. Expands the deformed polynomial "
        "families and machine-verifies the registered identities as exact "
        "equalities of truncated formal power series."};
    app.require_subcommand(1);

    // ---- list --------------------------------------------------------------
    auto* list_cmd = app.add_subcommand("list", "List registered identities");
    std::string list_filter;
    bool list_json = false;
    list_cmd->add_option("filter", list_filter, "Only ids starting with this prefix");
    list_cmd->add_flag("--json", list_json, "JSON output");

    // ---- expand ------------------------------------------------------------
    auto* expand_cmd = app.add_subcommand(
        "expand", "Expand a named polynomial or series in canonical form");
    std::string what;
    long exp_n = 2;
    long exp_order = 6;
    int exp_scale = 1;
    std::string exp_u = "u";
    std::vector<std::string> exp_upper, exp_lower;
    expand_cmd
        ->add_option("what", what,
                     "One of: rn, rn2, hn, hn-qinv, sw, cauchy, exton, eq_deformed, phi")
        ->required();
    expand_cmd->add_option("-n,--degree", exp_n, "Polynomial degree n");
    expand_cmd->add_option("-N,--order", exp_order, "Series truncation order");
    expand_cmd->add_option("--scale", exp_scale,
                           "Base scale (2 enables half-integer q-powers); default 1 for "
                           "cleaner rendering");
    expand_cmd->add_option("--u", exp_u, "Deformation token (u, 0, 1, q, q^k, sqrt(q))");
    expand_cmd->add_option("--upper", exp_upper, "phi: upper parameter tokens");
    expand_cmd->add_option("--lower", exp_lower, "phi: lower parameter tokens");

    // ---- verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Verify identities exactly");
    std::vector<std::string> verify_ids;
    bool verify_all_flag = false, verify_json = false;
    long verify_order = -1;
    int verify_scale = 2;  // scale 2 so the Exton entries run
    int verify_jobs = 1;
    std::string verify_filter;
    std::vector<std::string> verify_ranges;
    verify_cmd->add_option("ids", verify_ids, "Identity ids");
    verify_cmd->add_flag("--all", verify_all_flag, "Verify the whole registry");
    verify_cmd->add_option("--order", verify_order, "Truncation order (default per entry)");
    verify_cmd->add_option("--scale", verify_scale,
                           "Base scale; scale 2 (default) runs the sqrt(q) families");
    verify_cmd->add_flag("--json", verify_json, "JSON report on stdout");
    verify_cmd->add_option("--jobs", verify_jobs, "Concurrent verifications")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--filter", verify_filter, "Id prefix filter (with --all)");
    verify_cmd->add_option("--range", verify_ranges,
                           "Family range override, e.g. --range n=0..6");

    // verify-all is a convenience alias for `verify --all`.
    auto* verify_all_cmd = app.add_subcommand("verify-all", "Verify the whole registry");
    bool va_json = false;
    long va_order = -1;
    int va_scale = 2, va_jobs = 1;
    std::string va_filter;
    std::vector<std::string> va_ranges;
    verify_all_cmd->add_option("--order", va_order, "Truncation order");
    verify_all_cmd->add_option("--scale", va_scale, "Base scale (default 2)");
    verify_all_cmd->add_flag("--json", va_json, "JSON report");
    verify_all_cmd->add_option("--jobs", va_jobs, "Concurrent verifications")
        ->check(CLI::PositiveNumber);
    verify_all_cmd->add_option("--filter", va_filter, "Id prefix filter");
    verify_all_cmd->add_option("--range", va_ranges, "Family range override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) return run_list(list_filter, list_json);

        if (expand_cmd->parsed()) {
            ContextBuilder cb(exp_scale);
            cb.param("x").param("y").param("u").param("v").param("a").param("b").small("z");
            Context ctx = cb.build();
            auto X = LaurentPoly::var(ctx, "x");
            auto Y = LaurentPoly::var(ctx, "y");
            auto U = LaurentPoly::var(ctx, "u");
            auto V = LaurentPoly::var(ctx, "v");
            auto Z = LaurentPoly::var(ctx, "z");
            if (what == "rn") {
                std::cout << render(r_poly({exp_n, X, Y, U, V})) << "\n";
            } else if (what == "rn2") {
                std::cout << render(r_upoly(exp_n, X, Y, U)) << "\n";
            } else if (what == "hn") {
                std::cout << render(rogers_szego_h(exp_n, X)) << "\n";
            } else if (what == "hn-qinv") {
                std::cout << render(rogers_szego_h_qinv(exp_n, X)) << "\n";
            } else if (what == "sw") {
                std::cout << render(stieltjes_wigert_s(exp_n, X)) << "\n";
            } else if (what == "cauchy") {
                std::cout << render(cauchy_p(exp_n, X, Y)) << "\n";
            } else if (what == "exton") {
                std::cout << render(exton_e(exp_n, X, Y)) << "\n";
            } else if (what == "eq_deformed") {
                SeriesCtx sc{ctx, {ctx->id_of("z")}, exp_order};
                auto u = parse_monomial_token(ctx, exp_u);
                std::cout << render(eq_deformed(Z, u, sc)) << "\n";
            } else if (what == "phi") {
                SeriesCtx sc{ctx, {ctx->id_of("z")}, exp_order};
                std::vector<LaurentPoly> upper, lower;
                for (const auto& tok : exp_upper)
                    upper.push_back(parse_monomial_token(ctx, tok));
                for (const auto& tok : exp_lower)
                    lower.push_back(parse_monomial_token(ctx, tok));
                HyperSpec spec{std::move(upper), std::move(lower),
                               LaurentPoly::qpow(ctx, 1),
                               parse_monomial_token(ctx, exp_u), Z};
                std::cout << render(phi_deformed(spec, sc)) << "\n";
            } else {
                std::cerr << "unknown expand target: " << what << "\n";
                return 2;
            }
            return 0;
        }

        const bool alias = verify_all_cmd->parsed();
        if (verify_cmd->parsed() || alias) {
            VerifyConfig cfg;
            cfg.order = alias ? va_order : verify_order;
            cfg.scale = alias ? va_scale : verify_scale;
            cfg.jobs = alias ? va_jobs : verify_jobs;
            bool json = alias ? va_json : verify_json;
            std::string filter = alias ? va_filter : verify_filter;
            const auto& ranges = alias ? va_ranges : verify_ranges;
            for (const auto& r : ranges) {
                auto eq_pos = r.find('=');
                auto dots = r.find("..");
                if (eq_pos == std::string::npos || dots == std::string::npos ||
                    dots < eq_pos) {
                    std::cerr << "bad --range (want name=lo..hi): " << r << "\n";
                    return 2;
                }
                cfg.range_overrides[r.substr(0, eq_pos)] = {
                    std::stol(r.substr(eq_pos + 1, dots - eq_pos - 1)),
                    std::stol(r.substr(dots + 2))};
            }
            std::vector<VerificationReport> reports;
            if (alias || verify_all_flag || !filter.empty()) {
                reports = verify_all(registry(), cfg, filter);
            } else {
                if (verify_ids.empty()) {
                    std::cerr << "verify needs identity ids or --all\n";
                    return 2;
                }
                for (const auto& id : verify_ids) {
                    try {
                        reports.push_back(verify(get_identity(id), cfg));
                    } catch (const UnknownIdentity& e) {
                        std::cerr << e.what() << "\n";
                        return 2;
                    }
                }
            }
            return finish_reports(reports, json);
        }
    } catch (const ScaleUnavailable& e) {
        std::cerr << "ScaleUnavailable: " << e.what() << "\n";
        return 3;
    } catch (const QcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
