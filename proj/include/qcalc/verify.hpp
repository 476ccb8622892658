#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "qcalc/render.hpp"
#include "qcalc/series.hpp"

namespace qc {

struct FamilyParam {
    std::string name;
    long lo, hi;  // inclusive
};

/// Outcome of one comparison instance.
struct CheckResult {
    bool ok = true;
    std::string monomial;  // first mismatching monomial (rendered)
    std::string lhs, rhs;  // rendered coefficients at that monomial
    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string mono, std::string l, std::string r) {
        return {false, std::move(mono), std::move(l), std::move(r)};
    }
};

inline CheckResult compare_series(const TruncatedSeries& l, const TruncatedSeries& r) {
    auto mm = l.first_mismatch(r);
    if (!mm) return CheckResult::pass();
    return CheckResult::fail(render_mono(l.ctx(), mm->monomial), render(mm->lhs),
                             render(mm->rhs));
}

inline CheckResult compare_polys(const LaurentPoly& l, const LaurentPoly& r) {
    LaurentPoly diff = l - r;
    if (diff.is_zero()) return CheckResult::pass();
    auto terms = diff.sorted_terms();
    const Mono& m = terms.front().first;
    LaurentPoly lc(l.ctx()), rc(l.ctx());
    for (const auto& [mm, cc] : l.terms())
        if (mm == m) lc.add_term(mm, cc);
    for (const auto& [mm, cc] : r.terms())
        if (mm == m) rc.add_term(mm, cc);
    return CheckResult::fail(render_mono(l.ctx(), m), render(lc), render(rc));
}

inline CheckResult compare_rationals(const RationalExpr& l, const RationalExpr& r) {
    if (l.equals(r)) return CheckResult::pass();
    return CheckResult::fail("1", render(l), render(r));
}

inline CheckResult expect_zero_poly(const LaurentPoly& p) {
    return compare_polys(p, LaurentPoly::zero(p.ctx()));
}

inline CheckResult expect_zero_series(const TruncatedSeries& s) {
    return compare_series(s, TruncatedSeries::zero(s.ctx(), s.smalls(), s.order()));
}

using Instance = std::map<std::string, long>;

/// A registered statement: builders for both sides plus the metadata the
/// reports carry. `run` is called once per family instance and performs the
/// comparison itself.
struct IdentitySpec {
    std::string id;
    std::string section;
    std::string anchor;  // verbatim source anchor
    std::string note;    // commentary, e.g. documented discrepancies of printed forms
    int required_scale = 1;
    bool expect_mismatch = false;
    long default_order = 8;
    std::vector<FamilyParam> family;
    std::function<Context(int scale)> make_ctx;
    std::function<CheckResult(const Context&, const Instance&, long order)> run;
};

struct VerifyConfig {
    long order = -1;  // -1 means "entry default"
    int scale = 2;
    std::map<std::string, std::pair<long, long>> range_overrides;
    int jobs = 1;
    double time_budget_ms = 0;  // 0 = unlimited
};

struct VerificationReport {
    std::string id;
    std::string status;  // verified | mismatch | error | skipped
    long order = 0;
    std::vector<std::pair<std::string, std::pair<long, long>>> family_ranges;
    bool has_mismatch = false;
    std::string mm_monomial, mm_lhs, mm_rhs, mm_instance;
    double elapsed_ms = 0;
    std::string anchor;
    std::string note;
    std::string reason;  // for skipped / error
    bool expect_mismatch = false;

    /// True when this report should not fail a run: verified, skipped, or a
    /// mismatch that the registry documents as expected.
    bool acceptable() const {
        if (status == "verified" || status == "skipped") return true;
        if (status == "mismatch" && expect_mismatch) return true;
        return false;
    }
};

namespace verify_detail {

inline std::string instance_string(const Instance& inst) {
    std::string s;
    for (const auto& [k, v] : inst) {
        if (!s.empty()) s += ",";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

inline void enumerate(const std::vector<FamilyParam>& family,
                      const std::map<std::string, std::pair<long, long>>& overrides,
                      const std::function<bool(const Instance&)>& fn) {
    std::vector<FamilyParam> eff = family;
    for (auto& p : eff) {
        auto it = overrides.find(p.name);
        if (it != overrides.end()) {
            p.lo = it->second.first;
            p.hi = it->second.second;
        }
    }
    Instance inst;
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == eff.size()) return fn(inst);
        for (long v = eff[i].lo; v <= eff[i].hi; ++v) {
            inst[eff[i].name] = v;
            if (!go(i + 1)) return false;
        }
        return true;
    };
    go(0);
}

}  // namespace verify_detail

inline VerificationReport verify(const IdentitySpec& spec, const VerifyConfig& cfg) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    VerificationReport rep;
    rep.id = spec.id;
    rep.anchor = spec.anchor;
    rep.note = spec.note;
    rep.expect_mismatch = spec.expect_mismatch;
    rep.order = cfg.order >= 0 ? cfg.order : spec.default_order;
    for (const auto& p : spec.family) {
        auto it = cfg.range_overrides.find(p.name);
        if (it != cfg.range_overrides.end())
            rep.family_ranges.push_back({p.name, it->second});
        else
            rep.family_ranges.push_back({p.name, {p.lo, p.hi}});
    }

    if (cfg.scale % spec.required_scale != 0) {
        rep.status = "skipped";
        rep.reason = "requires base_scale divisible by " + std::to_string(spec.required_scale) +
                     ", run has scale " + std::to_string(cfg.scale);
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        return rep;
    }

    try {
        Context ctx = spec.make_ctx(cfg.scale);
        bool budget_hit = false;
        verify_detail::enumerate(
            spec.family, cfg.range_overrides, [&](const Instance& inst) -> bool {
                if (cfg.time_budget_ms > 0) {
                    double ms =
                        std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                    if (ms > cfg.time_budget_ms) {
                        budget_hit = true;
                        return false;
                    }
                }
                CheckResult r = spec.run(ctx, inst, rep.order);
                if (!r.ok) {
                    rep.status = "mismatch";
                    rep.has_mismatch = true;
                    rep.mm_monomial = r.monomial;
                    rep.mm_lhs = r.lhs;
                    rep.mm_rhs = r.rhs;
                    rep.mm_instance = verify_detail::instance_string(inst);
                    return false;
                }
                return true;
            });
        if (budget_hit) {
            rep.status = "error";
            rep.reason = "time budget exceeded";
        } else if (rep.status.empty()) {
            rep.status = "verified";
        }
    } catch (const ScaleUnavailable& e) {
        rep.status = "skipped";
        rep.reason = e.what();
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.reason = e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

/// Runs the (filtered) registry, optionally on several threads. Reports come
/// back in registry order regardless of completion order.
inline std::vector<VerificationReport> verify_all(const std::vector<IdentitySpec>& registry,
                                                  const VerifyConfig& cfg,
                                                  const std::string& filter = "") {
    std::vector<const IdentitySpec*> selected;
    for (const auto& spec : registry)
        if (filter.empty() || spec.id.rfind(filter, 0) == 0) selected.push_back(&spec);

    std::vector<VerificationReport> reports(selected.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < selected.size(); ++i) reports[i] = verify(*selected[i], cfg);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            reports[i] = verify(*selected[i], cfg);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

struct Summary {
    int verified = 0, mismatched = 0, errors = 0, skipped = 0, expected_mismatches = 0;
    bool all_acceptable = true;
};

inline Summary summarize(const std::vector<VerificationReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        if (r.status == "verified")
            ++s.verified;
        else if (r.status == "skipped")
            ++s.skipped;
        else if (r.status == "mismatch" && r.expect_mismatch)
            ++s.expected_mismatches;
        else if (r.status == "mismatch")
            ++s.mismatched;
        else
            ++s.errors;
        if (!r.acceptable()) s.all_acceptable = false;
    }
    return s;
}

}  // namespace qc
