// Acceptance suite: every criterion below is exercised end-to-end at the
// stated truncation orders and wall-clock budgets, printing one PASS/FAIL
// line each. Exit code 0 iff all criteria pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <vector>

#include "qcalc/json_report.hpp"
#include "qcalc/registry.hpp"

using namespace qc;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    std::string label;
    double budget_s;
    clock_type::time_point start = clock_type::now();
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void finish() {
        double secs =
            std::chrono::duration<double>(clock_type::now() - start).count();
        if (secs >= budget_s)
            problems.push_back("budget exceeded: " + std::to_string(secs) + "s >= " +
                               std::to_string(budget_s) + "s");
        if (problems.empty()) {
            printf("PASS  criterion %2d  %-44s %7.2fs (budget %.0fs)\n", number,
                   label.c_str(), secs, budget_s);
        } else {
            ++g_failures;
            printf("FAIL  criterion %2d  %-44s %7.2fs (budget %.0fs)\n", number,
                   label.c_str(), secs, budget_s);
            for (const auto& p : problems) printf("      - %s\n", p.c_str());
        }
        fflush(stdout);
    }
};

struct Job {
    std::string id;
    long order = -1;  // -1: entry default
    std::map<std::string, std::pair<long, long>> ranges;
    bool expect_documented_mismatch = false;
};

void run_jobs(Criterion& c, const std::vector<Job>& jobs, int scale = 1) {
    for (const auto& job : jobs) {
        const IdentitySpec* spec = find_identity(job.id);
        if (!spec) {
            c.require(false, job.id + ": not registered");
            continue;
        }
        VerifyConfig cfg;
        cfg.scale = std::max(scale, spec->required_scale);
        cfg.order = job.order;
        cfg.range_overrides = job.ranges;
        auto rep = verify(*spec, cfg);
        if (job.expect_documented_mismatch) {
            c.require(rep.status == "mismatch" && rep.expect_mismatch && rep.has_mismatch,
                      job.id + ": expected documented mismatch, got " + rep.status);
        } else {
            std::string detail = rep.status;
            if (rep.has_mismatch)
                detail += " at " + rep.mm_monomial + " (" + rep.mm_instance + ")";
            if (!rep.reason.empty()) detail += ": " + rep.reason;
            c.require(rep.status == "verified", job.id + ": " + detail);
        }
    }
}

std::pair<std::string, int> run_cli(const std::string& args) {
    std::string cmd = std::string(QCALC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 8192> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {"", -1};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

}  // namespace

int main() {
    // 1. kernel identity suite
    {
        Criterion c{1, "kernel identities (Pochhammer, Pascal)", 5};
        run_jobs(c, {
                        {"pochhammer.iden2", -1, {{"n", {0, 8}}, {"k", {0, 8}}}},
                        {"pochhammer.iden3", -1, {{"n", {0, 8}}}},
                        {"pochhammer.iden4", -1, {{"n", {0, 8}}}},
                        {"pascal.both", -1, {{"n", {0, 12}}}},
                        {"qbinomial.qneg_rep", -1, {{"n", {0, 8}}}},
                        {"pochhammer.qinv_convention", -1, {{"n", {0, 8}}}},
                        {"binom.exponent_identities", -1, {{"n", {0, 20}}, {"k", {0, 20}}}},
                    });
        c.finish();
    }
    // 2. q-binomial theorem via Euler expansions
    {
        Criterion c{2, "q-binomial theorem, order 10", 5};
        run_jobs(c, {{"qbinomial.theorem", 10}});
        c.finish();
    }
    // 3. Sokal functional equation + iterated derivative of e_q
    {
        Criterion c{3, "Sokal equation and D_q^k e_q, order 10", 5};
        run_jobs(c, {{"sokal.functional_eq", 10}, {"dq.kder_basic", 10, {{"k", {0, 4}}}}});
        c.finish();
    }
    // 4. Leibniz rule on random pairs
    {
        Criterion c{4, "Leibniz rule, 25 random trials", 10};
        run_jobs(c, {{"dq.leibniz", -1, {{"trial", {1, 25}}}}});
        c.finish();
    }
    // 5. q-difference equation of 2Phi1 + formal limit equation
    {
        Criterion c{5, "2Phi1 q-difference and limit equations", 30};
        run_jobs(c, {{"phi21.qdiff", 10}, {"gauss2F1.limit_eq", 8}});
        c.finish();
    }
    // 6. section-4 suite
    {
        Criterion c{6, "deformed homogeneous polynomial suite", 60};
        run_jobs(c, {
                        {"rn.recurrences", -1, {{"n", {0, 10}}}},
                        {"rn.shift", -1, {{"n", {0, 10}}, {"m", {0, 10}}}},
                        {"rn.qdiff", -1, {{"n", {1, 8}}}},
                        {"rn.hyper_rep", -1, {{"n", {0, 8}}}},
                        {"rn.hyper_rep.hn", -1, {{"n", {0, 6}}}},
                        {"rn.hyper_rep.hn_qinv", -1, {{"n", {0, 6}}}},
                        {"rn.hyper_rep.rn", -1, {{"n", {0, 6}}}},
                        {"rn.hyper_rep.pochhammer", -1, {{"n", {0, 6}}}},
                        {"rn.hyper_rep.sw", -1, {{"n", {0, 6}}}},
                        {"rn.hyper_rep.exton", -1, {{"n", {0, 6}}}},
                        {"rn.limit", -1, {{"n", {8, 10}}, {"k", {0, 4}}}},
                        {"rn.specializations.hn", -1, {{"n", {0, 8}}}},
                        {"rn.specializations.hn_qinv", -1, {{"n", {0, 8}}}},
                        {"rn.specializations.rn", -1, {{"n", {0, 8}}}},
                        {"rn.specializations.pochhammer", -1, {{"n", {0, 8}}}},
                        {"rn.specializations.sw", -1, {{"n", {0, 8}}}},
                        {"rn.exton_def", -1, {{"n", {0, 8}}}},
                        {"rn.uv_reduction", -1, {{"n", {0, 8}}}},
                    });
        c.finish();
    }
    // 7. section-5 operator suite at total order 6
    {
        Criterion c{7, "deformed exponential operator suite", 120};
        run_jobs(c, {
                        {"op.translation", 6, {{"n", {0, 6}}}},
                        {"op.on_exp", 6},
                        {"op.on_exp.v1", 6},
                        {"op.on_exp.vq", 6},
                        {"op.on_product", 6},
                        {"op.on_product.v1w1", 6},
                        {"op.on_product.chen_liu", 6},
                        {"op.on_product.saad_sukhi", 6},
                        {"op.on_product.v1_wq", 6},
                        {"op.saad_sukhi_phi11", 6},
                    });
        c.finish();
    }
    // 8. section-6 generating functions
    {
        Criterion c{8, "generalized q-binomial theorem suite", 60};
        run_jobs(c, {
                        {"genfunc.qbinomial", 8},
                        {"genfunc.v", 6},
                        {"genfunc.v_eq_q", 6},
                        {"genfunc.v_q_u_qinv", 6},
                        {"genfunc.specials.hn", 6},
                        {"genfunc.specials.cauchy", 6},
                        {"genfunc.specials.exton", 6},
                        {"genfunc.specials.sw", 6},
                    });
        c.finish();
    }
    // 9. Rogers-Ramanujan products as integer q-series
    {
        Criterion c{9, "Rogers-Ramanujan products, q-order 30", 10};
        run_jobs(c, {{"genfunc.rr_products.first", 30}, {"genfunc.rr_products.second", 30}});
        c.finish();
    }
    // 10. generalized Heine transformation
    {
        Criterion c{10, "Heine transformation suite, order 6", 120};
        run_jobs(c, {
                        {"heine.generalized", 6},
                        {"heine.phi32", 6},
                        {"heine.rr", 6},
                        {"heine.rn_representation", 6},
                    });
        c.finish();
    }
    // 11. Mehler and Rogers formulas with fully symbolic parameters
    {
        Criterion c{11, "Mehler and Rogers suites, order 6", 300};
        run_jobs(c, {
                        {"mehler.generalized", 6},
                        {"mehler.srivastava_agarwal", 6},
                        {"mehler.sa_hn", 6},
                        {"mehler.phi12_transform", 6},
                        {"rogers.generalized", 6},
                        {"rogers.coro.uq_v1w1", 6},
                        {"rogers.coro.v1wq", 6},
                        {"rogers.coro.u1_sneg", 6},
                        {"rogers.coro.uq_sneg", 6},
                        {"rogers.coro.uqinv", 6},
                    });
        c.finish();
    }
    // 12. Rogers-Ramanujan and Exton operator suites
    {
        Criterion c{12, "RR and Exton operator suites", 300};
        run_jobs(c,
                 {
                     {"rr_op.single", 6},
                     {"rr_op.double", 6},
                     {"rr_op.phi45", 6},
                     {"rr_op.phi45_printed", 5, {}, true},
                     {"rr_op.mehler_hn_sw", 6},
                     {"rr_op.mehler_sa_sw", 6},
                     {"rr_op.mehler_sw_sw", 6},
                     {"rr_op.rogers_sw", 6},
                     {"exton_op.single", 6},
                     {"exton_op.double", 6},
                     {"exton_op.phi54", 5},
                     {"exton_op.phi54_printed", 5, {}, true},
                     {"exton_op.mehler_hn_e", 6},
                     {"exton_op.mehler_poch_e", 6},
                     {"exton_op.mehler_e_e", 6},
                     {"exton_op.rogers_e", 6},
                 },
                 2);
        c.finish();
    }
    // 13. CLI round trip: verify --all --order 6, schema, determinism
    {
        Criterion c{13, "CLI verify --all: exit code, schema, rerun", 1800};
        auto r1 = run_cli("verify --all --order 6 --jobs 2 --json");
        auto r2 = run_cli("verify --all --order 6 --jobs 2 --json");
        c.require(r1.second == 0, "first run exit code " + std::to_string(r1.second));
        c.require(r2.second == 0, "second run exit code " + std::to_string(r2.second));
        try {
            auto j1 = nlohmann::ordered_json::parse(r1.first);
            auto j2 = nlohmann::ordered_json::parse(r2.first);
            c.require(j1.size() == registry().size(), "report count != registry size");
            for (auto& item : j1) {
                std::string err = validate_report_json(item);
                c.require(err.empty(),
                          "schema: " + err + " (" + item.value("id", "?") + ")");
                std::string st = item["status"].get<std::string>();
                bool documented = item.value("expected_mismatch", false);
                bool ok = st == "verified" || (st == "skipped" && item.contains("reason")) ||
                          (st == "mismatch" && documented &&
                           !item["first_mismatch"].is_null());
                c.require(ok, item["id"].get<std::string>() +
                                  ": not verified/skipped/documented (" + st + ")");
            }
            for (auto& item : j1) item.erase("elapsed_ms");
            for (auto& item : j2) item.erase("elapsed_ms");
            c.require(j1.dump() == j2.dump(), "reruns differ beyond elapsed fields");
        } catch (const std::exception& ex) {
            c.require(false, std::string("JSON parse: ") + ex.what());
        }
        c.finish();
    }
    // 14. negative control: a perturbed builder must be caught
    {
        Criterion c{14, "negative control (perturbed builder)", 30};
        VerifyConfig cfg;
        cfg.scale = 1;
        cfg.order = 6;
        auto rep = verify(make_perturbed_fixture(), cfg);
        c.require(rep.status == "mismatch", "status " + rep.status);
        c.require(rep.has_mismatch && !rep.mm_monomial.empty() && !rep.mm_lhs.empty() &&
                      !rep.mm_rhs.empty(),
                  "first_mismatch not populated");
        c.require(!rep.acceptable(), "engine treated the perturbed fixture as acceptable");
        c.finish();
    }

    if (g_failures == 0) {
        printf("acceptance: all 14 criteria PASS\n");
        return 0;
    }
    printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
