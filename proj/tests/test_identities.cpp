#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "qcalc/json_report.hpp"
#include "qcalc/registry.hpp"

using namespace qc;

TEST_CASE("registry shape") {
    const auto& R = registry();
    SECTION("at least 45 entries") { CHECK(R.size() >= 45); }
    SECTION("unique ids, nonempty anchors") {
        std::set<std::string> ids;
        for (const auto& spec : R) {
            CHECK(ids.insert(spec.id).second);
            CHECK_FALSE(spec.anchor.empty());
            CHECK_FALSE(spec.section.empty());
        }
    }
    SECTION("scale-2 entries are exactly the sqrt(q) (Exton) families") {
        for (const auto& spec : R) {
            bool exton_family = spec.id.find("exton") != std::string::npos;
            CHECK((spec.required_scale == 2) == exton_family);
        }
    }
    SECTION("documented-mismatch entries all carry notes") {
        int count = 0;
        for (const auto& spec : R)
            if (spec.expect_mismatch) {
                ++count;
                CHECK_FALSE(spec.note.empty());
            }
        CHECK(count == 4);
    }
}

TEST_CASE("verify single identities") {
    VerifyConfig cfg;
    cfg.scale = 1;
    SECTION("generalized q-binomial theorem at order 8") {
        cfg.order = 8;
        auto rep = verify(*find_identity("genfunc.qbinomial"), cfg);
        CHECK(rep.status == "verified");
        CHECK(rep.order == 8);
        CHECK_FALSE(rep.has_mismatch);
    }
    SECTION("R_n q-difference equation across the family range") {
        auto rep = verify(*find_identity("rn.qdiff"), cfg);
        CHECK(rep.status == "verified");
        REQUIRE(rep.family_ranges.size() == 1);
        CHECK(rep.family_ranges[0].first == "n");
        CHECK(rep.family_ranges[0].second == std::make_pair(1L, 8L));
    }
    SECTION("family range overrides are honored and echoed") {
        cfg.range_overrides["n"] = {1, 3};
        auto rep = verify(*find_identity("rn.qdiff"), cfg);
        CHECK(rep.status == "verified");
        CHECK(rep.family_ranges[0].second == std::make_pair(1L, 3L));
    }
    SECTION("unknown id lookup") {
        CHECK(find_identity("no.such.id") == nullptr);
        CHECK_THROWS_AS(get_identity("no.such.id"), UnknownIdentity);
    }
}

TEST_CASE("negative control: perturbed builder must fail") {
    VerifyConfig cfg;
    cfg.scale = 1;
    cfg.order = 6;
    auto fixture = make_perturbed_fixture();
    auto rep = verify(fixture, cfg);
    CHECK(rep.status == "mismatch");
    CHECK(rep.has_mismatch);
    CHECK_FALSE(rep.mm_monomial.empty());
    CHECK_FALSE(rep.mm_lhs.empty());
    CHECK_FALSE(rep.mm_rhs.empty());
    CHECK_FALSE(rep.acceptable());
    // u^binom(k,2) != u^k already at k = 1, so the z^1 coefficient differs
    CHECK(rep.mm_monomial == "z");
    CHECK(rep.mm_lhs != rep.mm_rhs);
}

TEST_CASE("verify_all filtering and ordering") {
    VerifyConfig cfg;
    cfg.scale = 1;
    cfg.order = 3;
    SECTION("prefix filter selects exactly the section-4 entries") {
        auto reports = verify_all(registry(), cfg, "rn.");
        size_t expect = 0;
        for (const auto& spec : registry())
            if (spec.id.rfind("rn.", 0) == 0) ++expect;
        CHECK(reports.size() == expect);
        CHECK(reports.size() >= 10);
        // registry order is preserved
        size_t pos = 0;
        for (const auto& spec : registry()) {
            if (pos < reports.size() && spec.id == reports[pos].id) ++pos;
        }
        CHECK(pos == reports.size());
    }
    SECTION("empty filter match gives an empty report list") {
        auto reports = verify_all(registry(), cfg, "zz.nothing.");
        CHECK(reports.empty());
        auto s = summarize(reports);
        CHECK(s.verified == 0);
        CHECK(s.all_acceptable);
    }
    SECTION("parallel run equals sequential run") {
        auto seq = verify_all(registry(), cfg, "rn.specializations.");
        cfg.jobs = 3;
        auto par = verify_all(registry(), cfg, "rn.specializations.");
        REQUIRE(seq.size() == par.size());
        for (size_t i = 0; i < seq.size(); ++i) {
            CHECK(seq[i].id == par[i].id);
            CHECK(seq[i].status == par[i].status);
        }
    }
}

TEST_CASE("scale gating") {
    VerifyConfig cfg;
    cfg.scale = 1;
    cfg.order = 3;
    auto rep = verify(*find_identity("genfunc.specials.exton"), cfg);
    CHECK(rep.status == "skipped");
    CHECK_FALSE(rep.reason.empty());
    CHECK(rep.acceptable());
    cfg.scale = 2;
    auto rep2 = verify(*find_identity("genfunc.specials.exton"), cfg);
    CHECK(rep2.status == "verified");
}

TEST_CASE("documented printed-form discrepancies are confirmed mismatches") {
    VerifyConfig cfg;
    cfg.scale = 2;
    cfg.order = 3;
    for (const char* id : {"rn.hyper_rep.sw_phi11_printed", "rn.hyper_rep.exton_phi42_printed",
                           "rr_op.phi45_printed", "exton_op.phi54_printed"}) {
        auto rep = verify(*find_identity(id), cfg);
        INFO(id);
        CHECK(rep.status == "mismatch");
        CHECK(rep.expect_mismatch);
        CHECK(rep.has_mismatch);
        CHECK(rep.acceptable());
    }
}

TEST_CASE("monotonicity: verified at N implies verified below N") {
    VerifyConfig cfg;
    cfg.scale = 1;
    for (long order : {8L, 6L, 4L, 2L}) {
        cfg.order = order;
        CHECK(verify(*find_identity("sokal.functional_eq"), cfg).status == "verified");
        CHECK(verify(*find_identity("qbinomial.theorem"), cfg).status == "verified");
    }
}

TEST_CASE("reports are deterministic and schema-valid") {
    VerifyConfig cfg;
    cfg.scale = 2;
    cfg.order = 3;
    auto ids = {"sokal.functional_eq", "rn.qdiff", "genfunc.specials.exton",
                "rn.hyper_rep.sw_phi11_printed"};
    for (const char* id : ids) {
        auto r1 = verify(*find_identity(id), cfg);
        auto r2 = verify(*find_identity(id), cfg);
        auto j1 = report_to_json(r1);
        auto j2 = report_to_json(r2);
        CHECK(validate_report_json(j1).empty());
        j1.erase("elapsed_ms");
        j2.erase("elapsed_ms");
        CHECK(j1.dump() == j2.dump());
    }
    SECTION("schema validator rejects malformed reports") {
        ordered_json bad = report_to_json(verify(*find_identity("rn.qdiff"), cfg));
        bad.erase("anchor");
        CHECK_FALSE(validate_report_json(bad).empty());
        ordered_json bad2 = report_to_json(verify(*find_identity("rn.qdiff"), cfg));
        bad2["status"] = "unknown";
        CHECK_FALSE(validate_report_json(bad2).empty());
    }
}

TEST_CASE("time budget reports an error instead of hanging") {
    VerifyConfig cfg;
    cfg.scale = 1;
    cfg.order = 6;
    cfg.time_budget_ms = 1e-9;
    auto rep = verify(*find_identity("mehler.generalized"), cfg);
    CHECK(rep.status == "error");
    CHECK(rep.reason == "time budget exceeded");
    CHECK_FALSE(rep.acceptable());
}
