#include <catch2/catch_amalgamated.hpp>
#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#ifndef QCALC_CLI_PATH
#error "QCALC_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    std::string out;
    int code;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QCALC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {out, code};
}

// Strip elapsed fields so reruns compare byte-for-byte.
nlohmann::json strip_elapsed(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    for (auto& item : j) item.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("cli list") {
    auto all = run_cli("list --json");
    CHECK(all.code == 0);
    auto j = nlohmann::json::parse(all.out);
    CHECK(j.size() >= 45);

    auto filtered = run_cli("list mehler. --json");
    CHECK(filtered.code == 0);
    CHECK(nlohmann::json::parse(filtered.out).size() == 4);

    auto none = run_cli("list zz.nothing --json");
    CHECK(none.code == 0);
    CHECK(nlohmann::json::parse(none.out).empty());
}

TEST_CASE("cli expand") {
    auto rn = run_cli("expand rn -n 2");
    CHECK(rn.code == 0);
    CHECK(rn.out == "u*x^2 + (1+q)*x*y + v*y^2\n");

    auto hn = run_cli("expand hn -n 0");
    CHECK(hn.code == 0);
    CHECK(hn.out == "1\n");

    auto exton_bad = run_cli("expand exton -n 1 --scale 1");
    CHECK(exton_bad.code == 3);

    auto exton_ok = run_cli("expand exton -n 1 --scale 2");
    CHECK(exton_ok.code == 0);
    CHECK(exton_ok.out == "x + y\n");

    auto usage = run_cli("expand nonsense -n 1");
    CHECK(usage.code == 2);
}

TEST_CASE("cli verify exit codes") {
    auto unknown = run_cli("verify no.such.id");
    CHECK(unknown.code == 2);

    auto ok = run_cli("verify sokal.functional_eq --order 6 --scale 1");
    CHECK(ok.code == 0);

    auto one_json = run_cli("verify genfunc.qbinomial --order 6 --json");
    CHECK(one_json.code == 0);
    auto j = nlohmann::json::parse(one_json.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["status"] == "verified");
    CHECK(j[0]["id"] == "genfunc.qbinomial");
}

TEST_CASE("cli verify filter and determinism") {
    std::string args = "verify --all --filter rn.hyper_rep. --order 3 --json";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(strip_elapsed(r1.out).dump() == strip_elapsed(r2.out).dump());

    // text mode carries no elapsed fields at all and must be byte-identical
    std::string targs = "verify --all --filter rn.specializations. --order 3";
    auto t1 = run_cli(targs);
    auto t2 = run_cli(targs);
    CHECK(t1.code == 0);
    CHECK(t1.out == t2.out);
    CHECK(t1.out.find("elapsed") == std::string::npos);
}

TEST_CASE("cli documented mismatches keep exit 0, real failures do not") {
    auto doc = run_cli("verify rn.hyper_rep.sw_phi11_printed --json --scale 1");
    CHECK(doc.code == 0);
    auto j = nlohmann::json::parse(doc.out);
    CHECK(j[0]["status"] == "mismatch");
    CHECK(j[0]["expected_mismatch"] == true);
    CHECK_FALSE(j[0]["first_mismatch"].is_null());
}
