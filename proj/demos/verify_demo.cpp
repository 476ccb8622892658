// Runs a slice of the identity registry through the verification engine and
// prints the reports as JSON.

#include <iostream>

#include "qcalc/json_report.hpp"
#include "qcalc/registry.hpp"

using namespace qc;

int main() {
    VerifyConfig cfg;
    cfg.order = 5;
    cfg.scale = 2;
    cfg.jobs = 2;

    auto reports = verify_all(registry(), cfg, "genfunc.");
    std::cout << reports_to_json(reports).dump(2) << "\n";

    auto s = summarize(reports);
    std::cerr << "verified " << s.verified << " of " << reports.size() << " entries\n";
    return s.all_acceptable ? 0 : 1;
}
