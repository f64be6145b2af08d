#pragma once

#include <string>
#include <vector>

namespace memoria {

/** One checked fact: pass iff value == expected. provenance says whether the
 *  expected value is a reference value from the literature or a derived
 *  oracle computed independently at test time. */
struct AcceptanceRow {
    std::string name;
    std::string value;
    std::string expected;
    std::string provenance;  // "reference value" or "derived oracle"
    bool pass = false;
};

struct CriterionReport {
    int index = 0;
    std::string title;
    std::vector<AcceptanceRow> rows;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    bool pass = false;  // all rows pass and the wall-clock limit holds
};

/** Runs the acceptance criteria (all nine when indices is empty). */
std::vector<CriterionReport> run_acceptance(const std::vector<int>& indices = {});

/** Plain-text rendering: one pass/fail line per criterion plus row details. */
std::string render_report(const std::vector<CriterionReport>& reports, bool verbose);

}  // namespace memoria
