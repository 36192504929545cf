#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace canopy {

struct RowResult {
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceRow {
    std::string key;          // stable row name, one per criterion
    std::string description;  // the quantitative claim being checked
    double budget_seconds = 0.0;  // 0 = no runtime bound
    std::function<RowResult()> run;
};

std::vector<AcceptanceRow> acceptance_rows();

struct MatrixResult {
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

/// Run every row whose key contains `only` (all rows when empty), printing
/// one pass/fail line per row.
MatrixResult run_acceptance(std::ostream& out, const std::string& only = "",
                            bool use_color = true);

}  // namespace canopy
