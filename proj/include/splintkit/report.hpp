#pragma once

#include <string>
#include <vector>

#include "splintkit/fixtures.hpp"
#include "splintkit/json_io.hpp"

namespace splintkit {

enum class CheckStatus { pass, expected, fail };
const char* to_string(CheckStatus s);

struct FixtureOutcome {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    FixtureCheck check;
    std::string whitelist_note;  // manifest explanation when status == expected
    double millis = 0;
};

struct RowOutcome {
    TableRow row;
    std::vector<FixtureOutcome> fixtures;
    std::vector<std::string> checks;  // extra row-level findings (equivalence classes)
    CheckStatus status = CheckStatus::pass;
};

struct RunReport {
    std::vector<RowOutcome> rows;
    std::size_t passed = 0;
    std::size_t expected = 0;  // whitelisted discrepancies
    std::size_t failed = 0;
    double wall_millis = 0;

    bool ok() const { return failed == 0; }
    /// Deterministic; wall times appear only when `timing` is set.
    Json to_json(bool timing = false) const;
    std::string text() const;
};

struct ReportOptions {
    std::string filter;  // table name ("III") or system letter ("C"); empty = all
    VerifyOptions verify;
    Manifest manifest;
};

bool row_matches(const TableRow& row, const std::string& filter);

/// Runs every fixture of the selected rows once. A paper_discrepancy is expected when
/// the manifest lists it; a listed fixture that verifies is a failure (stale entry).
RunReport run_report(const ReportOptions& opts);

} // namespace splintkit
