#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splintkit/splint.hpp"

namespace splintkit {

struct FixtureSets {
    std::vector<Weight> part1;
    std::vector<Weight> part2;
    /// printed entries naming a coordinate the target does not have ("side 2: d3-e1")
    std::vector<std::string> out_of_range;
};

/// One splint claimed in the source tables, instantiated at fixed parameters.
///
/// `printed` holds the sets exactly as printed (index ranges and signs included). When
/// the printed sets contain an evident typo whose correction is uniquely determined,
/// `reading` holds the corrected sets and `reading_note` says what changed. Rows listed
/// only in a table have neither; they are checked by an exhaustive typed search. A
/// typing stated without sets (the second typing of an equivalence note) carries only
/// `reading`.
struct Fixture {
    std::string id;       // "III.7.3x3", "IV.2a", "TI.5"
    std::string item;     // "III.7", "TI.5"
    std::string system;   // target spec, "A(2,2)"
    std::string paper_type1;
    std::string paper_type2;
    std::string type1;    // verified typing; differs from the paper only by a label reading
    std::string type2;
    std::optional<FixtureSets> printed;
    std::optional<FixtureSets> reading;
    std::string reading_note;

    bool table_only() const { return !printed && !reading; }
};

/// Every fixture, in source order.
const std::vector<Fixture>& all_fixtures();
/// Throws std::out_of_range for an unknown id.
const Fixture& fixture(const std::string& id);

struct FixtureCheck {
    SplintReport report;         // verdict valid or paper_discrepancy
    std::optional<Verdict> printed_verdict;  // outcome on the printed sets, when a reading was needed
};

/// Verifies a fixture: the printed sets first; if they fail and a documented reading
/// exists, the reading decides and the printed outcome is kept in the notes. Any
/// remaining failure is reported as paper_discrepancy with the precise roots involved.
FixtureCheck check_fixture(const Fixture& f, const VerifyOptions& opts = {});
FixtureCheck check_fixture(const std::string& id, const VerifyOptions& opts = {});

/// A row of Tables I-IV or of the exceptional list, with the fixtures realizing it.
struct TableRow {
    std::string table;   // "I", "II", "III", "IV", "VII"
    std::string system;  // as printed, "A(m-1,n-1)", "C(2)"
    std::string type1;   // as printed
    std::string type2;
    std::vector<std::string> fixture_ids;
    std::string note;
};

const std::vector<TableRow>& table_rows();

/// Expected discrepancies pinned in the fixture manifest: id -> explanation.
struct Manifest {
    std::map<std::string, std::string> expected_discrepancies;
};

Manifest load_manifest(const std::string& path);
/// fixtures/manifest.json of the source tree.
std::string default_fixture_dir();

} // namespace splintkit
