#include "splintkit/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

namespace splintkit {

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::expected: return "expected";
    case CheckStatus::fail: return "FAIL";
    }
    return "?";
}

namespace {

std::string upper(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// The B(m,n) equivalence note: the two typings must land in one class once only the
// even restrictions are compared.
std::vector<std::string> equivalence_checks(const RowOutcome& row, bool& ok)
{
    std::vector<std::string> out;
    std::map<std::string, const FixtureOutcome*> by_id;
    for (const auto& f : row.fixtures)
        by_id[f.id] = &f;
    for (const auto& f : row.fixtures) {
        if (f.id.rfind("IV.8.", 0) != 0)
            continue;
        const std::string alt = "IV.8alt." + f.id.substr(5);
        auto it = by_id.find(alt);
        if (it == by_id.end())
            continue;
        const Splint& a = f.check.report.splint;
        const Splint& b = it->second->check.report.splint;
        if (!f.check.report.verdict.ok() || !it->second->check.report.verdict.ok()) {
            ok = false;
            out.push_back(f.id + " ~ " + alt + ": not both valid");
            continue;
        }
        const RootSystem& rs = *a.target;
        const auto group = group_elements(rs);
        const auto sa = canonical_signature(rs, group, a.part1, a.part2, PairMode::unordered,
                                            SignatureClauses::even_only);
        const auto sb = canonical_signature(rs, group, b.part1, b.part2, PairMode::unordered,
                                            SignatureClauses::even_only);
        const bool same = sa == sb;
        ok = ok && same;
        out.push_back(f.id + " ~ " + alt + ": " +
                      (same ? "one class (even signature " + sa.hex() + ") carrying " + to_string(a.type1) + " | " +
                                  to_string(a.type2) + " and " + to_string(b.type1) + " | " + to_string(b.type2)
                            : std::string("different even signatures")));
    }
    return out;
}

} // namespace

bool row_matches(const TableRow& row, const std::string& filter)
{
    if (filter.empty())
        return true;
    const std::string f = upper(filter);
    if (f == upper(row.table) || f == "TABLE " + upper(row.table))
        return true;
    return f.size() == 1 && !row.system.empty() && std::toupper(static_cast<unsigned char>(row.system[0])) == f[0];
}

RunReport run_report(const ReportOptions& opts)
{
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    for (const TableRow& row : table_rows()) {
        if (!row_matches(row, opts.filter))
            continue;
        RowOutcome ro;
        ro.row = row;
        for (const std::string& id : row.fixture_ids) {
            FixtureOutcome fo;
            fo.id = id;
            const auto t1 = std::chrono::steady_clock::now();
            fo.check = check_fixture(id, opts.verify);
            fo.millis = since(t1);
            const Verdict& v = fo.check.report.verdict;
            auto wl = opts.manifest.expected_discrepancies.find(id);
            if (v.ok()) {
                fo.status = wl == opts.manifest.expected_discrepancies.end() ? CheckStatus::pass : CheckStatus::fail;
                if (fo.status == CheckStatus::fail)
                    fo.check.report.notes.push_back("whitelisted discrepancy no longer reproduces");
            } else if (v.kind == Verdict::Kind::paper_discrepancy && wl != opts.manifest.expected_discrepancies.end()) {
                fo.status = CheckStatus::expected;
                fo.whitelist_note = wl->second;
            } else {
                fo.status = CheckStatus::fail;
            }
            switch (fo.status) {
            case CheckStatus::pass: ++rep.passed; break;
            case CheckStatus::expected: ++rep.expected; break;
            case CheckStatus::fail: ++rep.failed; break;
            }
            ro.status = std::max(ro.status, fo.status);
            ro.fixtures.push_back(std::move(fo));
        }
        bool ok = true;
        ro.checks = equivalence_checks(ro, ok);
        if (!ok) {
            ro.status = CheckStatus::fail;
            ++rep.failed;
        }
        rep.rows.push_back(std::move(ro));
    }
    rep.wall_millis = since(t0);
    return rep;
}

Json RunReport::to_json(bool timing) const
{
    Json rows_j = Json::array();
    for (const auto& r : rows) {
        Json fx = Json::array();
        for (const auto& f : r.fixtures) {
            Json j;
            j["id"] = f.id;
            j["status"] = splintkit::to_string(f.status);
            j["splint"] = splintkit::to_json(f.check.report);
            if (f.check.printed_verdict)
                j["printed_verdict"] = splintkit::to_string(*f.check.printed_verdict);
            j["notes"] = f.check.report.notes;
            if (!f.whitelist_note.empty())
                j["whitelist"] = f.whitelist_note;
            if (timing)
                j["millis"] = f.millis;
            fx.push_back(j);
        }
        Json j;
        j["table"] = r.row.table;
        j["system"] = r.row.system;
        j["type1"] = r.row.type1;
        j["type2"] = r.row.type2;
        j["status"] = splintkit::to_string(r.status);
        if (!r.row.note.empty())
            j["note"] = r.row.note;
        if (!r.checks.empty())
            j["checks"] = r.checks;
        j["fixtures"] = fx;
        rows_j.push_back(j);
    }
    Json out;
    out["counts"] = {{"pass", passed}, {"expected", expected}, {"fail", failed}};
    out["ok"] = ok();
    if (timing)
        out["wall_millis"] = wall_millis;
    out["rows"] = rows_j;
    return out;
}

std::string RunReport::text() const
{
    std::ostringstream os;
    std::string table;
    for (const auto& r : rows) {
        if (r.row.table != table) {
            table = r.row.table;
            os << (table == "VII" ? "Exceptional systems" : "Table " + table) << "\n";
        }
        std::string ids;
        for (const auto& f : r.fixtures) {
            ids += ids.empty() ? "" : " ";
            ids += f.id + (f.status == CheckStatus::pass ? "" : "[" + std::string(splintkit::to_string(f.status)) + "]");
        }
        os << "  " << std::left << std::setw(9) << splintkit::to_string(r.status) << std::setw(12) << r.row.system
           << r.row.type1 << " | " << r.row.type2 << "   " << ids << "\n";
        for (const auto& f : r.fixtures)
            if (f.status != CheckStatus::pass)
                os << "      " << f.id << ": " << splintkit::to_string(f.check.report.verdict)
                   << (f.whitelist_note.empty() ? "" : "  [whitelisted: " + f.whitelist_note + "]") << "\n";
        for (const auto& c : r.checks)
            os << "      " << c << "\n";
    }
    os << "fixtures: " << passed << " pass, " << expected << " expected discrepancies, " << failed << " fail\n";
    return os.str();
}

} // namespace splintkit
