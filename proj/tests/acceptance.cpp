// Acceptance run: one PASS/FAIL line per criterion. Limits and tolerances are fixed
// here; all arithmetic is exact, so every comparison is equality.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "splintkit/embed.hpp"
#include "splintkit/fixtures.hpp"
#include "splintkit/json_io.hpp"
#include "splintkit/report.hpp"
#include "splintkit/splint.hpp"

using namespace splintkit;

namespace {

constexpr double kLimitCounts = 1.0;
constexpr double kLimitFixtures = 30.0;
constexpr double kLimitEnumeration = 300.0;
constexpr double kLimitNonEmbedding = 120.0;
constexpr std::size_t kOracleMaxRoots = 7;
const char* const kExtrasFile = "acceptance_extras.txt";

struct Outcome {
    bool pass = true;
    std::vector<std::string> problems;
    std::string summary;

    void fail(std::string why)
    {
        pass = false;
        problems.push_back(std::move(why));
    }
    void expect(bool ok, const std::string& why)
    {
        if (!ok)
            fail(why);
    }
};

using Sys = std::shared_ptr<const RootSystem>;

Sys sys(const std::string& spec) { return std::make_shared<const RootSystem>(build_from_spec(spec)); }

std::string seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

// ---------------------------------------------------------------------------------------

Outcome counts()
{
    Outcome o;
    std::size_t n = 0;
    auto one = [&](Family f, int p, int q) {
        const auto want = oracle::root_count(f, p, q);
        try {
            const RootSystem rs = build(f, p, q);
            ++n;
            if (!want)
                o.fail(system_name(f, p, q) + " built but is inadmissible");
            else if (rs.size() != *want || expected_root_count(f, p, q) != *want)
                o.fail(rs.name() + ": " + std::to_string(rs.size()) + " roots, closed form " + std::to_string(*want));
        } catch (const ParameterError&) {
            if (want)
                o.fail(system_name(f, p, q) + " rejected but admissible");
        }
    };
    for (Family f : {Family::A, Family::B, Family::D})
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q)
                one(f, p, q);
    for (int p = 0; p <= 4; ++p)
        one(Family::C, p, 0);
    for (Family f : {Family::G3, Family::F4, Family::D21a})
        one(f, 0, 0);
    o.summary = std::to_string(n) + " systems";
    return o;
}

// ---------------------------------------------------------------------------------------

bool in_fixture_sections(const std::string& item)
{
    for (const char* prefix : {"III.", "IV.", "V.", "VI.", "VII."})
        if (item.rfind(prefix, 0) == 0)
            return true;
    return false;
}

Outcome fixture_verification()
{
    Outcome o;
    const Manifest manifest = load_manifest(default_fixture_dir() + "/manifest.json");
    // ids "III.7.3x3" mark an item stated for all parameters; those need two instantiations
    std::map<std::string, std::set<std::string>> systems_per_item;
    std::set<std::string> parametric;
    std::size_t checked = 0;
    for (const Fixture& f : all_fixtures()) {
        if (!in_fixture_sections(f.item))
            continue;
        const FixtureCheck c = check_fixture(f);
        const Verdict& v = c.report.verdict;
        ++checked;
        if (f.item == "III.1") {
            // pinned: the verdict must be the one recorded in the manifest
            const bool listed = manifest.expected_discrepancies.count(f.id) > 0;
            const bool discrepancy = v.kind == Verdict::Kind::paper_discrepancy;
            o.expect(listed == discrepancy, f.id + ": verdict " + to_string(v) + " disagrees with the manifest");
            o.expect(!discrepancy || v.detail.find("neither part") != std::string::npos,
                     f.id + ": discrepancy without missing roots");
            continue;
        }
        systems_per_item[f.item].insert(f.system);
        if (f.id.rfind(f.item + ".", 0) == 0)
            parametric.insert(f.item);
        if (!v.ok())
            o.fail(f.id + " (" + f.system + "): " + to_string(v));
    }
    for (const auto& [item, systems] : systems_per_item) {
        if (parametric.count(item) && systems.size() < 2)
            o.fail(item + ": only one instantiation");
    }
    o.summary = std::to_string(checked) + " fixtures over " + std::to_string(systems_per_item.size() + 1) + " items";
    return o;
}

// ---------------------------------------------------------------------------------------

Outcome table_regression()
{
    Outcome o;
    ReportOptions opts;
    opts.manifest = load_manifest(default_fixture_dir() + "/manifest.json");
    const RunReport rep = run_report(opts);
    std::size_t rows = 0;
    bool equivalence_seen = false;
    for (const RowOutcome& r : rep.rows) {
        if (r.row.table == "VII")
            continue;
        ++rows;
        for (const FixtureOutcome& f : r.fixtures)
            if (f.status != CheckStatus::pass)
                o.fail("table " + r.row.table + " " + r.row.system + " " + r.row.type1 + " | " + r.row.type2 + ": " +
                       f.id + " " + to_string(f.status) + " (" + to_string(f.check.report.verdict) + ")");
        for (const std::string& c : r.checks) {
            if (c.find("one class") != std::string::npos)
                equivalence_seen = true;
            else
                o.fail("row check: " + c);
        }
    }
    o.expect(rep.failed == 0, std::to_string(rep.failed) + " report failures");

    const FixtureCheck c2 = check_fixture("TIII.1");
    o.expect(c2.report.verdict.ok() && to_string(c2.report.splint.type1) == "A_1" && fixture("TIII.1").paper_type1 == "A(1)",
             "C(2) A(1) -> A_1 reading not realized");
    o.expect(equivalence_seen, "B(m,n) equivalence note not realized as one class");
    o.summary = std::to_string(rows) + " rows, " + std::to_string(rep.passed) + " pass, " +
                std::to_string(rep.expected) + " whitelisted";
    return o;
}

// ---------------------------------------------------------------------------------------

Outcome enumeration_completeness()
{
    Outcome o;
    const std::vector<std::string> targets = {"A(1,0)", "A(0,1)", "A(1,1)", "B(0,1)", "B(0,2)",  "B(1,1)",
                                              "C(2)",   "C(3)",   "D(2,1)", "D(2,1;a)", "G(3)"};
    std::ofstream extras(kExtrasFile);
    extras << "# enumerated classes without a listed fixture (findings, not failures)\n";
    std::size_t listed = 0, classes = 0, extra = 0;
    for (const auto& spec : targets) {
        const Sys rs = sys(spec);
        const auto reps = enumerate(rs);
        classes += reps.size();
        std::map<SplintSignature, std::string> found;
        for (const auto& r : reps)
            found.emplace(*r.signature, to_string(r.splint.type1) + " | " + to_string(r.splint.type2));
        std::set<SplintSignature> claimed;
        for (const Fixture& f : all_fixtures()) {
            if (sys(f.system)->name() != rs->name())
                continue;
            const FixtureCheck c = check_fixture(f);
            const Splint& sp = c.report.splint;
            const bool cover = (sp.part1 & sp.part2).none() && (sp.part1 | sp.part2) == rs->all_roots() &&
                               sp.part1.any() && sp.part2.any();
            if (!cover) {
                o.fail(spec + ": " + f.id + " lists no partition (" + to_string(c.report.verdict) + ")");
                continue;
            }
            // a printed typing that fails still names a partition; its class is what must appear
            const SplintSignature sig = c.report.signature ? *c.report.signature
                                                           : canonical_signature(*rs, sp.part1, sp.part2);
            ++listed;
            claimed.insert(sig);
            o.expect(found.count(sig) == 1, spec + ": class of " + f.id + " missing");
            if (!c.report.verdict.ok() && found.count(sig))
                extras << spec << ": " << f.id << " found as " << found.at(sig) << " (printed typing: "
                       << to_string(c.report.verdict) << ")\n";
        }
        extras << spec << ": " << reps.size() << " classes, " << claimed.size() << " listed\n";
        for (const auto& [sig, types] : found)
            if (!claimed.count(sig)) {
                ++extra;
                extras << "  " << sig.hex() << "  " << types << "\n";
            }
    }
    o.summary = std::to_string(listed) + " listed splints in " + std::to_string(classes) + " classes; " +
                std::to_string(extra) + " extras in " + kExtrasFile;
    return o;
}

// ---------------------------------------------------------------------------------------

Outcome non_embeddings()
{
    Outcome o;
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"C(3)", "B(4,2)"}, {"B(1,1)", "C(3)"}, {"B(0,2)", "C(3)"}, {"D(1,1)", "C(3)"},
        {"G(3)", "B(2,2)"}, {"F(4)", "A(3,3)"}, {"C(3)", "D(2,2)"}};
    for (const auto& [d, c] : pairs) {
        const auto maps = find_embeddings(sys(d), sys(c));
        o.expect(maps.empty(), d + " -> " + c + ": " + std::to_string(maps.size()) + " embeddings");
    }
    o.summary = std::to_string(pairs.size()) + " pairs";
    return o;
}

// ---------------------------------------------------------------------------------------

std::optional<EmbeddingMap> inclusion(Sys dom, Sys cod)
{
    EmbeddingMap m{dom, cod, {}};
    for (const Root& r : dom->roots()) {
        Weight w(cod->eps_dim(), cod->delta_dim());
        for (std::size_t i = 0; i < r.weight.eps.size(); ++i)
            w.eps[i] = r.weight.eps[i];
        for (std::size_t k = 0; k < r.weight.delta.size(); ++k)
            w.delta[k] = r.weight.delta[k];
        auto idx = cod->index_of(w);
        if (!idx)
            return std::nullopt;
        m.assignment.push_back(static_cast<int>(*idx));
    }
    return m;
}

Outcome metric_classification()
{
    Outcome o;
    std::size_t n = 0;
    auto check = [&](const std::string& d, const std::string& c, bool unit_lambda) {
        ++n;
        const auto m = inclusion(sys(d), sys(c));
        if (!m || !is_embedding(*m)) {
            o.fail(d + " -> " + c + ": identity inclusion is not an embedding");
            return;
        }
        const MetricVerdict v = metric_verdict(*m);
        o.expect(v.kind == MetricVerdict::Kind::metric, d + " -> " + c + ": " + to_string(v.kind));
        if (unit_lambda)
            o.expect(v.lambda == 1, d + " -> " + c + ": lambda " + to_string(v.lambda));
    };
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) {
            const std::string cod = "A(" + std::to_string(m - 1) + "," + std::to_string(k - 1) + ")";
            check("A(" + std::to_string(m - 1) + ",0)", cod, true);
            check("A(0," + std::to_string(k - 1) + ")", cod, true);
        }
    for (int m = 0; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
            check("B(0," + std::to_string(k) + ")", "B(" + std::to_string(m) + "," + std::to_string(k) + ")", false);
    o.summary = std::to_string(n) + " inclusions";
    return o;
}

// ---------------------------------------------------------------------------------------

std::vector<Sys> small_systems()
{
    std::vector<Sys> out;
    std::set<std::string> seen;
    auto add = [&](Family f, int p, int q) {
        try {
            auto rs = std::make_shared<const RootSystem>(build(f, p, q));
            if (rs->size() <= kOracleMaxRoots && seen.insert(rs->name()).second)
                out.push_back(rs);
        } catch (const ParameterError&) {
        }
    };
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q)
                add(f, p, q);
    for (Family f : {Family::An, Family::Bn, Family::Cn, Family::Dn})
        for (int p = 1; p <= 4; ++p)
            add(f, p, 0);
    add(Family::G2, 0, 0);
    add(Family::D21a, 0, 0);
    return out;
}

std::uint64_t coloring(const RootMask& m, std::size_t n)
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m.test(i))
            c |= std::uint64_t{1} << i;
    return c;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const auto systems = small_systems();
    std::size_t targets = 0, pairs = 0;
    for (const Sys& rs : systems) {
        if (rs->size() < 2)
            continue;
        ++targets;
        for (PairMode mode : {PairMode::unordered, PairMode::ordered}) {
            const std::string tag = rs->name() + " " + to_string(mode);
            const auto ref = oracle::enumerate(*rs, mode, RankRule::zero_a00);
            EnumerateOptions all;
            all.pair_mode = mode;
            all.dedup = Dedup::none;
            std::set<std::uint64_t> got;
            for (const auto& r : enumerate(rs, all))
                got.insert(coloring(r.splint.part1, rs->size()));
            o.expect(got == ref.valid, tag + ": valid colorings differ");

            EnumerateOptions dedup = all;
            dedup.dedup = Dedup::weyl;
            const auto reps = enumerate(rs, dedup);
            std::set<std::size_t> hit;
            for (const auto& r : reps) {
                const std::uint64_t c = coloring(r.splint.part1, rs->size());
                for (std::size_t k = 0; k < ref.classes.size(); ++k)
                    if (ref.classes[k].count(c))
                        hit.insert(k);
                const auto& sides = ref.sides.at(c);
                o.expect(r.splint.rank_certificate[0] == sides.first.min_rank &&
                             r.splint.rank_certificate[1] == sides.second.min_rank,
                         tag + ": minimum rank differs");
                o.expect(sides.first.types.count(to_string(r.splint.type1)) &&
                             sides.second.types.count(to_string(r.splint.type2)),
                         tag + ": typing not among the brute-force typings");
            }
            o.expect(reps.size() == ref.classes.size() && hit.size() == ref.classes.size(),
                     tag + ": " + std::to_string(reps.size()) + " classes, brute force " +
                         std::to_string(ref.classes.size()));
        }
    }
    for (const Sys& d : systems)
        for (const Sys& c : systems) {
            if (d->size() > c->size())
                continue;
            ++pairs;
            std::set<std::vector<int>> got;
            for (const auto& m : find_embeddings(d, c))
                got.insert(m.assignment);
            o.expect(got == oracle::embeddings(*d, *c), d->name() + " -> " + c->name() + ": embeddings differ");
        }
    o.summary = std::to_string(targets) + " enumeration targets, " + std::to_string(pairs) + " embedding pairs";
    return o;
}

// ---------------------------------------------------------------------------------------

Outcome properties()
{
    Outcome o;
    const std::vector<std::string> specs = {"A(1,1)", "A(2,1)", "B(1,2)", "B(0,3)", "C(4)",    "D(3,1)",
                                            "D(2,2)", "G(3)",   "F(4)",   "D(2,1;a)", "A(4,4)"};
    std::size_t sums = 0, elements = 0, splits = 0, round_trips = 0;

    for (const auto& spec : specs) {
        const RootSystem rs = build_from_spec(spec);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < rs.size(); ++j) {
                const int k = rs.sum_index(i, j);
                const auto direct = rs.index_of(rs.root(i).weight + rs.root(j).weight);
                o.expect(direct ? k == static_cast<int>(*direct) : k < 0, spec + ": addition table inconsistent");
                if (k >= 0) {
                    ++sums;
                    o.expect(rs.parity(static_cast<std::size_t>(k)) == (rs.parity(i) ^ rs.parity(j)),
                             spec + ": parity not additive");
                }
            }
    }

    std::mt19937_64 rng(20261016);
    for (const char* spec : {"A(1,1)", "B(1,2)", "C(3)", "D(2,1)", "G(3)", "D(2,1;a)", "F(4)"}) {
        const RootSystem rs = build_from_spec(spec);
        const auto group = group_elements(rs);
        for (const auto& g : group) {
            ++elements;
            for (std::size_t i = 0; i < rs.size(); ++i) {
                const std::size_t k = g.image_index(i);
                const Weight img = g.apply(rs, rs.root(i).weight);
                o.expect(rs.parity(k) == rs.parity(i), std::string(spec) + ": grading not preserved");
                o.expect(img == (g.flips_sign(i) ? -rs.root(k).weight : rs.root(k).weight),
                         std::string(spec) + ": signed action disagrees with the reflections");
            }
        }
        if (group.size() > 100)
            continue;
        for (int trial = 0; trial < 8; ++trial) {
            RootMask s1;
            for (std::size_t i = 0; i < rs.size(); ++i)
                if (rng() & 1u)
                    s1.set(i);
            const RootMask s2 = rs.all_roots() & ~s1;
            ++splits;
            const auto sig = canonical_signature(rs, group, s1, s2);
            for (const auto& g : group)
                o.expect(canonical_signature(rs, group, apply_to_mask(g, s1, rs.size()),
                                             apply_to_mask(g, s2, rs.size())) == sig,
                         std::string(spec) + ": signature is not a class function");
        }
    }

    for (const auto& spec : specs) {
        const RootSystem rs = build_from_spec(spec);
        ++round_trips;
        o.expect(root_system_from_json(Json::parse(to_json(rs).dump())) == rs, spec + ": JSON round trip");
    }
    for (const Fixture& f : all_fixtures()) {
        const FixtureCheck c = check_fixture(f);
        const Json j = to_json(c.report);
        const SplintReport back = splint_from_json(Json::parse(j.dump()));
        ++round_trips;
        o.expect(to_json(back) == j, f.id + ": splint JSON round trip");
    }

    for (const char* spec : {"B(1,2)", "C(3)", "A(2,1)", "G(3)"}) {
        EnumerateOptions one, four;
        four.jobs = 4;
        const Sys rs = sys(spec);
        const auto a = enumerate(rs, one);
        const auto b = enumerate(rs, four);
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            same = to_json(a[i]) == to_json(b[i]);
        o.expect(same, std::string(spec) + ": output depends on --jobs");
    }
    o.summary = std::to_string(sums) + " sums, " + std::to_string(elements) + " group elements, " +
                std::to_string(splits) + " random splits, " + std::to_string(round_trips) + " round trips";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit;  // seconds; 0 = none
    };
    const std::vector<Criterion> criteria = {
        {1, "root-system counts", counts, kLimitCounts},
        {2, "fixture verification", fixture_verification, kLimitFixtures},
        {3, "table regression", table_regression, 0},
        {4, "enumeration completeness", enumeration_completeness, kLimitEnumeration},
        {5, "non-embedding lemmas", non_embeddings, kLimitNonEmbedding},
        {6, "metric classification", metric_classification, 0},
        {7, "oracle equivalence", oracle_equivalence, 0},
        {8, "property suites", properties, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && s > c.limit)
            o.fail("took " + seconds(s) + ", limit " + seconds(c.limit));
        std::printf("%s %d %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str(),
                    seconds(s).c_str());
        for (const auto& p : o.problems)
            std::printf("     - %s\n", p.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
