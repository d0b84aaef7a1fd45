#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "splintkit/embed.hpp"
#include "splintkit/fixtures.hpp"
#include "splintkit/json_io.hpp"
#include "splintkit/report.hpp"
#include "splintkit/splint.hpp"

using namespace splintkit;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kCapacity = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SPLINTKIT_CAPS="roots=24,weyl=1000000,nodes=50000000"
struct Caps {
    std::size_t roots = 24;
    std::size_t weyl = kDefaultWeylCap;
    std::uint64_t nodes = MatchOptions{}.node_limit;
};

Caps read_caps()
{
    Caps caps;
    const char* env = std::getenv("SPLINTKIT_CAPS");
    if (!env)
        return caps;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("SPLINTKIT_CAPS: expected key=value, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        std::uint64_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoull(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1)
                throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw UsageError("SPLINTKIT_CAPS: bad number in \"" + item + "\"");
        }
        if (key == "roots")
            caps.roots = value;
        else if (key == "weyl")
            caps.weyl = value;
        else if (key == "nodes")
            caps.nodes = value;
        else
            throw UsageError("SPLINTKIT_CAPS: unknown key \"" + key + "\" (roots, weyl, nodes)");
    }
    return caps;
}

std::shared_ptr<const RootSystem> system_arg(const std::string& arg)
{
    if (std::filesystem::is_regular_file(arg))
        return std::make_shared<const RootSystem>(root_system_from_json(read_json_file(arg)));
    return std::make_shared<const RootSystem>(build_from_spec(arg));
}

RankRule rank_rule_arg(const std::string& s)
{
    auto r = rank_rule_from_string(s);
    if (!r)
        throw UsageError("unknown rank rule \"" + s + "\" (zero-a00, unit, off)");
    return *r;
}

PairMode pair_mode_arg(const std::string& s)
{
    if (s == "unordered")
        return PairMode::unordered;
    if (s == "ordered")
        return PairMode::ordered;
    throw UsageError("unknown pair mode \"" + s + "\" (unordered, ordered)");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_roots(const std::string& spec, const std::string& format)
{
    const auto rs = system_arg(spec);
    if (format == "json") {
        print(to_json(*rs));
        return kOk;
    }
    std::cout << "# " << rs->name() << ": " << rs->size() << " positive roots (" << rs->count(Parity::even)
              << " even, " << rs->count(Parity::odd) << " odd), rank " << rs->rank() << "\n";
    std::size_t width = 4;
    for (const Root& r : rs->roots())
        width = std::max(width, to_string(r.weight).size());
    std::cout << std::left << std::setw(5) << "#" << std::setw(static_cast<int>(width) + 2) << "root"
              << "parity\n";
    for (std::size_t i = 0; i < rs->size(); ++i)
        std::cout << std::left << std::setw(5) << i << std::setw(static_cast<int>(width) + 2)
                  << to_string(rs->root(i).weight) << to_string(rs->parity(i)) << "\n";
    return kOk;
}

int cmd_embed(const std::string& from, const std::string& to, bool metric_only, std::size_t max, bool strict)
{
    const auto dom = system_arg(from);
    const auto cod = system_arg(to);
    EmbedOptions opts;
    opts.max_count = max;
    opts.metric_only = metric_only;
    opts.strict = strict;
    const auto maps = find_embeddings(dom, cod, opts);
    Json out = Json::array();
    for (const auto& m : maps) {
        Json j = to_json(m);
        const MetricVerdict mv = metric_verdict(m);
        j["metric"] = to_string(mv.kind);
        if (mv.kind == MetricVerdict::Kind::metric)
            j["lambda"] = to_string(mv.lambda);
        out.push_back(j);
    }
    print(out);
    std::cerr << "count " << maps.size() << "\n";
    return kOk;
}

int cmd_verify(const std::string& system, const std::string& file, const VerifyOptions& opts)
{
    const auto target = system_arg(system);
    Json j = read_json_file(file);
    if (j.contains("target") && system_from_ref(j.at("target"))->name() != target->name())
        throw UsageError("splint file targets " + system_from_ref(j.at("target"))->name() + ", not " +
                         target->name());
    j["target"] = system_ref(*target);
    const SplintReport given = splint_from_json(j);
    const SplintReport rep = verify(target, given.splint.part1, given.splint.type1, given.splint.part2,
                                    given.splint.type2, opts);
    print(to_json(rep));
    return rep.verdict.ok() ? kOk : kFailed;
}

int cmd_enumerate(const std::string& system, const EnumerateOptions& opts)
{
    const auto target = system_arg(system);
    const auto found = enumerate(target, opts);
    Json out = Json::array();
    for (const auto& rep : found)
        out.push_back(to_json(rep));
    print(out);
    std::cerr << "classes " << found.size() << "\n";
    return kOk;
}

int cmd_report(const std::string& filter, const std::string& manifest, const std::string& json_out, bool timing,
               const VerifyOptions& vopts)
{
    ReportOptions opts;
    opts.filter = filter;
    opts.verify = vopts;
    opts.manifest = load_manifest(manifest.empty() ? default_fixture_dir() + "/manifest.json" : manifest);
    const RunReport rep = run_report(opts);
    if (rep.rows.empty())
        throw UsageError("filter \"" + filter + "\" selects no table rows");
    std::cout << rep.text();
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out)
            throw UsageError("cannot write " + json_out);
        out << rep.to_json(timing).dump(2) << "\n";
    }
    return rep.ok() ? kOk : kFailed;
}

Json sets_json(const FixtureSets& s)
{
    Json j;
    Json p1 = Json::array(), p2 = Json::array();
    for (const auto& w : s.part1)
        p1.push_back(to_string(w));
    for (const auto& w : s.part2)
        p2.push_back(to_string(w));
    j["part1"] = p1;
    j["part2"] = p2;
    if (!s.out_of_range.empty())
        j["out_of_range"] = s.out_of_range;
    return j;
}

Json fixture_json(const Fixture& f, const VerifyOptions& opts)
{
    const FixtureCheck c = check_fixture(f, opts);
    Json j;
    j["id"] = f.id;
    j["item"] = f.item;
    j["paper_type1"] = f.paper_type1;
    j["paper_type2"] = f.paper_type2;
    const Json splint = to_json(c.report);
    for (auto& [k, v] : splint.items())
        j[k] = v;
    if (c.printed_verdict)
        j["printed_verdict"] = to_string(*c.printed_verdict);
    if (f.printed)
        j["printed"] = sets_json(*f.printed);
    if (f.reading)
        j["reading"] = sets_json(*f.reading);
    if (!f.reading_note.empty())
        j["reading_note"] = f.reading_note;
    j["notes"] = c.report.notes;
    return j;
}

int cmd_fixtures_dump(const std::string& dir, const VerifyOptions& opts)
{
    std::filesystem::create_directories(dir);
    for (const Fixture& f : all_fixtures()) {
        const std::string path = dir + "/" + f.id + ".json";
        std::ofstream out(path);
        if (!out)
            throw UsageError("cannot write " + path);
        out << fixture_json(f, opts).dump(2) << "\n";
    }
    std::cerr << "wrote " << all_fixtures().size() << " fixtures to " << dir << "\n";
    return kOk;
}

int cmd_fixtures_check(const std::string& id, const VerifyOptions& opts)
{
    const Fixture& f = [&]() -> const Fixture& {
        try {
            return fixture(id);
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }();
    const Json j = fixture_json(f, opts);
    print(j);
    return j.at("verdict") == "valid" ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Root systems of Lie superalgebras: embeddings and splints"};
    app.require_subcommand(1);

    std::string rank_rule = "zero-a00", pair_mode = "unordered";
    bool strict = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rank-rule", rank_rule, "zero-a00 | unit | off")->capture_default_str();
        sub->add_option("--pair-mode", pair_mode, "unordered | ordered")->capture_default_str();
        sub->add_flag("--strict", strict, "require images to carry no extra additions");
    };

    std::string spec, format = "text";
    auto* roots = app.add_subcommand("roots", "print the positive roots of a system");
    roots->add_option("spec", spec, "system, e.g. A(1,1), B(0,3), D(2,1;a), or a JSON file")->required();
    roots->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string from, to;
    bool metric_only = false;
    std::size_t max = 0;
    auto* embed = app.add_subcommand("embed", "list embeddings between two systems");
    embed->add_option("--from", from, "domain spec or JSON file")->required();
    embed->add_option("--to", to, "codomain spec or JSON file")->required();
    embed->add_flag("--metric-only", metric_only, "keep metric embeddings only");
    embed->add_option("--max", max, "stop after N maps (0 = all)");
    embed->add_flag("--strict", strict, "require images to carry no extra additions");

    std::string system, splint_file;
    auto* verify_cmd = app.add_subcommand("verify", "verify a splint given as JSON");
    verify_cmd->add_option("--system", system, "target system")->required();
    verify_cmd->add_option("--splint", splint_file, "splint JSON file")->required()->check(CLI::ExistingFile);
    add_common(verify_cmd);

    std::string dedup = "weyl";
    unsigned jobs = 1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "all splints up to even Weyl equivalence");
    enumerate_cmd->add_option("--system", system, "target system")->required();
    enumerate_cmd->add_option("--dedup", dedup, "weyl | none")->check(CLI::IsMember({"weyl", "none"}))
        ->capture_default_str();
    enumerate_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    add_common(enumerate_cmd);

    bool tables = false, timing = false;
    std::string filter, manifest, json_out;
    auto* report = app.add_subcommand("report", "regression run over the splint tables");
    report->add_flag("--tables", tables, "run the table fixtures")->required();
    report->add_option("--filter", filter, "table (I, II, III, IV, VII) or system letter (A, B, C, D, G, F)");
    report->add_option("--manifest", manifest, "fixture manifest (default: the shipped one)");
    report->add_option("--json", json_out, "write the machine-readable report here");
    report->add_flag("--timing", timing, "include wall times in the JSON report");
    report->add_option("--rank-rule", rank_rule, "zero-a00 | unit | off")->capture_default_str();

    std::string out_dir = "fixtures", fixture_id;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "the fixture corpus");
    fixtures_cmd->require_subcommand(1);
    auto* dump = fixtures_cmd->add_subcommand("dump", "write one JSON file per fixture");
    dump->add_option("--out", out_dir, "output directory")->capture_default_str();
    auto* list = fixtures_cmd->add_subcommand("list", "list fixture ids");
    auto* check = fixtures_cmd->add_subcommand("check", "check one fixture");
    check->add_option("id", fixture_id, "fixture id, e.g. III.7.3x3")->required();
    check->add_option("--rank-rule", rank_rule, "zero-a00 | unit | off")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Caps caps = read_caps();
        VerifyOptions vopts;
        vopts.rank_rule = rank_rule_arg(rank_rule);
        vopts.pair_mode = pair_mode_arg(pair_mode);
        vopts.strict = strict;
        vopts.weyl_cap = caps.weyl;

        if (*roots)
            return cmd_roots(spec, format);
        if (*embed)
            return cmd_embed(from, to, metric_only, max, strict);
        if (*verify_cmd)
            return cmd_verify(system, splint_file, vopts);
        if (*enumerate_cmd) {
            EnumerateOptions eopts;
            eopts.rank_rule = vopts.rank_rule;
            eopts.pair_mode = vopts.pair_mode;
            eopts.dedup = dedup == "none" ? Dedup::none : Dedup::weyl;
            eopts.strict = strict;
            eopts.max_roots = caps.roots;
            eopts.weyl_cap = caps.weyl;
            eopts.jobs = jobs;
            return cmd_enumerate(system, eopts);
        }
        if (*report)
            return cmd_report(filter, manifest, json_out, timing, vopts);
        if (*dump)
            return cmd_fixtures_dump(out_dir, vopts);
        if (*list) {
            for (const Fixture& f : all_fixtures())
                std::cout << f.id << "\t" << f.system << "\t" << f.paper_type1 << " | " << f.paper_type2 << "\n";
            return kOk;
        }
        if (*check)
            return cmd_fixtures_check(fixture_id, vopts);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kCapacity;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const JsonError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
