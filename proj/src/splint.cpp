#include "splintkit/splint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace splintkit {

const char* to_string(Verdict::Kind k)
{
    switch (k) {
    case Verdict::Kind::valid: return "valid";
    case Verdict::Kind::invalid: return "invalid";
    case Verdict::Kind::paper_discrepancy: return "paper_discrepancy";
    }
    return "?";
}

std::string to_string(const Verdict& v)
{
    if (v.kind == Verdict::Kind::valid)
        return "valid";
    return std::string(to_string(v.kind)) + ": " + v.detail;
}

namespace {

std::string root_list(const RootSystem& rs, const RootMask& m)
{
    std::string out;
    for (std::size_t i : mask_indices(m, rs.size())) {
        if (!out.empty())
            out += ", ";
        out += to_string(rs.root(i).weight);
    }
    return out;
}

struct Counts {
    std::size_t even = 0, odd = 0;
    std::size_t total() const { return even + odd; }
};

Counts mask_counts(const RootSystem& rs, const RootMask& m)
{
    Counts c;
    for (std::size_t i : mask_indices(m, rs.size()))
        (rs.parity(i) == Parity::even ? c.even : c.odd)++;
    return c;
}

Counts type_counts(const ComponentMultiset& t)
{
    Counts c;
    for (const auto& [label, k] : t.entries()) {
        const RootSystem& abs = abstract_system(label);
        c.even += k * abs.count(Parity::even);
        c.odd += k * abs.count(Parity::odd);
    }
    return c;
}

std::string describe(const Counts& c)
{
    return std::to_string(c.total()) + " roots (" + std::to_string(c.even) + " even, " + std::to_string(c.odd) +
           " odd)";
}

Verdict invalid(std::string why) { return {Verdict::Kind::invalid, std::move(why)}; }

} // namespace

SplintReport verify(std::shared_ptr<const RootSystem> target, const RootMask& part1, const ComponentMultiset& type1,
                    const RootMask& part2, const ComponentMultiset& type2, const VerifyOptions& opts)
{
    const RootSystem& rs = *target;
    const RootMask all = rs.all_roots();
    if ((part1 & ~all).any() || (part2 & ~all).any())
        throw std::invalid_argument("splint refers to a root outside the positive roots of " + rs.name());

    SplintReport rep;
    Splint& sp = rep.splint;
    sp.target = target;
    sp.part1 = part1;
    sp.part2 = part2;
    sp.type1 = type1;
    sp.type2 = type2;
    sp.rank_certificate = {type1.total_rank(opts.rank_rule), type2.total_rank(opts.rank_rule), rs.rank()};

    if (auto overlap = part1 & part2; overlap.any()) {
        rep.verdict = invalid("disjoint-cover: roots in both parts: " + root_list(rs, overlap));
        return rep;
    }
    if (auto missing = all & ~(part1 | part2); missing.any()) {
        rep.verdict = invalid("disjoint-cover: roots in neither part: " + root_list(rs, missing));
        return rep;
    }

    const MatchOptions mopts{opts.strict};
    const std::array<const RootMask*, 2> parts{&part1, &part2};
    const std::array<const ComponentMultiset*, 2> types{&type1, &type2};
    const std::array<std::vector<MatchedComponent>*, 2> comps{&sp.components1, &sp.components2};
    for (int side = 0; side < 2; ++side) {
        const std::string tag = "side " + std::to_string(side + 1);
        const Counts have = mask_counts(rs, *parts[side]);
        const Counts need = type_counts(*types[side]);
        if (have.even != need.even || have.odd != need.odd) {
            rep.verdict = invalid("component-match: " + tag + " has " + describe(have) + " but " +
                                  to_string(*types[side]) + " needs " + describe(need));
            return rep;
        }
        auto m = match_typed(rs, *parts[side], *types[side], mopts);
        if (!m) {
            rep.verdict = invalid("component-match: " + tag + " is not a disjoint union of components of type " +
                                  to_string(*types[side]));
            return rep;
        }
        *comps[side] = std::move(*m);
    }

    if (opts.rank_rule != RankRule::off) {
        for (int side = 0; side < 2; ++side)
            if (sp.rank_certificate[side] > rs.rank()) {
                rep.verdict = invalid("rank: effective rank of " + to_string(*types[side]) + " is " +
                                      std::to_string(sp.rank_certificate[side]) + " > rank(" + rs.name() +
                                      ") = " + std::to_string(rs.rank()) + " (rule " +
                                      to_string(opts.rank_rule) + ")");
                return rep;
            }
    }

    rep.verdict = {};
    if (opts.compute_signature)
        rep.signature = canonical_signature(rs, group_elements(rs, opts.weyl_cap), part1, part2, opts.pair_mode);
    return rep;
}

SplintReport verify(std::shared_ptr<const RootSystem> target, const std::vector<Weight>& part1,
                    const ComponentMultiset& type1, const std::vector<Weight>& part2, const ComponentMultiset& type2,
                    const VerifyOptions& opts)
{
    auto to_mask = [&](const std::vector<Weight>& ws, int side) {
        RootMask m;
        for (const Weight& w : ws) {
            auto k = target->index_of(w);
            if (!k)
                throw std::invalid_argument("side " + std::to_string(side) + " lists " + to_string(w) +
                                            ", which is not a positive root of " + target->name());
            if (m.test(*k))
                throw std::invalid_argument("side " + std::to_string(side) + " lists " + to_string(w) + " twice");
            m.set(*k);
        }
        return m;
    };
    return verify(target, to_mask(part1, 1), type1, to_mask(part2, 2), type2, opts);
}

std::optional<std::pair<RootMask, RootMask>> find_typed_splint(const RootSystem& target,
                                                               const ComponentMultiset& type1,
                                                               const ComponentMultiset& type2,
                                                               const MatchOptions& opts)
{
    // A splint of type (T1, T2) is a component decomposition of all positive roots of type
    // T1 + T2; copies of one label are interchangeable, so any split by label works.
    ComponentMultiset both = type1;
    for (const auto& [label, k] : type2.entries())
        both.add(label, k);
    auto comps = match_typed(target, target.all_roots(), both, opts);
    if (!comps)
        return std::nullopt;
    std::map<ComponentLabel, int> want1;
    for (const auto& [label, k] : type1.entries())
        want1[label] += k;
    RootMask p1, p2;
    for (const auto& c : *comps) {
        int& left = want1[c.label];
        if (left > 0) {
            --left;
            p1 |= c.image;
        } else {
            p2 |= c.image;
        }
    }
    return std::make_pair(p1, p2);
}

namespace {

RootMask coloring_mask(std::uint64_t c, std::size_t n)
{
    RootMask m;
    for (std::size_t i = 0; i < n; ++i)
        if ((c >> i) & 1u)
            m.set(i);
    return m;
}

struct Found {
    SplintSignature sig;
    std::uint64_t coloring;
};

} // namespace

std::vector<SplintReport> enumerate(std::shared_ptr<const RootSystem> target, const EnumerateOptions& opts)
{
    const RootSystem& rs = *target;
    const std::size_t n = rs.size();
    if (n > opts.max_roots)
        throw CapacityError(rs.name() + " has " + std::to_string(n) + " positive roots; enumeration is capped at " +
                            std::to_string(opts.max_roots));
    if (n > 62)
        throw CapacityError("enumeration supports at most 62 positive roots");
    if (n < 2)
        return {};

    const auto group = group_elements(rs, opts.weyl_cap);
    const RootMask all = rs.all_roots();
    const int budget = opts.rank_rule == RankRule::off ? Decomposer::kNoDecomposition - 1 : rs.rank();
    const DecomposeOptions dopts{opts.rank_rule, opts.strict};

    // unordered pairs: root 0 always on side 1
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> todo;
    for (std::uint64_t c = 1; c < full; ++c) {
        if (opts.pair_mode == PairMode::unordered && !(c & 1u))
            continue;
        todo.push_back(c);
    }

    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::vector<Found>> per_worker(jobs);
    auto work = [&](unsigned w) {
        Decomposer dec(rs, all, dopts);
        std::map<SplintSignature, std::uint64_t> best;
        auto& out = per_worker[w];
        for (std::size_t t = w; t < todo.size(); t += jobs) {
            const std::uint64_t c = todo[t];
            const RootMask p1 = coloring_mask(c, n);
            const RootMask p2 = all & ~p1;
            if (dec.min_rank(p1) > budget || dec.min_rank(p2) > budget)
                continue;
            SplintSignature sig = canonical_signature(rs, group, p1, p2, opts.pair_mode);
            if (opts.dedup == Dedup::none) {
                out.push_back({sig, c});
                continue;
            }
            auto it = best.find(sig);
            if (it == best.end())
                best.emplace(std::move(sig), c);
            else
                it->second = std::min(it->second, c);
        }
        for (auto& [sig, c] : best)
            out.push_back({sig, c});
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }

    std::vector<Found> found;
    if (opts.dedup == Dedup::none) {
        for (auto& v : per_worker)
            found.insert(found.end(), v.begin(), v.end());
    } else {
        std::map<SplintSignature, std::uint64_t> merged;
        for (auto& v : per_worker)
            for (auto& f : v) {
                auto it = merged.find(f.sig);
                if (it == merged.end())
                    merged.emplace(f.sig, f.coloring);
                else
                    it->second = std::min(it->second, f.coloring);
            }
        for (auto& [sig, c] : merged)
            found.push_back({sig, c});
    }
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        if (a.sig < b.sig)
            return true;
        if (b.sig < a.sig)
            return false;
        return a.coloring < b.coloring;
    });

    Decomposer dec(rs, all, dopts);
    std::vector<SplintReport> out;
    out.reserve(found.size());
    for (const auto& f : found) {
        SplintReport rep;
        Splint& sp = rep.splint;
        sp.target = target;
        sp.part1 = coloring_mask(f.coloring, n);
        sp.part2 = all & ~sp.part1;
        auto d1 = dec.decompose(sp.part1, budget);
        auto d2 = dec.decompose(sp.part2, budget);
        if (!d1 || !d2)
            throw std::logic_error("enumerate: representative lost its decomposition");
        sp.type1 = d1->type;
        sp.type2 = d2->type;
        sp.components1 = std::move(d1->components);
        sp.components2 = std::move(d2->components);
        sp.rank_certificate = {d1->rank, d2->rank, rs.rank()};
        rep.signature = f.sig;
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace splintkit
