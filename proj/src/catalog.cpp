#include "splintkit/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <stdexcept>

#include "splintkit/additive_maps.hpp"

namespace splintkit {

// ---------------------------------------------------------------- labels

bool ComponentLabel::is_even_only() const
{
    switch (kind) {
    case LabelKind::A_n:
    case LabelKind::B_n:
    case LabelKind::C_n:
    case LabelKind::D_n:
    case LabelKind::G_2:
    case LabelKind::D_2: return true;
    default: return false;
    }
}

const char* to_string(RankRule r)
{
    switch (r) {
    case RankRule::zero_a00: return "zero-a00";
    case RankRule::unit: return "unit";
    case RankRule::off: return "off";
    }
    return "?";
}

std::optional<RankRule> rank_rule_from_string(const std::string& s)
{
    for (RankRule r : {RankRule::zero_a00, RankRule::unit, RankRule::off})
        if (s == to_string(r))
            return r;
    return std::nullopt;
}

std::string to_string(const ComponentLabel& l)
{
    auto idx = [&](const char* base) { return std::string(base) + std::to_string(l.p); };
    auto pair = [&](char base) {
        return std::string(1, base) + "(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
    };
    switch (l.kind) {
    case LabelKind::A_n: return idx("A_");
    case LabelKind::B_n: return idx("B_");
    case LabelKind::C_n: return idx("C_");
    case LabelKind::D_n: return idx("D_");
    case LabelKind::G_2: return "G_2";
    case LabelKind::D_2: return "D_2";
    case LabelKind::A_super: return pair('A');
    case LabelKind::B_super: return pair('B');
    case LabelKind::C_super: return "C(" + std::to_string(l.p) + ")";
    case LabelKind::D_super: return pair('D');
    }
    return "?";
}

void validate(const ComponentLabel& l)
{
    auto fail = [&](const std::string& why) { throw std::invalid_argument("label " + to_string(l) + ": " + why); };
    switch (l.kind) {
    case LabelKind::A_n:
        if (l.p < 1) fail("A_n requires n >= 1");
        break;
    case LabelKind::B_n:
    case LabelKind::C_n:
        if (l.p < 1) fail("requires n >= 1");
        break;
    case LabelKind::D_n:
        if (l.p < 3) fail("D_n requires n >= 3 (D_2 is its own label)");
        break;
    case LabelKind::G_2:
    case LabelKind::D_2: break;
    case LabelKind::A_super:
        if (l.p < 0 || l.q < 0) fail("A(r,s) requires r,s >= 0");
        break;
    case LabelKind::B_super:
        if (l.p < 0 || l.q < 1) fail("B(r,s) requires r >= 0, s >= 1");
        break;
    case LabelKind::C_super:
        if (l.p < 2) fail("C(n) requires n >= 2");
        break;
    case LabelKind::D_super:
        if (l.p < 1 || l.q < 1) fail("D(r,s) requires r,s >= 1");
        break;
    }
}

ComponentLabel parse_label(const std::string& text)
{
    static const std::regex re(R"(^([ABCDG])(?:_(\d+)|\((\d+)(?:,(\d+))?\))$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw std::invalid_argument("cannot parse component label '" + text + "'");
    const char c = m[1].str()[0];
    ComponentLabel l;
    if (m[2].matched) {
        l.p = std::stoi(m[2]);
        switch (c) {
        case 'A': l.kind = LabelKind::A_n; break;
        case 'B': l.kind = LabelKind::B_n; break;
        case 'C': l.kind = LabelKind::C_n; break;
        case 'D': l.kind = l.p == 2 ? LabelKind::D_2 : LabelKind::D_n; break;
        case 'G':
            if (l.p != 2)
                throw std::invalid_argument("unknown label '" + text + "'");
            l.kind = LabelKind::G_2;
            break;
        }
        if (l.kind == LabelKind::D_2 || l.kind == LabelKind::G_2)
            l.p = 0;
    } else {
        l.p = std::stoi(m[3]);
        const bool two = m[4].matched;
        if (two)
            l.q = std::stoi(m[4]);
        switch (c) {
        case 'A': l.kind = LabelKind::A_super; break;
        case 'B': l.kind = LabelKind::B_super; break;
        case 'C': l.kind = LabelKind::C_super; break;
        case 'D': l.kind = LabelKind::D_super; break;
        default: throw std::invalid_argument("unknown label '" + text + "'");
        }
        if (two == (l.kind == LabelKind::C_super))
            throw std::invalid_argument("wrong parameter count in label '" + text + "'");
    }
    validate(l);
    return l;
}

int effective_rank(const ComponentLabel& l, RankRule rule)
{
    switch (l.kind) {
    case LabelKind::A_n:
    case LabelKind::B_n:
    case LabelKind::C_n:
    case LabelKind::D_n: return l.p;
    case LabelKind::G_2:
    case LabelKind::D_2: return 2;
    case LabelKind::A_super:
        if (l.p == 0 && l.q == 0)
            return rule == RankRule::unit ? 1 : 0;
        return l.p + l.q + 1;
    case LabelKind::B_super:
    case LabelKind::D_super: return l.p + l.q;
    case LabelKind::C_super: return l.p;
    }
    return 0;
}

// ---------------------------------------------------------------- multisets

namespace {

std::pair<int, std::string> display_key(const ComponentLabel& l)
{
    int group = l.is_a00() ? 2 : l.is_even_only() ? 1 : 0;
    return {group, to_string(l)};
}

} // namespace

ComponentMultiset::ComponentMultiset(const std::vector<ComponentLabel>& labels)
{
    for (const auto& l : labels)
        add(l);
}

void ComponentMultiset::add(const ComponentLabel& l, int multiplicity)
{
    if (multiplicity < 1)
        throw std::invalid_argument("multiplicity must be >= 1");
    for (auto& [label, mult] : entries_)
        if (label == l) {
            mult += multiplicity;
            return;
        }
    entries_.emplace_back(l, multiplicity);
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return display_key(a.first) < display_key(b.first); });
}

std::vector<ComponentLabel> ComponentMultiset::expanded() const
{
    std::vector<ComponentLabel> out;
    for (const auto& [l, k] : entries_)
        out.insert(out.end(), k, l);
    return out;
}

int ComponentMultiset::total_rank(RankRule rule) const
{
    int r = 0;
    for (const auto& [l, k] : entries_)
        r += k * effective_rank(l, rule);
    return r;
}

int ComponentMultiset::component_count() const
{
    int c = 0;
    for (const auto& [l, k] : entries_)
        c += k;
    return c;
}

std::string to_string(const ComponentMultiset& m)
{
    std::string out;
    for (const auto& [l, k] : m.entries()) {
        if (!out.empty())
            out += '+';
        if (k > 1)
            out += std::to_string(k);
        out += to_string(l);
    }
    return out.empty() ? "0" : out;
}

ComponentMultiset parse_multiset(const std::string& text)
{
    static const std::regex term_re(R"(^(\d*)(.+)$)");
    ComponentMultiset out;
    std::size_t start = 0;
    std::string compact;
    for (char c : text)
        if (c != ' ')
            compact += c;
    if (compact.empty())
        throw std::invalid_argument("empty component multiset");
    while (start <= compact.size()) {
        std::size_t plus = compact.find('+', start);
        std::string term = compact.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        std::smatch m;
        if (term.empty() || !std::regex_match(term, m, term_re))
            throw std::invalid_argument("cannot parse component multiset '" + text + "'");
        int k = m[1].str().empty() ? 1 : std::stoi(m[1]);
        if (k < 1)
            throw std::invalid_argument("zero multiplicity in '" + text + "'");
        out.add(parse_label(m[2]), k);
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return out;
}

// ---------------------------------------------------------------- abstract systems

const RootSystem& abstract_system(const ComponentLabel& label)
{
    static std::mutex mu;
    static std::map<ComponentLabel, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end())
        return *it->second;
    validate(label);
    RootSystem rs = [&] {
        switch (label.kind) {
        case LabelKind::A_n: return build(Family::An, label.p);
        case LabelKind::B_n: return build(Family::Bn, label.p);
        case LabelKind::C_n: return build(Family::Cn, label.p);
        case LabelKind::D_n: return build(Family::Dn, label.p);
        case LabelKind::D_2: return build(Family::Dn, 2);
        case LabelKind::G_2: return build(Family::G2);
        case LabelKind::A_super: return build(Family::A, label.p, label.q);
        case LabelKind::B_super: return build(Family::B, label.p, label.q);
        case LabelKind::C_super: return build(Family::C, label.p);
        case LabelKind::D_super: return build(Family::D, label.p, label.q);
        }
        throw std::invalid_argument("unknown label");
    }();
    auto [pos, ok] = cache.emplace(label, std::make_unique<RootSystem>(std::move(rs)));
    return *pos->second;
}

AdditionStructure addition_structure(const RootSystem& ambient, const RootMask& roots)
{
    AdditionStructure out;
    out.elements = mask_indices(roots, ambient.size());
    std::vector<int> position(ambient.size(), -1);
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        position[out.elements[i]] = static_cast<int>(i);
        out.parities.push_back(ambient.parity(out.elements[i]));
    }
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (std::size_t j = i; j < out.elements.size(); ++j) {
            int s = ambient.sum_index(out.elements[i], out.elements[j]);
            if (s >= 0 && position[s] >= 0)
                out.triples.push_back({i, j, static_cast<std::size_t>(position[s])});
        }
    return out;
}

// ---------------------------------------------------------------- matching

std::optional<std::vector<int>> match_component(const RootSystem& ambient, const RootMask& S,
                                                const ComponentLabel& label, const MatchOptions& opts)
{
    const RootSystem& abs = abstract_system(label);
    if (S.count() != abs.size())
        throw std::invalid_argument("match_component: |S| = " + std::to_string(S.count()) + " but " +
                                    to_string(label) + " has " + std::to_string(abs.size()) + " positive roots");
    std::optional<std::vector<int>> found;
    AdditiveMapSearch search(abs, ambient, {opts.strict});
    search.run(S, [&](const std::vector<int>& img) {
        found = img;
        return false;
    });
    return found;
}

namespace {

std::size_t lowest(const RootMask& m)
{
    for (std::size_t i = 0; i < kMaxRoots; ++i)
        if (m.test(i))
            return i;
    return kMaxRoots;
}

// Strict mode reads the image of a side as one embedded system: an addition among its
// roots must stay inside one component (where the component itself mirrors it).
bool splits_no_triple(const RootSystem& ambient, const RootMask& S, const RootMask& I)
{
    const auto idx = mask_indices(S, ambient.size());
    for (std::size_t a : idx)
        for (std::size_t b : idx) {
            const int k = ambient.sum_index(a, b);
            if (k < 0 || !S.test(static_cast<std::size_t>(k)))
                continue;
            const int inside = I.test(a) + I.test(b) + I.test(static_cast<std::size_t>(k));
            if (inside != 0 && inside != 3)
                return false;
        }
    return true;
}

class TypedMatcher {
public:
    TypedMatcher(const RootSystem& ambient, const ComponentMultiset& type, const MatchOptions& opts)
        : ambient_(ambient), opts_(opts)
    {
        for (const auto& l : type.expanded()) {
            if (l.is_a00())
                ++n_a00_;
            else if (l.kind == LabelKind::D_2)
                ++n_d2_;
            else if (l.kind == LabelKind::A_n && l.p == 1)
                ++n_a1_;
            else
                searched_.push_back(l);
        }
        std::stable_sort(searched_.begin(), searched_.end(), [](const auto& a, const auto& b) {
            return abstract_system(a).size() > abstract_system(b).size();
        });
        need_even_.assign(searched_.size() + 1, n_a1_ + 2 * n_d2_);
        need_odd_.assign(searched_.size() + 1, n_a00_);
        for (std::size_t i = searched_.size(); i-- > 0;) {
            const RootSystem& abs = abstract_system(searched_[i]);
            need_even_[i] = need_even_[i + 1] + abs.count(Parity::even);
            need_odd_[i] = need_odd_[i + 1] + abs.count(Parity::odd);
        }
    }

    std::optional<std::vector<MatchedComponent>> run(const RootMask& S)
    {
        std::vector<MatchedComponent> out;
        if (descend(0, S, kMaxRoots, out))
            return out;
        return std::nullopt;
    }

private:
    bool counts_fit(std::size_t idx, const RootMask& rest) const
    {
        const RootMask even = rest & ambient_.roots_of_parity(Parity::even);
        return even.count() == need_even_[idx] && (rest.count() - even.count()) == need_odd_[idx];
    }

    void tick()
    {
        if (++nodes_ > opts_.node_limit)
            throw CapacityError("typed component match exceeded " + std::to_string(opts_.node_limit) +
                                " search nodes");
    }

    bool descend(std::size_t idx, const RootMask& rest, std::size_t prev_low, std::vector<MatchedComponent>& out)
    {
        tick();
        if (!counts_fit(idx, rest))
            return false;
        if (idx == searched_.size()) {
            const std::size_t before = out.size();
            finish(rest, out);
            if (opts_.strict && !separated(out)) {
                out.resize(before);
                return false;
            }
            return true;
        }
        const ComponentLabel& label = searched_[idx];
        const bool same_as_prev = idx > 0 && searched_[idx - 1] == label;
        const RootSystem& abs = abstract_system(label);
        AdditiveMapSearch search(abs, ambient_, {opts_.strict});
        std::set<std::string> seen;
        bool success = false;
        search.run(rest, [&](const std::vector<int>& img) {
            tick();
            RootMask image;
            for (int c : img)
                image.set(c);
            const std::size_t low = lowest(image);
            if (same_as_prev && low <= prev_low)
                return true;
            if (!seen.insert(image.to_string()).second)
                return true;
            out.push_back({label, img, image});
            if (descend(idx + 1, rest & ~image, low, out)) {
                success = true;
                return false;
            }
            out.pop_back();
            return true;
        });
        return success;
    }

    bool separated(const std::vector<MatchedComponent>& comps) const
    {
        RootMask S;
        for (const auto& c : comps)
            S |= c.image;
        for (const auto& c : comps)
            if (!splits_no_triple(ambient_, S, c.image))
                return false;
        return true;
    }

    void finish(const RootMask& rest, std::vector<MatchedComponent>& out) const
    {
        std::vector<int> evens, odds;
        for (std::size_t i = 0; i < ambient_.size(); ++i)
            if (rest.test(i))
                (ambient_.parity(i) == Parity::even ? evens : odds).push_back(static_cast<int>(i));
        std::size_t e = 0;
        const ComponentLabel d2{LabelKind::D_2, 0, 0};
        const RootSystem& d2_abs = abstract_system(d2);
        for (std::size_t k = 0; k < n_d2_; ++k) {
            // D_2 abstract roots are e1-e2, e1+e2; no triple, so any order works
            std::vector<int> bij = {evens[e], evens[e + 1]};
            (void)d2_abs;
            RootMask image;
            image.set(evens[e]).set(evens[e + 1]);
            out.push_back({d2, bij, image});
            e += 2;
        }
        for (; e < evens.size(); ++e)
            out.push_back({ComponentLabel::a1(), {evens[e]}, RootMask().set(evens[e])});
        for (int o : odds)
            out.push_back({ComponentLabel::a00(), {o}, RootMask().set(o)});
    }

    const RootSystem& ambient_;
    MatchOptions opts_;
    std::vector<ComponentLabel> searched_;
    std::size_t n_a1_ = 0, n_a00_ = 0, n_d2_ = 0;
    std::vector<std::size_t> need_even_, need_odd_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<std::vector<MatchedComponent>> match_typed(const RootSystem& ambient, const RootMask& S,
                                                         const ComponentMultiset& type, const MatchOptions& opts)
{
    TypedMatcher matcher(ambient, type, opts);
    return matcher.run(S);
}

// ---------------------------------------------------------------- decomposition

std::vector<ComponentLabel> candidate_labels(std::size_t max_even, std::size_t max_odd)
{
    std::vector<ComponentLabel> out;
    auto fits = [&](std::size_t e, std::size_t o) { return e <= max_even && o <= max_odd && e + o >= 2; };
    for (int n = 2; static_cast<std::size_t>(n * (n + 1) / 2) <= max_even; ++n)
        out.push_back({LabelKind::A_n, n, 0});
    for (int n = 2; static_cast<std::size_t>(n * n) <= max_even; ++n) {
        out.push_back({LabelKind::B_n, n, 0});
        out.push_back({LabelKind::C_n, n, 0});
    }
    for (int n = 3; static_cast<std::size_t>(n * (n - 1)) <= max_even; ++n)
        out.push_back({LabelKind::D_n, n, 0});
    if (max_even >= 6)
        out.push_back({LabelKind::G_2, 0, 0});
    const int lim = 12;
    for (int r = 0; r < lim; ++r)
        for (int s = 0; s < lim; ++s) {
            const std::size_t R = r, S = s;
            if ((r || s) && fits(R * (R + 1) / 2 + S * (S + 1) / 2, (R + 1) * (S + 1)))
                out.push_back({LabelKind::A_super, r, s});
            if (s >= 1 && fits(R * R + S * S, 2 * R * S + S))
                out.push_back({LabelKind::B_super, r, s});
            if (r >= 1 && s >= 1 && fits(R * (R - 1) + S * S, 2 * R * S))
                out.push_back({LabelKind::D_super, r, s});
        }
    for (int n = 2; n < lim; ++n) {
        const std::size_t k = n - 1;
        if (fits(k * k, 2 * k))
            out.push_back({LabelKind::C_super, n, 0});
    }
    return out;
}

Decomposer::Decomposer(const RootSystem& ambient, const RootMask& universe, DecomposeOptions opts)
    : ambient_(ambient), universe_(universe), opts_(opts), by_root_(ambient.size())
{
    const std::size_t evens = (universe & ambient.roots_of_parity(Parity::even)).count();
    const std::size_t odds = universe.count() - evens;
    for (const auto& label : candidate_labels(evens, odds)) {
        const RootSystem& abs = abstract_system(label);
        AdditiveMapSearch search(abs, ambient, {opts.strict});
        std::set<std::string> seen;
        search.run(universe, [&](const std::vector<int>& img) {
            RootMask image;
            for (int c : img)
                image.set(c);
            if (seen.insert(image.to_string()).second)
                occurrences_.push_back({label, image, img, effective_rank(label, opts_.rank_rule), to_string(label)});
            return true;
        });
    }
    for (std::size_t o = 0; o < occurrences_.size(); ++o)
        for (std::size_t i = 0; i < ambient.size(); ++i)
            if (occurrences_[o].image.test(i))
                by_root_[i].push_back(static_cast<int>(o));
}

const Decomposer::Best& Decomposer::solve(const RootMask& S)
{
    if (auto it = memo_.find(S); it != memo_.end())
        return it->second;
    Best best;
    best.rank = kNoDecomposition;
    if (S.none()) {
        best.rank = 0;
        return memo_.emplace(S, best).first->second;
    }
    const std::size_t r = lowest(S);
    auto better = [](const Best& a, const Best& b) {
        if (a.rank != b.rank)
            return a.rank < b.rank;
        if (a.count != b.count)
            return a.count < b.count;
        return a.labels < b.labels;
    };
    auto combine = [&](const Best& rest, int rank, const std::string& name, int choice) {
        Best c;
        c.rank = rest.rank + rank;
        c.count = rest.count + 1;
        c.labels = rest.labels;
        c.labels.insert(std::upper_bound(c.labels.begin(), c.labels.end(), name), name);
        c.choice = choice;
        return c;
    };
    RootMask without = S;
    without.reset(r);
    if (!opts_.strict || splits_no_triple(ambient_, S, RootMask().set(r))) {
        const bool even = ambient_.parity(r) == Parity::even;
        const ComponentLabel single = even ? ComponentLabel::a1() : ComponentLabel::a00();
        Best rest = solve(without);
        if (rest.rank < kNoDecomposition)
            best = combine(rest, effective_rank(single, opts_.rank_rule), to_string(single), -2);
    }
    for (int o : by_root_[r]) {
        const Occurrence& occ = occurrences_[o];
        if ((occ.image & ~S).any())
            continue;
        if (opts_.strict && !splits_no_triple(ambient_, S, occ.image))
            continue;
        Best rest = solve(S & ~occ.image);
        if (rest.rank >= kNoDecomposition)
            continue;
        Best cand = combine(rest, occ.rank, occ.name, o);
        if (better(cand, best))
            best = std::move(cand);
    }
    return memo_.emplace(S, std::move(best)).first->second;
}

int Decomposer::min_rank(const RootMask& S) { return solve(S).rank; }

std::optional<Decomposition> Decomposer::decompose(const RootMask& S, int rank_budget)
{
    if ((S & ~universe_).any())
        throw std::invalid_argument("decompose: set is not inside the universe");
    const Best& top = solve(S);
    if (top.rank >= kNoDecomposition)
        return std::nullopt;
    if (opts_.rank_rule != RankRule::off && top.rank > rank_budget)
        return std::nullopt;
    Decomposition out;
    out.rank = top.rank;
    RootMask rest = S;
    while (rest.any()) {
        const Best& b = solve(rest);
        if (b.choice == -2) {
            const std::size_t r = lowest(rest);
            const bool even = ambient_.parity(r) == Parity::even;
            const ComponentLabel single = even ? ComponentLabel::a1() : ComponentLabel::a00();
            out.components.push_back({single, {static_cast<int>(r)}, RootMask().set(r)});
            out.type.add(single);
            rest.reset(r);
        } else {
            const Occurrence& occ = occurrences_[b.choice];
            out.components.push_back({occ.label, occ.bijection, occ.image});
            out.type.add(occ.label);
            rest &= ~occ.image;
        }
    }
    return out;
}

std::optional<Decomposition> decompose(const RootSystem& ambient, const RootMask& S, int rank_budget,
                                       DecomposeOptions opts)
{
    Decomposer d(ambient, S, opts);
    return d.decompose(S, rank_budget);
}

} // namespace splintkit
