#include "splintkit/weyl.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace splintkit {

Weight reflect(const RootSystem& rs, std::size_t beta, const Weight& x)
{
    const Root& b = rs.root(beta);
    if (b.parity != Parity::even)
        throw std::invalid_argument("reflection in odd root " + to_string(b.weight) + " is not used");
    const FormValue bb = rs.form().pair(b.weight, b.weight);
    if (bb.is_zero())
        throw std::invalid_argument("reflection in isotropic root " + to_string(b.weight));
    const FormValue xb = rs.form().pair(x, b.weight);
    if (xb.is_zero())
        return x;
    auto c = exact_ratio(Rational(2) * xb, bb);
    if (!c)
        throw std::logic_error("reflection coefficient depends on alpha");
    return x - (*c) * b.weight;
}

Weight WeylElement::apply(const RootSystem& rs, const Weight& x) const
{
    Weight y = x;
    for (int g : word)
        y = reflect(rs, static_cast<std::size_t>(g), y);
    return y;
}

WeylElement reflection(const RootSystem& rs, std::size_t beta)
{
    WeylElement e;
    e.word = {static_cast<int>(beta)};
    e.action.resize(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        Weight y = reflect(rs, beta, rs.root(i).weight);
        if (auto k = rs.index_of(y))
            e.action[i] = static_cast<int>(*k) + 1;
        else if (auto k2 = rs.index_of(-y))
            e.action[i] = -(static_cast<int>(*k2) + 1);
        else
            throw std::logic_error("reflection does not preserve the roots of " + rs.name());
    }
    return e;
}

WeylElement then(const WeylElement& a, const WeylElement& b)
{
    WeylElement out;
    out.word = a.word;
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    out.action.resize(a.action.size());
    for (std::size_t i = 0; i < a.action.size(); ++i) {
        const int s = a.action[i] < 0 ? -1 : 1;
        out.action[i] = s * b.action[a.image_index(i)];
    }
    return out;
}

namespace {

struct ActionHash {
    std::size_t operator()(const std::vector<int>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(x + 1024)) * 1099511628211ull;
        return h;
    }
};

} // namespace

std::vector<WeylElement> group_elements(const RootSystem& rs, std::size_t cap)
{
    std::vector<WeylElement> gens;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs.parity(i) == Parity::even)
            gens.push_back(reflection(rs, i));

    WeylElement id;
    id.action.resize(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        id.action[i] = static_cast<int>(i) + 1;

    std::vector<WeylElement> out{id};
    std::unordered_map<std::vector<int>, std::size_t, ActionHash> seen{{id.action, 0}};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const auto& g : gens) {
            WeylElement next = then(out[head], g);
            if (seen.count(next.action))
                continue;
            if (out.size() >= cap)
                throw CapacityError("even Weyl group of " + rs.name() + " exceeds the cap of " +
                                    std::to_string(cap) + " elements");
            seen.emplace(next.action, out.size());
            out.push_back(std::move(next));
        }
    return out;
}

RootMask apply_to_mask(const WeylElement& sigma, const RootMask& m, std::size_t n)
{
    RootMask out;
    for (std::size_t i = 0; i < n; ++i)
        if (m.test(i))
            out.set(sigma.image_index(i));
    return out;
}

const char* to_string(PairMode m) { return m == PairMode::unordered ? "unordered" : "ordered"; }

std::array<std::string, 4> SplintSignature::key() const
{
    std::array<std::string, 4> k;
    for (std::size_t s = 0; s < 4; ++s) {
        k[s].resize(n);
        for (std::size_t i = 0; i < n; ++i)
            k[s][i] = sets[s].test(i) ? '0' : '1';  // members first sort lower
    }
    return k;
}

std::string SplintSignature::bytes() const
{
    std::string out;
    const std::size_t nbytes = (n + 7) / 8;
    for (const auto& s : sets)
        for (std::size_t b = 0; b < nbytes; ++b) {
            unsigned char byte = 0;
            for (std::size_t bit = 0; bit < 8 && b * 8 + bit < n; ++bit)
                if (s.test(b * 8 + bit))
                    byte |= static_cast<unsigned char>(1u << bit);
            out.push_back(static_cast<char>(byte));
        }
    return out;
}

std::string SplintSignature::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes()) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

SplintSignature raw_signature(const RootSystem& rs, const RootMask& s1, const RootMask& s2, SignatureClauses clauses)
{
    const RootMask even = rs.roots_of_parity(Parity::even);
    SplintSignature sig;
    sig.n = rs.size();
    sig.sets[0] = s1 & even;
    sig.sets[1] = s2 & even;
    if (clauses == SignatureClauses::even_and_odd) {
        sig.sets[2] = s1 & ~even;
        sig.sets[3] = s2 & ~even;
    }
    return sig;
}

SplintSignature canonical_signature(const RootSystem& rs, const std::vector<WeylElement>& group,
                                    const RootMask& s1, const RootMask& s2, PairMode mode, SignatureClauses clauses)
{
    if ((s1 & s2).any())
        throw std::invalid_argument("canonical_signature: sides overlap");
    const std::size_t n = rs.size();
    SplintSignature best = raw_signature(rs, s1, s2, clauses);
    for (const auto& sigma : group) {
        const RootMask a = apply_to_mask(sigma, s1, n);
        const RootMask b = apply_to_mask(sigma, s2, n);
        SplintSignature cand = raw_signature(rs, a, b, clauses);
        if (cand < best)
            best = cand;
        if (mode == PairMode::unordered) {
            SplintSignature swapped = raw_signature(rs, b, a, clauses);
            if (swapped < best)
                best = swapped;
        }
    }
    return best;
}

SplintSignature canonical_signature(const RootSystem& rs, const RootMask& s1, const RootMask& s2, PairMode mode,
                                    std::size_t cap)
{
    return canonical_signature(rs, group_elements(rs, cap), s1, s2, mode);
}

} // namespace splintkit
