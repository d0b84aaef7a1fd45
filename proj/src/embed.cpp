#include "splintkit/embed.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "splintkit/additive_maps.hpp"

namespace splintkit {

bool is_embedding(const EmbeddingMap& map)
{
    const RootSystem& dom = *map.domain;
    const RootSystem& cod = *map.codomain;
    if (map.assignment.size() != dom.size())
        throw std::invalid_argument("embedding assignment has " + std::to_string(map.assignment.size()) +
                                    " entries but " + dom.name() + " has " + std::to_string(dom.size()) +
                                    " positive roots");
    std::set<int> seen;
    for (int c : map.assignment) {
        if (c < 0 || static_cast<std::size_t>(c) >= cod.size())
            throw std::invalid_argument("embedding assignment refers to a root outside " + cod.name());
        if (!seen.insert(c).second)
            return false;
    }
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom.parity(i) != cod.parity(map.assignment[i]))
            return false;
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i; j < dom.size(); ++j) {
            auto k = dom.index_of(dom.root(i).weight + dom.root(j).weight);
            if (!k)
                continue;
            const Weight image_sum = cod.root(map.assignment[i]).weight + cod.root(map.assignment[j]).weight;
            if (!(image_sum == cod.root(map.assignment[*k]).weight))
                return false;
        }
    return true;
}

std::vector<EmbeddingMap> find_embeddings(std::shared_ptr<const RootSystem> dom,
                                          std::shared_ptr<const RootSystem> cod, EmbedOptions opts)
{
    std::vector<EmbeddingMap> out;
    AdditiveMapSearch search(*dom, *cod, {opts.strict});
    search.run(cod->all_roots(), [&](const std::vector<int>& img) {
        EmbeddingMap m{dom, cod, img};
        if (opts.metric_only && metric_verdict(m).kind != MetricVerdict::Kind::metric)
            return true;
        out.push_back(std::move(m));
        return opts.max_count == 0 || out.size() < opts.max_count;
    });
    return out;
}

const char* to_string(MetricVerdict::Kind k)
{
    switch (k) {
    case MetricVerdict::Kind::metric: return "metric";
    case MetricVerdict::Kind::non_metric: return "non_metric";
    case MetricVerdict::Kind::parametric: return "parametric";
    }
    return "?";
}

namespace {

struct PairEquation {
    FormValue dom;
    FormValue cod;
};

/// Single constant lambda with dom = lambda * cod on every equation, if one exists.
/// `free` is set when no equation constrains lambda.
std::optional<Rational> common_lambda(const std::vector<std::pair<Rational, Rational>>& eqs, bool& free)
{
    std::optional<Rational> lambda;
    free = true;
    for (const auto& [d, c] : eqs) {
        if (c == 0) {
            if (d != 0)
                return std::nullopt;
            continue;
        }
        free = false;
        Rational l = d / c;
        if (lambda && *lambda != l)
            return std::nullopt;
        lambda = l;
    }
    return free ? std::optional<Rational>(Rational(1)) : lambda;
}

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (x < 0)
        return std::nullopt;
    auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
        auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
        for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
            if (c * c == v)
                return c;
        return std::nullopt;
    };
    auto n = isqrt(x.numerator());
    auto d = isqrt(x.denominator());
    if (!n || !d)
        return std::nullopt;
    return Rational(*n, *d);
}

/// Rational roots of a2 x^2 + a1 x + a0 (empty when identically zero).
std::vector<Rational> rational_roots(const Rational& a2, const Rational& a1, const Rational& a0)
{
    if (a2 == 0) {
        if (a1 == 0)
            return {};
        return {-a0 / a1};
    }
    auto s = rational_sqrt(a1 * a1 - 4 * a2 * a0);
    if (!s)
        return {};
    return {(-a1 - *s) / (2 * a2), (-a1 + *s) / (2 * a2)};
}

} // namespace

MetricVerdict metric_verdict(const EmbeddingMap& map)
{
    if (!is_embedding(map))
        throw std::invalid_argument("metric_verdict: the map is not an embedding");
    const RootSystem& dom = *map.domain;
    const RootSystem& cod = *map.codomain;
    std::vector<PairEquation> eqs;
    bool any_alpha = false;
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i; j < dom.size(); ++j) {
            PairEquation e{dom.form().pair(dom.root(i).weight, dom.root(j).weight),
                           cod.form().pair(cod.root(map.assignment[i]).weight, cod.root(map.assignment[j]).weight)};
            any_alpha = any_alpha || e.dom.depends_on_alpha() || e.cod.depends_on_alpha();
            eqs.push_back(e);
        }

    MetricVerdict out;
    auto classify = [&](const Rational& lambda) {
        if (is_integer(lambda) && lambda != 0) {
            out.kind = MetricVerdict::Kind::metric;
            out.lambda = lambda;
        } else {
            out.kind = MetricVerdict::Kind::non_metric;
            out.best_lambda = lambda;
        }
    };

    // identity in alpha: every equation proportional with one alpha-free ratio
    {
        std::optional<Rational> lambda;
        bool ok = true;
        for (const auto& e : eqs) {
            if (e.cod.is_zero()) {
                if (!e.dom.is_zero())
                    ok = false;
                continue;
            }
            auto r = exact_ratio(e.dom, e.cod);
            if (!r || (lambda && *lambda != *r)) {
                ok = false;
                break;
            }
            lambda = r;
        }
        if (ok) {
            classify(lambda.value_or(Rational(1)));
            return out;
        }
    }
    out.kind = MetricVerdict::Kind::non_metric;
    if (!any_alpha)
        return out;

    // specific alpha values
    std::set<Rational> candidates;
    for (std::size_t a = 0; a < eqs.size(); ++a) {
        const auto& ea = eqs[a];
        if (ea.cod.is_zero()) {
            for (auto r : rational_roots(0, ea.dom.alpha_part, ea.dom.const_part))
                candidates.insert(r);
            continue;
        }
        for (std::size_t b = a + 1; b < eqs.size(); ++b) {
            const auto& eb = eqs[b];
            // ea.dom * eb.cod - eb.dom * ea.cod = 0
            const Rational a2 = ea.dom.alpha_part * eb.cod.alpha_part - eb.dom.alpha_part * ea.cod.alpha_part;
            const Rational a1 = ea.dom.const_part * eb.cod.alpha_part + ea.dom.alpha_part * eb.cod.const_part -
                                eb.dom.const_part * ea.cod.alpha_part - eb.dom.alpha_part * ea.cod.const_part;
            const Rational a0 = ea.dom.const_part * eb.cod.const_part - eb.dom.const_part * ea.cod.const_part;
            for (auto r : rational_roots(a2, a1, a0))
                candidates.insert(r);
        }
    }
    for (const Rational& alpha : candidates) {
        if (alpha == 0 || alpha == -1)
            continue;  // D(2,1;alpha) degenerates there
        std::vector<std::pair<Rational, Rational>> numeric;
        for (const auto& e : eqs)
            numeric.emplace_back(e.dom.evaluate(alpha), e.cod.evaluate(alpha));
        bool free = false;
        auto lambda = common_lambda(numeric, free);
        if (lambda && is_integer(*lambda) && *lambda != 0) {
            if (out.alpha_values.empty())
                out.lambda = *lambda;
            out.alpha_values.push_back(alpha);
        }
    }
    if (!out.alpha_values.empty())
        out.kind = MetricVerdict::Kind::parametric;
    return out;
}

EmbeddingMap compose(const EmbeddingMap& f, const EmbeddingMap& g)
{
    if (f.codomain->name() != g.domain->name())
        throw std::invalid_argument("compose: codomain of the first map is not the domain of the second");
    EmbeddingMap out{f.domain, g.codomain, {}};
    for (int c : f.assignment)
        out.assignment.push_back(g.assignment.at(c));
    return out;
}

} // namespace splintkit
