#include "splintkit/json_io.hpp"

#include <fstream>

namespace splintkit {

namespace {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j)
{
    if (!j.is_string())
        throw JsonError("expected a rational string, got " + j.dump());
    auto r = parse_rational(j.get<std::string>());
    if (!r)
        throw JsonError("malformed rational " + j.dump());
    return *r;
}

std::vector<Rational> rationals_from(const Json& j)
{
    if (!j.is_array())
        throw JsonError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& x : j)
        out.push_back(rational_from(x));
    return out;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw JsonError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_string())
        throw JsonError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Json mask_json(const RootSystem& rs, const RootMask& m)
{
    Json out = Json::array();
    for (std::size_t i : mask_indices(m, rs.size()))
        out.push_back(to_json(rs.root(i)));
    return out;
}

RootMask mask_from(const RootSystem& rs, const Json& j, const char* what)
{
    if (!j.is_array())
        throw JsonError(std::string(what) + " must be an array of roots");
    RootMask m;
    for (const auto& r : j) {
        const std::size_t k = root_index_from_json(rs, r);
        if (m.test(k))
            throw JsonError(std::string(what) + " lists " + to_string(rs.root(k).weight) + " twice");
        m.set(k);
    }
    return m;
}

} // namespace

Json to_json(const Weight& w)
{
    Json eps = Json::array(), delta = Json::array();
    for (const auto& x : w.eps)
        eps.push_back(rational_json(x));
    for (const auto& x : w.delta)
        delta.push_back(rational_json(x));
    return Json{{"eps", eps}, {"delta", delta}};
}

Json to_json(const Root& r)
{
    Json j = to_json(r.weight);
    j["parity"] = to_string(r.parity);
    return j;
}

Json to_json(const RootSystem& rs)
{
    Json j;
    j["family"] = family_token(rs.family());
    j["m"] = rs.p();
    j["n"] = rs.q();
    if (rs.delta_sign_flipped())
        j["flip_delta"] = true;
    Json roots = Json::array();
    for (const Root& r : rs.roots())
        roots.push_back(to_json(r));
    j["roots"] = roots;
    Json gram = Json::array();
    for (std::size_t a = 0; a < rs.dim(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < rs.dim(); ++b) {
            const FormValue& v = rs.form().at(a, b);
            row.push_back(Json{{"c", rational_json(v.const_part)}, {"a", rational_json(v.alpha_part)}});
        }
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j;
}

Weight weight_from_json(const Json& j)
{
    return Weight(rationals_from(field(j, "eps")), rationals_from(field(j, "delta")));
}

RootSystem root_system_from_json(const Json& j)
{
    const std::string token = string_field(j, "family");
    const auto family = family_from_token(token);
    if (!family)
        throw JsonError("unknown family \"" + token + "\"");
    const Json& m = field(j, "m");
    const Json& n = field(j, "n");
    if (!m.is_number_integer() || !n.is_number_integer())
        throw JsonError("\"m\" and \"n\" must be integers");
    const bool flip = j.contains("flip_delta") && j.at("flip_delta").get<bool>();
    RootSystem rs = [&] {
        try {
            return build(*family, m.get<int>(), n.get<int>(), flip);
        } catch (const std::exception& e) {
            throw JsonError(e.what());
        }
    }();

    if (j.contains("roots")) {
        const Json& roots = j.at("roots");
        if (!roots.is_array() || roots.size() != rs.size())
            throw JsonError(rs.name() + ": expected " + std::to_string(rs.size()) + " roots");
        RootMask seen;
        for (const auto& r : roots) {
            const std::size_t k = root_index_from_json(rs, r);
            if (seen.test(k))
                throw JsonError(rs.name() + ": duplicate root " + to_string(rs.root(k).weight));
            seen.set(k);
        }
    }
    if (j.contains("gram")) {
        const Json& gram = j.at("gram");
        if (!gram.is_array() || gram.size() != rs.dim())
            throw JsonError(rs.name() + ": Gram matrix has the wrong size");
        for (std::size_t a = 0; a < rs.dim(); ++a) {
            if (!gram[a].is_array() || gram[a].size() != rs.dim())
                throw JsonError(rs.name() + ": Gram matrix has the wrong size");
            for (std::size_t b = 0; b < rs.dim(); ++b) {
                const FormValue v{rational_from(field(gram[a][b], "c")), rational_from(field(gram[a][b], "a"))};
                if (!(v == rs.form().at(a, b)))
                    throw JsonError(rs.name() + ": Gram entry (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") disagrees with the family's form");
            }
        }
    }
    return rs;
}

Json system_ref(const RootSystem& rs)
{
    if (rs.delta_sign_flipped())
        return to_json(rs);
    return rs.name();
}

std::shared_ptr<const RootSystem> system_from_ref(const Json& j)
{
    if (j.is_string()) {
        try {
            return std::make_shared<const RootSystem>(build_from_spec(j.get<std::string>()));
        } catch (const std::exception& e) {
            throw JsonError(e.what());
        }
    }
    return std::make_shared<const RootSystem>(root_system_from_json(j));
}

std::size_t root_index_from_json(const RootSystem& rs, const Json& j)
{
    Weight w;
    try {
        w = weight_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(e.what());
    }
    auto k = rs.index_of(w);
    if (!k)
        throw JsonError(to_string(w) + " is not a positive root of " + rs.name());
    if (j.contains("parity") && j.at("parity") != to_string(rs.parity(*k)))
        throw JsonError(to_string(w) + " has parity " + to_string(rs.parity(*k)) + " in " + rs.name());
    return *k;
}

Json to_json(const EmbeddingMap& map)
{
    Json pairs = Json::array();
    for (std::size_t i = 0; i < map.assignment.size(); ++i)
        pairs.push_back(Json::array({to_json(map.domain->root(i)),
                                     to_json(map.codomain->root(static_cast<std::size_t>(map.assignment[i])))}));
    return Json{{"domain", system_ref(*map.domain)}, {"codomain", system_ref(*map.codomain)}, {"pairs", pairs}};
}

EmbeddingMap embedding_from_json(const Json& j)
{
    EmbeddingMap map;
    map.domain = system_from_ref(field(j, "domain"));
    map.codomain = system_from_ref(field(j, "codomain"));
    const Json& pairs = field(j, "pairs");
    if (!pairs.is_array() || pairs.size() != map.domain->size())
        throw JsonError("\"pairs\" must assign each of the " + std::to_string(map.domain->size()) +
                        " domain roots once");
    map.assignment.assign(map.domain->size(), -1);
    for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2)
            throw JsonError("each pair must be [root, root]");
        const std::size_t a = root_index_from_json(*map.domain, p[0]);
        const std::size_t b = root_index_from_json(*map.codomain, p[1]);
        if (map.assignment[a] != -1)
            throw JsonError("domain root " + to_string(map.domain->root(a).weight) + " assigned twice");
        map.assignment[a] = static_cast<int>(b);
    }
    return map;
}

Json to_json(const SplintReport& rep)
{
    const Splint& sp = rep.splint;
    const RootSystem& rs = *sp.target;
    Json j;
    j["target"] = system_ref(rs);
    j["part1"] = mask_json(rs, sp.part1);
    j["type1"] = to_string(sp.type1);
    j["part2"] = mask_json(rs, sp.part2);
    j["type2"] = to_string(sp.type2);
    j["verdict"] = to_string(rep.verdict);
    j["signature"] = rep.signature ? Json(rep.signature->hex()) : Json(nullptr);
    return j;
}

SplintReport splint_from_json(const Json& j)
{
    SplintReport rep;
    Splint& sp = rep.splint;
    sp.target = system_from_ref(field(j, "target"));
    sp.part1 = mask_from(*sp.target, field(j, "part1"), "part1");
    sp.part2 = mask_from(*sp.target, field(j, "part2"), "part2");
    try {
        sp.type1 = parse_multiset(string_field(j, "type1"));
        sp.type2 = parse_multiset(string_field(j, "type2"));
    } catch (const JsonError&) {
        throw;
    } catch (const std::exception& e) {
        throw JsonError(e.what());
    }
    if (j.contains("verdict") && j.at("verdict").is_string())
        rep.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (j.contains("signature") && j.at("signature").is_string())
        rep.signature = signature_from_hex(j.at("signature").get<std::string>(), sp.target->size());
    return rep;
}

SplintSignature signature_from_hex(const std::string& hex, std::size_t n)
{
    const std::size_t nbytes = (n + 7) / 8;
    if (hex.size() != 4 * nbytes * 2)
        throw JsonError("signature has " + std::to_string(hex.size()) + " hex digits, expected " +
                        std::to_string(8 * nbytes));
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9')
            return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f')
            return static_cast<unsigned>(c - 'a' + 10);
        throw JsonError(std::string("bad hex digit '") + c + "'");
    };
    SplintSignature sig;
    sig.n = n;
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t b = 0; b < nbytes; ++b) {
            const std::size_t at = 2 * (s * nbytes + b);
            const unsigned byte = nibble(hex[at]) << 4 | nibble(hex[at + 1]);
            for (std::size_t bit = 0; bit < 8; ++bit) {
                if (!((byte >> bit) & 1u))
                    continue;
                if (b * 8 + bit >= n)
                    throw JsonError("signature sets a bit beyond the root count");
                sig.sets[s].set(b * 8 + bit);
            }
        }
    return sig;
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "valid")
        return {};
    for (auto kind : {Verdict::Kind::invalid, Verdict::Kind::paper_discrepancy}) {
        const std::string prefix = std::string(to_string(kind)) + ": ";
        if (s.rfind(prefix, 0) == 0)
            return {kind, s.substr(prefix.size())};
    }
    throw JsonError("unknown verdict \"" + s + "\"");
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw JsonError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError(path + ": " + e.what());
    }
}

} // namespace splintkit
