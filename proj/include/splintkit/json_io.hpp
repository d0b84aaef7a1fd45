#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "splintkit/embed.hpp"
#include "splintkit/rootsys.hpp"
#include "splintkit/splint.hpp"

namespace splintkit {

/// Malformed or inconsistent JSON document.
struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const Root& r);
/// {"family","m","n","roots":[...],"gram":[[{"c","a"}...]...]}; "m","n" are the
/// label parameters (A(2,1) has m=2, n=1).
Json to_json(const RootSystem& rs);

Weight weight_from_json(const Json& j);
/// Rebuilds the family from (family, m, n) and checks that the listed roots and Gram
/// matrix agree with it exactly.
RootSystem root_system_from_json(const Json& j);

/// A system reference: the spec string ("B(1,2)"), or the full object when the
/// spec cannot express the system (A(m,n) with the flipped delta block).
Json system_ref(const RootSystem& rs);
std::shared_ptr<const RootSystem> system_from_ref(const Json& j);

/// Index of a root given in JSON form; the parity must agree when present.
std::size_t root_index_from_json(const RootSystem& rs, const Json& j);

Json to_json(const EmbeddingMap& map);
EmbeddingMap embedding_from_json(const Json& j);

Json to_json(const SplintReport& rep);
/// Parses {"target","part1","type1","part2","type2"[,"verdict","signature"]}; the
/// verdict and signature are taken as given (not recomputed).
SplintReport splint_from_json(const Json& j);

SplintSignature signature_from_hex(const std::string& hex, std::size_t n);

Verdict verdict_from_string(const std::string& s);

Json read_json_file(const std::string& path);

} // namespace splintkit
