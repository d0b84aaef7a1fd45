#pragma once

// Brute-force reference implementations. Nothing here shares search code with the
// library: only root lists, weights, the form and reflect() are taken from it.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splintkit/catalog.hpp"
#include "splintkit/rootsys.hpp"
#include "splintkit/weyl.hpp"

namespace oracle {

using namespace splintkit;

/// Closed-form |positive roots| for label parameters (p,q); nullopt when inadmissible.
std::optional<std::size_t> root_count(Family f, int p, int q);

/// Positive roots written out directly from the coordinate displays (A, B, C, D).
std::vector<Root> displayed_roots(Family f, int p, int q);

/// Every injective parity-preserving map additive on all domain triples, tried
/// exhaustively (dom.size() choose from cod.size()).
std::set<std::vector<int>> embeddings(const RootSystem& dom, const RootSystem& cod);

/// Hand-written table of labels with at most 7 roots and their effective ranks.
const std::vector<std::pair<std::string, int>>& small_labels(RankRule rule);

struct SideAnalysis {
    int min_rank = -1;                  // -1 when no decomposition exists
    std::map<std::string, int> types;   // achievable typing -> its rank
};

/// All decompositions of S: every set partition, every label per block, every bijection.
SideAnalysis analyze_side(const RootSystem& rs, const RootMask& S, RankRule rule);

/// Images of all positive roots under each even Weyl group element, by closure of
/// reflections applied to weights.
std::vector<std::vector<Weight>> weyl_images(const RootSystem& rs);

struct Enumeration {
    std::set<std::uint64_t> valid;                 // colorings (bit i: root i on side 1)
    std::vector<std::set<std::uint64_t>> classes;  // orbits of valid colorings
    std::map<std::uint64_t, std::pair<SideAnalysis, SideAnalysis>> sides;
};

/// Every 2-coloring with both sides nonempty; unordered pairs keep root 0 on side 1.
Enumeration enumerate(const RootSystem& rs, PairMode mode, RankRule rule);

} // namespace oracle
