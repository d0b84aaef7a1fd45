#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splintkit/catalog.hpp"
#include "splintkit/rootsys.hpp"
#include "splintkit/weyl.hpp"

namespace splintkit {

/// Two-part partition of the positive roots with a typing of each part.
struct Splint {
    std::shared_ptr<const RootSystem> target;
    RootMask part1;
    RootMask part2;
    ComponentMultiset type1;
    ComponentMultiset type2;
    std::vector<MatchedComponent> components1;
    std::vector<MatchedComponent> components2;
    /// (effective rank of type1, effective rank of type2, rank of target)
    std::array<int, 3> rank_certificate{0, 0, 0};
};

struct Verdict {
    enum class Kind { valid, invalid, paper_discrepancy };
    Kind kind = Kind::valid;
    std::string detail;

    bool ok() const { return kind == Kind::valid; }
};

const char* to_string(Verdict::Kind k);
/// "valid", "invalid: <reason>", "paper_discrepancy: <details>"
std::string to_string(const Verdict& v);

struct SplintReport {
    Splint splint;
    Verdict verdict;
    std::optional<SplintSignature> signature;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    RankRule rank_rule = RankRule::zero_a00;
    PairMode pair_mode = PairMode::unordered;
    bool strict = false;
    std::size_t weyl_cap = kDefaultWeylCap;
    /// Skip the canonical signature (for very large Weyl groups).
    bool compute_signature = true;
};

/// Checks, in order: disjoint cover of the positive roots, component matches of each
/// side against its claimed type, rank rule. The first failure decides the verdict.
/// Throws std::invalid_argument when a part refers to a root outside the target.
SplintReport verify(std::shared_ptr<const RootSystem> target, const RootMask& part1, const ComponentMultiset& type1,
                    const RootMask& part2, const ComponentMultiset& type2, const VerifyOptions& opts = {});

/// Same, with parts given as weights (each must be a positive root of the target).
SplintReport verify(std::shared_ptr<const RootSystem> target, const std::vector<Weight>& part1,
                    const ComponentMultiset& type1, const std::vector<Weight>& part2, const ComponentMultiset& type2,
                    const VerifyOptions& opts = {});

/// A partition of the positive roots realizing (type1, type2), if any exists. The search
/// is exhaustive, so nullopt certifies that no such partition exists.
std::optional<std::pair<RootMask, RootMask>> find_typed_splint(const RootSystem& target,
                                                               const ComponentMultiset& type1,
                                                               const ComponentMultiset& type2,
                                                               const MatchOptions& opts = {});

enum class Dedup { weyl, none };

struct EnumerateOptions {
    RankRule rank_rule = RankRule::zero_a00;
    PairMode pair_mode = PairMode::unordered;
    Dedup dedup = Dedup::weyl;
    bool strict = false;
    std::size_t max_roots = 24;
    std::size_t weyl_cap = kDefaultWeylCap;
    unsigned jobs = 1;
};

/// Every splint of the target up to even-Weyl equivalence (or every valid coloring with
/// Dedup::none), each typed by the minimum-rank decomposition of its sides. Ordered by
/// canonical signature (then by coloring). Throws CapacityError above the caps.
std::vector<SplintReport> enumerate(std::shared_ptr<const RootSystem> target, const EnumerateOptions& opts = {});

} // namespace splintkit
