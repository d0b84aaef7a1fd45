#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splintkit/rootsys.hpp"

namespace splintkit {

enum class LabelKind {
    A_n, B_n, C_n, D_n, G_2, D_2,     // even-only
    A_super, B_super, C_super, D_super // A(r,s), B(r,s), C(n), D(r,s)
};

/// Component type appearing in splint tables, e.g. A_1, D_2, A(0,0), B(0,1), C(3).
struct ComponentLabel {
    LabelKind kind = LabelKind::A_n;
    int p = 0;
    int q = 0;

    static ComponentLabel a00() { return {LabelKind::A_super, 0, 0}; }
    static ComponentLabel a1() { return {LabelKind::A_n, 1, 0}; }

    bool is_a00() const { return kind == LabelKind::A_super && p == 0 && q == 0; }
    bool is_even_only() const;
    friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

/// How A(0,0) contributes to the rank of a splint side.
enum class RankRule { zero_a00, unit, off };

const char* to_string(RankRule r);
std::optional<RankRule> rank_rule_from_string(const std::string& s);

std::string to_string(const ComponentLabel& l);
/// Parses a single label ("A_1", "A(0,0)", "C(3)", "D_2"); throws std::invalid_argument.
ComponentLabel parse_label(const std::string& text);
/// Throws std::invalid_argument when the parameters are outside the label's domain.
void validate(const ComponentLabel& l);

/// Rank contribution of one copy. Mode `off` uses the zero-a00 values.
int effective_rank(const ComponentLabel& l, RankRule rule = RankRule::zero_a00);

/// Multiset of labels with multiplicities; kept in canonical order (superalgebra
/// components, then even-only components, then A(0,0)).
class ComponentMultiset {
public:
    ComponentMultiset() = default;
    explicit ComponentMultiset(const std::vector<ComponentLabel>& labels);

    void add(const ComponentLabel& l, int multiplicity = 1);
    const std::vector<std::pair<ComponentLabel, int>>& entries() const { return entries_; }
    std::vector<ComponentLabel> expanded() const;
    int total_rank(RankRule rule = RankRule::zero_a00) const;
    int component_count() const;
    bool empty() const { return entries_.empty(); }
    friend bool operator==(const ComponentMultiset&, const ComponentMultiset&) = default;

private:
    std::vector<std::pair<ComponentLabel, int>> entries_;
};

/// "2A_1+4A(0,0)" etc.
std::string to_string(const ComponentMultiset& m);
/// Parses "2A_1+4A(0,0)", "A_1+B_3", "D_2+D_2+2A(0,0)"; throws std::invalid_argument.
ComponentMultiset parse_multiset(const std::string& text);

/// Abstract positive root system realizing a label (cached; safe to call concurrently).
const RootSystem& abstract_system(const ComponentLabel& label);

/// Addition triples realized inside a root set.
struct AdditionStructure {
    std::vector<std::size_t> elements;            // ambient indices
    std::vector<std::array<std::size_t, 3>> triples;  // positions into elements, i <= j
    std::vector<Parity> parities;
};

AdditionStructure addition_structure(const RootSystem& ambient, const RootMask& roots);

struct MatchOptions {
    bool strict = false;
    /// Search nodes allowed per typed match before giving up with CapacityError.
    std::uint64_t node_limit = 50'000'000;
};

/// One component of a decomposition: the label and its bijection
/// (abstract root index -> ambient root index).
struct MatchedComponent {
    ComponentLabel label;
    std::vector<int> bijection;
    RootMask image;
};

/// Bijection from the abstract positive roots of `label` onto S preserving parity and
/// mirroring every abstract addition triple. Throws std::invalid_argument when the sizes
/// differ.
std::optional<std::vector<int>> match_component(const RootSystem& ambient, const RootMask& S,
                                                const ComponentLabel& label, const MatchOptions& opts = {});

/// Partition of S into components realizing exactly the multiset `type`.
std::optional<std::vector<MatchedComponent>> match_typed(const RootSystem& ambient, const RootMask& S,
                                                         const ComponentMultiset& type,
                                                         const MatchOptions& opts = {});

struct Decomposition {
    ComponentMultiset type;
    std::vector<MatchedComponent> components;
    int rank = 0;
};

struct DecomposeOptions {
    RankRule rank_rule = RankRule::zero_a00;
    bool strict = false;
};

/// Minimum-rank decompositions of subsets of a fixed universe of roots. Component images
/// inside the universe are enumerated once; results per subset are memoized.
/// Tie-break among minimum-rank decompositions: fewer components, then the
/// lexicographically smallest sorted list of label strings. D_2 is not used (2A_1
/// is reported instead).
class Decomposer {
public:
    Decomposer(const RootSystem& ambient, const RootMask& universe, DecomposeOptions opts = {});

    /// min_rank of a set with no decomposition (possible in strict mode only).
    static constexpr int kNoDecomposition = 1 << 20;

    /// Minimum decomposition of S (a subset of the universe); nullopt when its rank
    /// exceeds `rank_budget` (ignored when the rank rule is `off`).
    std::optional<Decomposition> decompose(const RootMask& S, int rank_budget);
    /// Minimum rank only.
    int min_rank(const RootMask& S);

    std::size_t occurrence_count() const { return occurrences_.size(); }

private:
    struct Occurrence {
        ComponentLabel label;
        RootMask image;
        std::vector<int> bijection;
        int rank;
        std::string name;
    };
    struct Best {
        int rank = 0;
        int count = 0;
        std::vector<std::string> labels;  // sorted
        int choice = -1;  // occurrence index, -2 = singleton
    };

    const Best& solve(const RootMask& S);

    const RootSystem& ambient_;
    RootMask universe_;
    DecomposeOptions opts_;
    std::vector<Occurrence> occurrences_;
    std::vector<std::vector<int>> by_root_;  // occurrence indices containing each root
    std::unordered_map<RootMask, Best> memo_;
};

/// One-shot decomposition of S.
std::optional<Decomposition> decompose(const RootSystem& ambient, const RootMask& S, int rank_budget,
                                       DecomposeOptions opts = {});

/// Labels considered when decomposing fresh sets with at most the given parity counts.
std::vector<ComponentLabel> candidate_labels(std::size_t max_even, std::size_t max_odd);

} // namespace splintkit
