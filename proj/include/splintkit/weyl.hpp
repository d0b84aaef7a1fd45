#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splintkit/rootsys.hpp"

namespace splintkit {

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// Element of the even Weyl group: a word of reflections in even positive roots
/// (applied left to right) together with its signed action on the positive roots.
struct WeylElement {
    std::vector<int> word;
    /// image of positive root i is sign * root(index), stored as +-(index + 1)
    std::vector<int> action;

    std::size_t image_index(std::size_t i) const { return static_cast<std::size_t>(std::abs(action[i])) - 1; }
    bool flips_sign(std::size_t i) const { return action[i] < 0; }

    Weight apply(const RootSystem& rs, const Weight& x) const;
};

/// s_beta(x) = x - 2(x,beta)/(beta,beta) beta for an even positive root beta.
/// Throws std::invalid_argument when beta is odd or isotropic.
Weight reflect(const RootSystem& rs, std::size_t beta, const Weight& x);

/// The reflection in root `beta` as a group element.
WeylElement reflection(const RootSystem& rs, std::size_t beta);

/// Closure of the reflections in all even positive roots, identity first, in
/// breadth-first order. Throws CapacityError when the order exceeds `cap`.
std::vector<WeylElement> group_elements(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

/// Compose: apply a, then b.
WeylElement then(const WeylElement& a, const WeylElement& b);

/// Image of a set of positive roots under sigma, taken up to sign.
RootMask apply_to_mask(const WeylElement& sigma, const RootMask& m, std::size_t n);

enum class PairMode { unordered, ordered };
/// Which restriction clauses enter the equivalence test.
enum class SignatureClauses { even_and_odd, even_only };

const char* to_string(PairMode m);

/// ((S1 u -S1)|even, (S2 u -S2)|even, (S1 u -S1)|odd, (S2 u -S2)|odd) with each
/// signed set stored by its positive representatives.
struct SplintSignature {
    std::array<RootMask, 4> sets;
    std::size_t n = 0;

    std::string bytes() const;
    std::string hex() const;
    friend bool operator==(const SplintSignature& a, const SplintSignature& b) { return a.key() == b.key(); }
    friend bool operator<(const SplintSignature& a, const SplintSignature& b) { return a.key() < b.key(); }

private:
    std::array<std::string, 4> key() const;
};

SplintSignature raw_signature(const RootSystem& rs, const RootMask& s1, const RootMask& s2,
                              SignatureClauses clauses = SignatureClauses::even_and_odd);

/// Lexicographically minimal signature over sigma in the group (and the side swap in
/// unordered mode). Two splints are equivalent iff these coincide.
SplintSignature canonical_signature(const RootSystem& rs, const std::vector<WeylElement>& group,
                                    const RootMask& s1, const RootMask& s2, PairMode mode = PairMode::unordered,
                                    SignatureClauses clauses = SignatureClauses::even_and_odd);

/// Convenience overload generating the group.
SplintSignature canonical_signature(const RootSystem& rs, const RootMask& s1, const RootMask& s2,
                                    PairMode mode = PairMode::unordered, std::size_t cap = kDefaultWeylCap);

} // namespace splintkit
