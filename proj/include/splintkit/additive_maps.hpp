#pragma once

#include <array>
#include <functional>
#include <vector>

#include "splintkit/rootsys.hpp"

namespace splintkit {

/// Backtracking search for injective, parity-preserving maps from the positive roots of
/// `domain` into the `allowed` roots of `codomain` that mirror every domain addition
/// triple. Domain roots are visited so that a root which is a sum of two already-placed
/// roots is placed next with its image forced; the remaining roots branch over the
/// unused allowed codomain roots of matching parity.
class AdditiveMapSearch {
public:
    struct Options {
        /// Also reject maps whose image contains a sum f(a)+f(b)=f(c) that has no
        /// matching domain triple.
        bool strict = false;
    };

    /// Receives assignment[i] = codomain index of domain root i. Return false to stop.
    using Visitor = std::function<bool(const std::vector<int>&)>;

    AdditiveMapSearch(const RootSystem& domain, const RootSystem& codomain, Options opts);
    AdditiveMapSearch(const RootSystem& domain, const RootSystem& codomain)
        : AdditiveMapSearch(domain, codomain, Options{}) {}

    /// Runs the search; returns false iff the visitor stopped it.
    bool run(const RootMask& allowed, const Visitor& visit) const;

    /// Domain roots in visiting order, and for each whether its image is forced.
    const std::vector<int>& order() const { return order_; }

private:
    struct Step {
        int root = 0;
        int forced_a = -1;  // image = sum of images of these two, when >= 0
        int forced_b = -1;
        std::vector<std::array<int, 3>> checks;  // triples completed at this step
    };

    bool descend(std::size_t step, std::vector<int>& img, RootMask& used, const RootMask& allowed,
                 const Visitor& visit) const;
    bool strict_ok(const std::vector<int>& img) const;

    const RootSystem& dom_;
    const RootSystem& cod_;
    Options opts_;
    std::vector<int> order_;
    std::vector<Step> steps_;
    std::vector<std::array<int, 3>> triples_;
};

} // namespace splintkit
