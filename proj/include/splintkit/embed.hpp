#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "splintkit/rootsys.hpp"

namespace splintkit {

/// Root-to-root assignment between two positive systems.
struct EmbeddingMap {
    std::shared_ptr<const RootSystem> domain;
    std::shared_ptr<const RootSystem> codomain;
    std::vector<int> assignment;  // domain root index -> codomain root index

    friend bool operator==(const EmbeddingMap& a, const EmbeddingMap& b)
    {
        return a.domain->name() == b.domain->name() && a.codomain->name() == b.codomain->name() &&
               a.assignment == b.assignment;
    }
};

/// Injective, parity-preserving and additive on every domain triple. Checked with
/// weight arithmetic, independently of the codomain's addition table.
/// Throws std::invalid_argument when the assignment does not fit the two systems.
bool is_embedding(const EmbeddingMap& map);

struct EmbedOptions {
    std::size_t max_count = 0;  // 0 = unlimited
    bool metric_only = false;
    bool strict = false;
};

/// All embeddings in search order (deterministic); empty certifies non-embeddability.
std::vector<EmbeddingMap> find_embeddings(std::shared_ptr<const RootSystem> dom,
                                          std::shared_ptr<const RootSystem> cod, EmbedOptions opts = {});

struct MetricVerdict {
    enum class Kind { metric, non_metric, parametric };
    Kind kind = Kind::non_metric;
    Rational lambda{0};                 // metric: the scalar; parametric: scalar at alpha_values
    std::optional<Rational> best_lambda;  // non_metric diagnostic when a single rational works
    std::vector<Rational> alpha_values;   // parametric: alpha values where metric holds
};

const char* to_string(MetricVerdict::Kind k);

/// Decides whether (a,b)_dom = lambda (f a, f b)_cod for one nonzero integer lambda on
/// all domain pairs (as polynomials in alpha when a form depends on it).
/// Throws std::invalid_argument if the map is not an embedding.
MetricVerdict metric_verdict(const EmbeddingMap& map);

/// Composite assignment g . f.
EmbeddingMap compose(const EmbeddingMap& f, const EmbeddingMap& g);

} // namespace splintkit
