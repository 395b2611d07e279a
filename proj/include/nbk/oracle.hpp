#pragma once

#include <cstdint>

#include "nbk/graph.hpp"

namespace nbk {

struct DomSetInstance;

// Exact domination number for small graphs. Ground truth for the tests.

inline constexpr std::size_t kOracleVertexCap = 26;

struct OracleResult {
    std::size_t gamma = 0;
    VertexSet witness;
};

/// Branch and bound: greedy upper bound, branch on the undominated vertex with
/// the fewest dominators. Throws PreconditionError above `cap` vertices.
OracleResult min_dominating_set(const Graph& g, std::size_t cap = kOracleVertexCap);

/// Subset enumeration by increasing size. Independent cross-check for the
/// branch and bound; only meant for very small graphs.
OracleResult min_dominating_set_exhaustive(const Graph& g, std::size_t cap = 16);

/// True iff gamma(g) <= t. The empty graph is dominated by the empty set.
bool has_dominating_set_of_size(const Graph& g, std::int64_t t, std::size_t cap = kOracleVertexCap);

/// True iff both instances have the same yes/no answer.
bool check_rule_equivalence(const DomSetInstance& before, const DomSetInstance& after,
                            std::size_t cap = kOracleVertexCap);

}  // namespace nbk
