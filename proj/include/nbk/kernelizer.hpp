#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbk/graph.hpp"

namespace nbk {

/// (G, k): is there a dominating set of size at most k?
struct DomSetInstance {
    Graph graph;
    std::int64_t k = 0;
};

/// (G, k_nb): is there a dominating set of size |V| - k_nb?
struct NonblockerInstance {
    Graph graph;
    std::int64_t k_nb = 0;
};

enum class Rule : std::uint8_t { R1 = 1, R2, R3, R4, R5, R6 };

std::string to_string(Rule r);

/// A matched reduction pattern.
///
/// Witness layout per rule:
///   R1  [v]                 isolated vertex
///   R2  [v, w]              isolated edge, v < w
///   R3  [v, l1, l2, ...]    v and all its 1-neighbors, ascending; l1 is kept
///   R4  [a, b, c, d]        deg(b) = deg(c) = 2, a != d
///   R4  [a, b, c]           same with a = d (closes_cycle = true)
///   R5  [a, b, c, d]        deg(a) = deg(d) = 1
///   R6  [a, b, c, d, e]     deg(a) = deg(e) = 1
struct RuleApplication {
    Rule rule = Rule::R1;
    std::vector<Vertex> witness;
    bool closes_cycle = false;

    bool operator==(const RuleApplication&) const = default;
};

struct TraceStep {
    RuleApplication app;
    std::optional<Vertex> minted;
};

/// The original instance plus every rule applied to it, in order.
struct ReductionTrace {
    DomSetInstance original;
    std::vector<TraceStep> steps;

    /// Number of applications that decreased k.
    std::size_t k_decreasing_steps() const;
    std::array<std::size_t, 6> rule_counts() const;
};

/// Detection order is R1, R2, R3, R5, R4, R6; within a rule the
/// lexicographically smallest witness wins.
std::optional<RuleApplication> find_rule_application(const Graph& g);

/// True iff `app` matches its rule's pattern in g.
bool matches(const Graph& g, const RuleApplication& app);

struct AppliedRule {
    DomSetInstance instance;
    std::optional<Vertex> minted;
};

/// Applies one rule. Throws PreconditionError when the witness does not match.
AppliedRule apply_rule(DomSetInstance inst, const RuleApplication& app);

/// Applies rules until none matches.
std::pair<DomSetInstance, ReductionTrace> reduce(DomSetInstance inst);

/// Re-applies the trace to its original instance.
DomSetInstance replay(const ReductionTrace& trace);

/// The structure left behind by exhaustive reduction: no isolated vertex,
/// 1-vertices pairwise at distance >= 5, 2-vertices pairwise non-adjacent.
/// Returns the first offending pair, or nothing when the graph complies.
std::optional<std::pair<Vertex, Vertex>> find_reduced_structure_violation(const Graph& g);

struct KernelOutcome {
    bool decided_yes = false;
    /// The fully reduced Nonblocker instance (the kernel when !decided_yes).
    NonblockerInstance reduced;
    ReductionTrace trace;
};

/// Reduces via k = |V| - k_nb and decides YES when 7 k_nb' <= 4 |V'|.
/// Throws PreconditionError when k_nb < 0 or k_nb > |V|.
KernelOutcome kernelize_nonblocker(const NonblockerInstance& inst);

/// Maps a dominating set of the reduced graph back to the original graph.
/// Throws PreconditionError when d_kernel does not dominate the reduced graph.
VertexSet lift_solution(const ReductionTrace& trace, const VertexSet& d_kernel);

}  // namespace nbk
