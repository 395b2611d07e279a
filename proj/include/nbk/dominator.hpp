#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nbk/graph.hpp"
#include "nbk/pathcover.hpp"

namespace nbk {

// Construction of a dominating set of size at most 3n/7 on reduced graphs.
//
// Paths are referred to by their index in the cover. Charges are kept in
// integer units of 1/7 throughout.

/// Marks, acceptors, rejected and forced vertices, and per-path flags.
struct AnnotationState {
    VertexSet marked;
    /// accepted vertex -> its acceptor
    std::map<Vertex, Vertex> acceptor_of;
    /// path index -> neighbors it accepted, in acceptance order
    std::map<std::size_t, std::vector<Vertex>> accepted_by_path;
    VertexSet rejected;
    VertexSet forced;
    /// forced vertex -> index of the weak path that forced it
    std::map<Vertex, std::size_t> forced_by;
    /// weak path index -> true when its acceptor sits at position 3 counted
    /// from the back of the stored vertex order
    std::map<std::size_t, bool> weak_reversed;
    std::vector<bool> dangerous;
    std::vector<bool> weak;
    std::vector<bool> dangling;

    VertexSet acceptors() const;
    bool accepted(Vertex v) const { return acceptor_of.count(v) != 0; }
    bool is_acceptor(Vertex v) const;
};

/// Per-vertex and per-path charge, in sevenths.
struct ChargeLedger {
    std::map<Vertex, std::int64_t> vertex_charge;
    std::vector<std::int64_t> path_charge;

    std::int64_t of(Vertex v) const;
    /// ch(P) + sum of ch(v) over v in P
    std::int64_t hat(const VdpCover& s, std::size_t path) const;
    /// Sum of hat() over all paths; zero by conservation.
    std::int64_t total(const VdpCover& s) const;
};

struct SafetyEntry {
    std::size_t path = 0;
    VertexSet d;
    std::int64_t seven_times_budget = 0;  // 3|P|
    std::int64_t seven_times_cost = 0;    // 7|D_P| + 7 ch^(P)
    bool dominated = false;               // P within N[D_P + A + F]
    bool contains_marked = false;         // P ∩ (A + F) within D_P
    bool safe = false;
};

/// Paths Q != P with a vertex adjacent to some vertex of P, ascending.
std::vector<std::size_t> neighboring_paths(const VdpCover& s, std::size_t path, const Graph& g);

AnnotationState initial_marking(const VdpCover& s, const Graph& g);

bool is_dangerous(const VdpCover& s, std::size_t path, const AnnotationState& st, const Graph& g);

/// Runs acceptances to a fixpoint, then records rejected vertices and the
/// dangerous/weak/dangling flags.
AnnotationState run_accepting(const VdpCover& s, const Graph& g, AnnotationState st);

/// Orients weak paths so the acceptor is v3 with deg(v5) >= 3, moving the
/// acceptor to v6 when needed.
AnnotationState normalize_weak_paths(const VdpCover& s, AnnotationState st, const Graph& g);

AnnotationState run_forcing(const VdpCover& s, AnnotationState st, const Graph& g);

ChargeLedger compute_charges(const VdpCover& s, const AnnotationState& st, const Graph& g);

/// Upper bound on ch(v) in sevenths for an acceptor of a >= 4 1-path
/// endpoint (-4), of a {1,2,5,8} path endpoint (-3), or otherwise (0),
/// minus 6 when v is forced.
std::int64_t vertex_charge_bound(Vertex v, const VdpCover& s, const AnnotationState& st);

struct BrickChoice {
    VertexSet d;
    std::int64_t alpha = 0;  // sevenths
    std::int64_t cost = 0;   // 7|D| + sum of ch(v) over the segment
};

/// D for a 3-, 4-, 7- or 8-vertex segment given in brick order.
/// Throws PreconditionError when the segment's acceptors are misplaced.
BrickChoice select_brick(int kind, std::span<const Vertex> segment, const AnnotationState& st,
                         const ChargeLedger& ledger);

struct PathSelection {
    VertexSet d;
    std::string rule;  // which case produced d, e.g. "order-8/weak"
};

PathSelection select_for_path(const VdpCover& s, std::size_t path, const AnnotationState& st,
                              const ChargeLedger& ledger, const Graph& g);

SafetyEntry verify_safety(const VdpCover& s, std::size_t path, const VertexSet& d, const AnnotationState& st,
                          const ChargeLedger& ledger, const Graph& g);

/// Everything the constructor computed, for reports and tests.
struct Construction {
    VdpCover cover;
    std::uint64_t cover_repairs = 0;
    AnnotationState state;
    ChargeLedger ledger;
    std::vector<PathSelection> selections;
    std::vector<SafetyEntry> safety;
    VertexSet d;

    bool all_safe() const;
};

/// Throws PreconditionError naming the offending pair when g is not reduced.
Construction construct_dominating_set(const Graph& g);

VertexSet dominating_set_3_7(const Graph& g);

/// Line-oriented dump: one line per path with class, acceptors, forced,
/// charges and D_P.
std::string dump_construction(const Construction& c, const Graph& g);

}  // namespace nbk
