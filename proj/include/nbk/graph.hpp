#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbk {

using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;

/// Raised when a caller violates an operation's precondition (unknown vertex,
/// missing edge, malformed witness, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails. Always indicates a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simple undirected graph with stable vertex identifiers.
///
/// Identifiers are never reused by one graph value (or its copies): every
/// contraction mints a fresh identifier above all identifiers seen so far.
/// Iteration order is ascending by identifier everywhere.
class Graph {
public:
    Graph() = default;
    /// Vertices 0..n-1, no edges.
    explicit Graph(std::size_t n);

    Vertex add_vertex();
    void add_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v);

    void remove_vertex(Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Merges u and v into a fresh vertex adjacent to (N(u) ∪ N(v)) \ {u, v}.
    Vertex contract_edge(Vertex u, Vertex v);

    /// Replaces the vertices of a path (|p| >= 2) by one fresh vertex adjacent
    /// to every external neighbor of the path.
    Vertex contract_path(std::span<const Vertex> p);

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    const VertexSet& neighbors(Vertex v) const;

    std::vector<Vertex> vertices() const;
    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const;
    bool empty() const { return adj_.empty(); }

    /// Smallest identifier that add_vertex() would mint next.
    Vertex next_id() const { return next_id_; }

    /// Edges (u, v) with u < v in ascending order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Checks adjacency symmetry and absence of loops; throws InvariantError.
    void audit() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

    const std::map<Vertex, VertexSet>& adjacency() const { return adj_; }

private:
    void require_vertex(Vertex v, const char* op) const;

    std::map<Vertex, VertexSet> adj_;
    Vertex next_id_ = 0;
};

/// True iff every vertex of g is in d or adjacent to a member of d.
bool is_dominating(const Graph& g, const VertexSet& d);

/// Vertices of g not dominated by d.
std::vector<Vertex> undominated(const Graph& g, const VertexSet& d);

/// True iff u and v are joined by a path of length at most d.
bool within_distance(const Graph& g, Vertex u, Vertex v, std::size_t d);

/// Copy of g with vertices relabeled 0..n-1 in ascending identifier order.
Graph relabel_compact(const Graph& g);

std::string to_string(const VertexSet& s);

}  // namespace nbk
