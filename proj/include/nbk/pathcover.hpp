#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbk/graph.hpp"

namespace nbk {

/// An ordered path of the cover. Consecutive vertices are adjacent.
struct VdpPath {
    std::vector<Vertex> vertices;

    std::size_t order() const { return vertices.size(); }
    /// Order mod 3; a 1-path has residue 1, and so on.
    std::size_t residue() const { return vertices.size() % 3; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    bool contains(Vertex v) const;

    bool operator==(const VdpPath&) const = default;
};

/// Vertex-disjoint paths covering every vertex.
struct VdpCover {
    std::vector<VdpPath> paths;

    bool operator==(const VdpCover&) const = default;
};

/// Order-2 path with exactly one endpoint of degree 1 in g.
bool is_dangling(const VdpPath& p, const Graph& g);

/// Endpoint with a neighbor outside the path.
bool is_out_endpoint(const VdpPath& p, Vertex endpoint, const Graph& g);

/// Out-endpoints of p in ascending identifier order (at most two).
std::vector<Vertex> out_endpoints(const VdpPath& p, const Graph& g);

/// Lexicographically ordered potential (r1, ..., r7).
///   r1 = 2|S1| + |S2|, r2 = |S2|, r3 = sum of 0-path orders,
///   r4 = sum of 1-path orders, r5 = #paths of order 8,
///   r6 = #dangling paths, r7 = n - |S0|.
struct Potential {
    std::array<std::uint64_t, 7> r{};

    auto operator<=>(const Potential&) const = default;
};

std::string to_string(const Potential& p);

enum class CoverCondition : std::uint8_t { B1 = 1, B2, B3, B4, B5, B6, B7 };

std::string to_string(CoverCondition c);

/// A failed cover condition.
///
/// For B1-B6: x is an out-endpoint of path_i (a 1- or 2-path), y = path_j's
/// vertex at y_pos is a neighbor of x. For B6, z_at_front tells which end of
/// path_j is z and chord_pos is the offending neighbor of z. For B7 only
/// path_i is meaningful.
struct Violation {
    CoverCondition kind = CoverCondition::B1;
    std::size_t path_i = 0;
    Vertex x = 0;
    std::size_t path_j = 0;
    Vertex y = 0;
    std::size_t y_pos = 0;
    bool z_at_front = true;
    std::size_t chord_pos = 0;
};

/// Every vertex a singleton path.
VdpCover initial_cover(const Graph& g);

Potential potential(const VdpCover& s, const Graph& g);

/// B7 first, then for each 1-/2-path by index, each out-endpoint and each
/// off-path neighbor by id, B1..B6 in order.
std::optional<Violation> find_violation(const VdpCover& s, const Graph& g);

/// Returns a cover with strictly smaller potential. Throws InvariantError when
/// no decrease is achieved.
VdpCover repair(const VdpCover& s, const Violation& v, const Graph& g);

/// Each path starts at its smaller-id endpoint; paths sorted by first vertex.
void normalize(VdpCover& s);

/// Throws InvariantError unless s partitions V(g) into paths of g.
void check_partition(const VdpCover& s, const Graph& g);

struct CoverBuild {
    VdpCover cover;
    std::uint64_t repairs = 0;
    std::uint64_t cap = 0;
};

/// Iteration cap 64 n^7 + 1000, saturating.
std::uint64_t repair_cap(std::size_t n);

/// Repairs from the singleton cover until no condition fails.
CoverBuild build_cover_with_stats(const Graph& g);
VdpCover build_cover(const Graph& g);

/// One path per line, identifiers space-separated.
std::string dump_cover(const VdpCover& s);

}  // namespace nbk
