#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nbk/graph.hpp"

namespace nbk {

/// Parses "n m" followed by m lines "u v" with 0 <= u < v < n. Lines starting
/// with '#' and blank lines are skipped. Throws PreconditionError naming the
/// line on malformed input, out-of-range indices or duplicate edges.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list. Relabels compactly when identifiers have gaps.
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);

/// G(n, m) with m distinct edges chosen uniformly; deterministic per seed.
Graph generate_random(std::size_t n, std::size_t m, std::uint64_t seed);

/// generate_random followed by exhaustive reduction and compact relabeling.
Graph generate_reduced(std::size_t n, std::size_t m, std::uint64_t seed);

/// petersen, k4, k4_pendant, weak_gadget, weak_gadget_switch.
Graph generate_named(std::string_view name);

/// "random:n,m,seed", "reduced:n,m,seed" or "named:<name>".
Graph generate(std::string_view spec);

/// One kernelization plus optional constructor/oracle run.
struct RunReport {
    std::string instance_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t k_nb = 0;
    bool decided_yes = false;
    std::size_t kernel_n = 0;
    std::size_t kernel_m = 0;
    std::int64_t kernel_k_nb = 0;
    std::array<std::size_t, 6> rule_counts{};
    bool kernel_bound_ok = true;  // 4 n' <= 7 k' (vacuous when YES)
    std::optional<std::size_t> constructor_size;
    std::optional<std::size_t> constructor_bound;  // floor(3 n' / 7)
    std::optional<std::size_t> oracle_gamma;
    double wall_ms = 0;
    bool failed = false;
    std::string failure;
};

std::string to_json(const RunReport& r, int indent = 2);

}  // namespace nbk
