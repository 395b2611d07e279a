#pragma once

#include <random>
#include <utility>
#include <vector>

#include "nbk/graph.hpp"

namespace nbk::testing {

inline Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Each pair an edge with probability p.
inline Graph gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Domination number by plain enumeration of index subsets, smallest first.
/// Kept deliberately naive: it is the test suite's own ground truth.
inline std::size_t naive_gamma(const Graph& g) {
    const auto vs = g.vertices();
    const std::size_t n = vs.size();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
        do {
            bool all = true;
            for (std::size_t i = 0; i < n && all; ++i) {
                bool hit = pick[i];
                for (std::size_t j = 0; j < n && !hit; ++j) hit = pick[j] && g.has_edge(vs[i], vs[j]);
                all = hit;
            }
            if (all) return size;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// All vertex pairs at distance < limit among vertices of the given degree.
inline bool degree_class_spread(const Graph& g, std::size_t degree, std::size_t min_distance) {
    std::vector<Vertex> vs;
    for (Vertex v : g.vertices())
        if (g.degree(v) == degree) vs.push_back(v);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (within_distance(g, vs[i], vs[j], min_distance - 1)) return false;
    return true;
}

/// The three post-reduction conditions, checked via distances only.
inline bool reduced_structure_holds(const Graph& g) {
    for (Vertex v : g.vertices())
        if (g.degree(v) == 0) return false;
    return degree_class_spread(g, 1, 5) && degree_class_spread(g, 2, 2);
}

}  // namespace nbk::testing
