#include "nbk/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nbk {

Graph::Graph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex();
}

Vertex Graph::add_vertex() {
    Vertex v = next_id_++;
    adj_.emplace(v, VertexSet{});
    return v;
}

void Graph::add_vertex(Vertex v) {
    if (has_vertex(v)) throw PreconditionError("add_vertex: duplicate vertex " + std::to_string(v));
    adj_.emplace(v, VertexSet{});
    next_id_ = std::max(next_id_, v + 1);
}

void Graph::add_edge(Vertex u, Vertex v) {
    require_vertex(u, "add_edge");
    require_vertex(v, "add_edge");
    if (u == v) throw PreconditionError("add_edge: self-loop on " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_vertex(Vertex v) {
    require_vertex(v, "remove_vertex");
    for (Vertex w : adj_[v]) adj_[w].erase(v);
    adj_.erase(v);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v))
        throw PreconditionError("remove_edge: no edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].erase(v);
    adj_[v].erase(u);
}

Vertex Graph::contract_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v))
        throw PreconditionError("contract_edge: no edge " + std::to_string(u) + "-" + std::to_string(v));
    const Vertex p[] = {u, v};
    return contract_path(p);
}

Vertex Graph::contract_path(std::span<const Vertex> p) {
    if (p.size() < 2) throw PreconditionError("contract_path: path needs at least two vertices");
    VertexSet members;
    for (std::size_t i = 0; i < p.size(); ++i) {
        require_vertex(p[i], "contract_path");
        if (!members.insert(p[i]).second) throw PreconditionError("contract_path: repeated vertex");
        if (i > 0 && !has_edge(p[i - 1], p[i])) throw PreconditionError("contract_path: not a path");
    }
    VertexSet outside;
    for (Vertex x : members)
        for (Vertex w : adj_.at(x))
            if (!members.count(w)) outside.insert(w);
    for (Vertex x : members) remove_vertex(x);
    Vertex merged = add_vertex();
    for (Vertex w : outside) add_edge(merged, w);
    return merged;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw PreconditionError("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<Vertex> Graph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& [_, n] : adj_) twice += n.size();
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [u, n] : adj_)
        for (Vertex v : n)
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::audit() const {
    for (const auto& [u, n] : adj_) {
        if (n.count(u)) throw InvariantError("graph audit: self-loop at " + std::to_string(u));
        if (u >= next_id_) throw InvariantError("graph audit: identifier above mint counter");
        for (Vertex v : n) {
            auto it = adj_.find(v);
            if (it == adj_.end()) throw InvariantError("graph audit: dangling neighbor " + std::to_string(v));
            if (!it->second.count(u)) throw InvariantError("graph audit: asymmetric edge");
        }
    }
}

void Graph::require_vertex(Vertex v, const char* op) const {
    if (!has_vertex(v)) throw PreconditionError(std::string(op) + ": unknown vertex " + std::to_string(v));
}

std::vector<Vertex> undominated(const Graph& g, const VertexSet& d) {
    std::vector<Vertex> out;
    for (const auto& [v, n] : g.adjacency()) {
        if (d.count(v)) continue;
        bool hit = std::any_of(n.begin(), n.end(), [&](Vertex w) { return d.count(w) != 0; });
        if (!hit) out.push_back(v);
    }
    return out;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    for (Vertex v : d)
        if (!g.has_vertex(v)) throw PreconditionError("is_dominating: set member " + std::to_string(v) + " not in graph");
    return undominated(g, d).empty();
}

bool within_distance(const Graph& g, Vertex u, Vertex v, std::size_t d) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw PreconditionError("within_distance: unknown vertex");
    if (u == v) return true;
    std::map<Vertex, std::size_t> dist{{u, 0}};
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        std::size_t dx = dist[x];
        if (dx == d) continue;
        for (Vertex w : g.neighbors(x)) {
            if (dist.count(w)) continue;
            if (w == v) return true;
            dist[w] = dx + 1;
            queue.push_back(w);
        }
    }
    return false;
}

Graph relabel_compact(const Graph& g) {
    std::map<Vertex, Vertex> index;
    for (Vertex v : g.vertices()) index.emplace(v, static_cast<Vertex>(index.size()));
    Graph out(index.size());
    for (auto [u, v] : g.edges()) out.add_edge(index[u], index[v]);
    return out;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace nbk
