#include "nbk/dominator.hpp"

#include <algorithm>
#include <sstream>

#include "nbk/kernelizer.hpp"

namespace nbk {
namespace {

using Seq = std::vector<Vertex>;

std::map<Vertex, std::size_t> path_of(const VdpCover& s) {
    std::map<Vertex, std::size_t> out;
    for (std::size_t i = 0; i < s.paths.size(); ++i)
        for (Vertex v : s.paths[i].vertices) out[v] = i;
    return out;
}

/// Marked vertices outside path j adjacent to some vertex of j.
VertexSet marked_neighbors(const VdpCover& s, std::size_t j, const VertexSet& marked, const Graph& g) {
    VertexSet out;
    const VdpPath& p = s.paths[j];
    for (Vertex u : p.vertices)
        for (Vertex w : g.neighbors(u))
            if (marked.count(w) && !p.contains(w)) out.insert(w);
    return out;
}

std::size_t neighbors_on(const VdpPath& p, Vertex v, const Graph& g) {
    std::size_t k = 0;
    for (Vertex w : g.neighbors(v)) k += p.contains(w) ? 1 : 0;
    return k;
}

Seq reversed(Seq v) {
    std::reverse(v.begin(), v.end());
    return v;
}

void fail(const std::string& what) { throw InvariantError(what); }

class Selector {
public:
    Selector(const VdpCover& s, std::size_t path, const AnnotationState& st, const ChargeLedger& ledger,
             const Graph& g)
        : s_(s), path_(path), st_(st), ledger_(ledger), g_(g), v_(s.paths[path].vertices) {
        for (Vertex x : v_)
            if (st.forced.count(x)) fp_.insert(x);
    }

    PathSelection run();

private:
    bool in_a(Vertex x) const { return st_.is_acceptor(x); }
    bool in_f(Vertex x) const { return st_.forced.count(x) != 0; }
    std::vector<std::size_t> acceptor_positions() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < v_.size(); ++k)
            if (in_a(v_[k])) out.push_back(k);
        return out;
    }
    void orient_reverse() { std::reverse(v_.begin(), v_.end()); }

    // Picks vertices by 0-based position plus P ∩ F.
    VertexSet pick(std::initializer_list<std::size_t> positions) const {
        VertexSet d(fp_);
        for (std::size_t k : positions) d.insert(v_.at(k));
        return d;
    }

    // Bricks are laid left to right; a 0-safe endpoint is an accepted vertex
    // with no D contribution.
    void add_brick(int kind, std::size_t from, bool reverse = false) {
        Seq seg(v_.begin() + static_cast<std::ptrdiff_t>(from),
                v_.begin() + static_cast<std::ptrdiff_t>(from + static_cast<std::size_t>(kind)));
        if (reverse) seg = reversed(seg);
        BrickChoice b = select_brick(kind, seg, st_, ledger_);
        d_.insert(b.d.begin(), b.d.end());
        alpha_ += b.alpha;
    }
    void add_accepted_endpoint(std::size_t pos) {
        Vertex x = v_.at(pos);
        if (!st_.accepted(x) || in_f(x) || ledger_.of(x) != 0) fail("selector: endpoint is not 0-safe");
    }
    PathSelection composed(std::string rule) {
        const std::int64_t budget = 3 * static_cast<std::int64_t>(v_.size());
        if (alpha_ + ledger_.path_charge.at(path_) > budget)
            fail("selector " + rule + ": brick budget " + std::to_string(alpha_) + "+" +
                 std::to_string(ledger_.path_charge.at(path_)) + " exceeds " + std::to_string(budget));
        return {d_, std::move(rule)};
    }

    PathSelection order_one();
    PathSelection one_path();
    PathSelection order_two();
    PathSelection order_five();
    PathSelection order_eight();
    PathSelection order_eight_case5();
    PathSelection order_eleven();
    PathSelection long_two_path();

    const VdpCover& s_;
    std::size_t path_;
    const AnnotationState& st_;
    const ChargeLedger& ledger_;
    const Graph& g_;
    Seq v_;
    VertexSet fp_;
    VertexSet d_;
    std::int64_t alpha_ = 0;
};

PathSelection Selector::run() {
    const std::size_t len = v_.size();
    if (len % 3 == 0) {
        if (len != 3) fail("selector: 0-path of order " + std::to_string(len));
        add_brick(3, 0);
        return composed("order-3");
    }
    if (len == 1) return order_one();
    if (len % 3 == 1) return one_path();
    if (len == 2) return order_two();
    if (len == 5) return order_five();
    if (len == 8) return order_eight();
    if (len == 11) return order_eleven();
    return long_two_path();
}

PathSelection Selector::order_one() {
    Vertex v = v_[0];
    if (st_.accepted(v)) return {{}, "order-1/accepted"};
    if (!st_.rejected.count(v)) fail("selector: order-1 path neither accepted nor rejected");
    return {{v}, "order-1/rejected"};
}

PathSelection Selector::one_path() {
    const std::size_t len = v_.size();
    auto outs = out_endpoints(s_.paths[path_], g_);
    if (!outs.empty()) {
        if (!st_.accepted(v_.front())) orient_reverse();
        if (!st_.accepted(v_.front())) fail("selector: 1-path with out-endpoint has no accepted endpoint");
        add_accepted_endpoint(0);
        for (std::size_t k = 1; k < len; k += 3) add_brick(3, k);
        return composed("1-path/out-endpoint");
    }
    if (len == 4) {
        for (Vertex x : v_) {
            const auto& nx = g_.neighbors(x);
            bool closed = std::all_of(v_.begin(), v_.end(), [&](Vertex p) { return p == x || nx.count(p); });
            if (!closed) continue;
            VertexSet d(fp_);
            d.insert(x);
            return {d, "order-4/closed-neighborhood"};
        }
        fail("selector: order-4 path is not a closed neighborhood");
    }
    add_brick(7, 0);
    for (std::size_t k = 7; k < len; k += 3) add_brick(3, k);
    return composed("1-path/order>=7");
}

PathSelection Selector::order_two() {
    auto outs = out_endpoints(s_.paths[path_], g_);
    if (outs.size() == 2) {
        if (!st_.accepted(v_[0]) || !st_.accepted(v_[1])) fail("selector: order-2 out-endpoint not accepted");
        return {{}, "order-2/accepted"};
    }
    if (outs.size() == 1 && is_dangling(s_.paths[path_], g_)) return {{outs[0]}, "order-2/dangling"};
    fail("selector: order-2 path without out-endpoint");
    return {};
}

PathSelection Selector::order_five() {
    auto outs = out_endpoints(s_.paths[path_], g_);
    if (outs.size() == 2) {
        add_accepted_endpoint(0);
        add_brick(3, 1);
        add_accepted_endpoint(4);
        return composed("order-5/two-out-endpoints");
    }
    auto ap = acceptor_positions();
    if (!ap.empty()) {
        if (ap != std::vector<std::size_t>{2}) fail("selector: order-5 acceptor off the middle");
        if (g_.degree(v_[0]) < 2) orient_reverse();
        return {pick({2, 3}), "order-5/middle-acceptor"};
    }
    return {pick({1, 3}), "order-5/no-acceptor"};
}

PathSelection Selector::order_eight() {
    const bool front = st_.accepted(v_[0]), back = st_.accepted(v_[7]);
    auto ap = acceptor_positions();
    if (front && back) {
        add_accepted_endpoint(0);
        add_brick(3, 1);
        add_brick(3, 4);
        add_accepted_endpoint(7);
        return composed("order-8/both-ends-accepted");
    }
    if (ap.empty()) {
        if (front || back) fail("selector: order-8 path with a single accepted endpoint and no acceptor");
        add_brick(8, 0);
        return composed("order-8/no-acceptor");
    }
    if (ap.size() == 2) {
        if (ap != std::vector<std::size_t>{2, 5}) fail("selector: order-8 acceptors off (2,2)-vertices");
        VertexSet d(fp_);
        d.insert(v_[2]);
        d.insert(v_[5]);
        if (!front) d.insert(v_[1]);
        if (!back) d.insert(v_[6]);
        return {d, "order-8/two-acceptors"};
    }
    if (ap.size() != 1) fail("selector: order-8 path with more than two acceptors");
    if (front || back) {
        if (!front) orient_reverse();
        add_accepted_endpoint(0);
        auto pos = acceptor_positions().front();
        if (pos == 2) {
            add_brick(3, 1);
            add_brick(4, 4);
        } else if (pos == 5) {
            add_brick(3, 1);
            add_brick(4, 4, true);
        } else {
            fail("selector: order-8 acceptor off (2,2)-vertices");
        }
        return composed("order-8/one-end-accepted");
    }
    return order_eight_case5();
}

PathSelection Selector::order_eight_case5() {
    if (acceptor_positions().front() == 5) orient_reverse();
    if (acceptor_positions().front() != 2) fail("selector: order-8 acceptor off (2,2)-vertices");
    const Vertex acc = v_[2];

    VertexSet outside_a(fp_);
    outside_a.erase(acc);
    if (!outside_a.empty()) {
        if (in_f(v_[1])) return {pick({2, 4, 6}), "order-8/forced-on-path"};
        if (in_f(v_[6])) return {pick({1, 2, 4}), "order-8/forced-on-path"};
        return {pick({1, 2, 6}), "order-8/forced-on-path"};
    }

    std::vector<Vertex> accepted;
    for (const auto& [x, w] : st_.acceptor_of)
        if (w == acc) accepted.push_back(x);
    const auto where = path_of(s_);
    bool c1 = accepted.size() >= 2;
    bool c2 = std::any_of(accepted.begin(), accepted.end(),
                          [&](Vertex x) { return s_.paths[where.at(x)].order() >= 4; });
    bool c3 = in_f(acc);
    if (c1 || c2 || c3) return {pick({1, 2, 4, 6}), "order-8/loaded-acceptor"};

    const Vertex v = accepted.front();
    const auto& n1 = g_.neighbors(v_[0]);
    if (g_.degree(v) == 1) {
        if (n1.count(v_[2])) return {pick({2, 4, 6}), "order-8/leaf-accepted"};
        for (std::size_t k : {3u, 4u, 5u})
            if (n1.count(v_[k])) return {pick({2, k, 6}), "order-8/leaf-accepted"};
        for (std::size_t k : {6u, 7u})
            if (n1.count(v_[k])) return {pick({2, 4, k}), "order-8/leaf-accepted"};
        fail("selector: order-8 leaf case without a chord at v1");
    }
    if (!st_.weak.at(path_)) fail("selector: order-8 fallback on a path that is not weak");
    if (n1.count(v_[4])) return {pick({0, 2, 6}), "order-8/weak"};
    return {pick({1, 2, 6}), "order-8/weak"};
}

PathSelection Selector::order_eleven() {
    auto ap = acceptor_positions();
    if (ap.size() >= 2) {
        add_brick(4, 0);
        add_brick(3, 4);
        add_brick(4, 7, true);
        return composed("order-11/two-acceptors");
    }
    if (ap.size() == 1) {
        const VertexSet case2{v_[1], v_[2], v_[5], v_[8], v_[9]};
        if (std::includes(case2.begin(), case2.end(), fp_.begin(), fp_.end()))
            return {pick({1, 2, 5, 8, 9}), "order-11/one-acceptor"};
        if (ap.front() == 8) orient_reverse();
        const std::size_t pos = acceptor_positions().front();
        if (pos == 2) {
            if (in_f(v_[3]) || in_f(v_[4])) return {pick({1, 2, 6, 9}), "order-11/one-acceptor-forced"};
            return {pick({1, 2, 5, 9}), "order-11/one-acceptor-forced"};
        }
        if (pos == 5) {
            if (!in_f(v_[3]) && !in_f(v_[4])) orient_reverse();
            return {pick({1, 5, 7, 9}), "order-11/one-acceptor-forced"};
        }
        fail("selector: order-11 acceptor off (2,2)-vertices");
    }
    add_brick(8, 0);
    add_brick(3, 8);
    return composed("order-11/no-acceptor");
}

PathSelection Selector::long_two_path() {
    const std::size_t len = v_.size();
    add_brick(7, 0);
    for (std::size_t k = 7; k + 7 < len; k += 3) add_brick(3, k);
    add_brick(7, len - 7, true);
    return composed("2-path/order>=14");
}

}  // namespace

VertexSet AnnotationState::acceptors() const {
    VertexSet out;
    for (const auto& [_, w] : acceptor_of) out.insert(w);
    return out;
}

bool AnnotationState::is_acceptor(Vertex v) const {
    return std::any_of(acceptor_of.begin(), acceptor_of.end(), [&](const auto& kv) { return kv.second == v; });
}

std::int64_t ChargeLedger::of(Vertex v) const {
    auto it = vertex_charge.find(v);
    return it == vertex_charge.end() ? 0 : it->second;
}

std::int64_t ChargeLedger::hat(const VdpCover& s, std::size_t path) const {
    std::int64_t h = path_charge.at(path);
    for (Vertex v : s.paths[path].vertices) h += of(v);
    return h;
}

std::int64_t ChargeLedger::total(const VdpCover& s) const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < s.paths.size(); ++i) t += hat(s, i);
    return t;
}

std::vector<std::size_t> neighboring_paths(const VdpCover& s, std::size_t path, const Graph& g) {
    const auto where = path_of(s);
    std::set<std::size_t> out;
    for (Vertex u : s.paths[path].vertices)
        for (Vertex w : g.neighbors(u)) {
            std::size_t q = where.at(w);
            if (q != path) out.insert(q);
        }
    return {out.begin(), out.end()};
}

AnnotationState initial_marking(const VdpCover& s, const Graph& g) {
    AnnotationState st;
    for (const auto& p : s.paths) {
        auto outs = out_endpoints(p, g);
        if (p.residue() == 1 && !outs.empty()) st.marked.insert(outs.front());
        const std::size_t len = p.order();
        if ((len == 2 || len == 5 || len == 8) && outs.size() == 2) st.marked.insert(outs.begin(), outs.end());
    }
    return st;
}

bool is_dangerous(const VdpCover& s, std::size_t path, const AnnotationState& st, const Graph& g) {
    const VdpPath& p = s.paths[path];
    if (p.order() != 8) return false;
    VertexSet mk = marked_neighbors(s, path, st.marked, g);
    if (mk.size() != 1) return false;
    Vertex v = *mk.begin();
    if (neighbors_on(p, v, g) != 1) return false;
    if (g.degree(v) <= 1) return false;
    const auto where = path_of(s);
    if (s.paths[where.at(v)].order() != 1) return false;
    return out_endpoints(p, g).size() <= 1;
}

AnnotationState run_accepting(const VdpCover& s, const Graph& g, AnnotationState st) {
    for (;;) {
        bool progressed = false;
        for (std::size_t j = 0; j < s.paths.size() && !progressed; ++j) {
            VertexSet mk = marked_neighbors(s, j, st.marked, g);
            if (mk.empty() || is_dangerous(s, j, st, g)) continue;
            const VdpPath& p = s.paths[j];
            for (Vertex v : mk) {
                Vertex w = 0;
                bool found = false;
                for (Vertex u : g.neighbors(v))
                    if (p.contains(u)) {
                        w = u;
                        found = true;
                        break;
                    }
                if (!found) fail("accepting: marked neighbor without a neighbor on the path");
                st.acceptor_of[v] = w;
                st.accepted_by_path[j].push_back(v);
                st.marked.erase(v);
            }
            if (p.order() == 5 || p.order() == 8) {
                auto outs = out_endpoints(p, g);
                if (outs.size() == 1 && !st.accepted(outs.front())) st.marked.insert(outs.front());
            }
            progressed = true;
        }
        if (!progressed) break;
    }

    st.rejected = st.marked;
    const std::size_t count = s.paths.size();
    st.dangerous.assign(count, false);
    st.weak.assign(count, false);
    st.dangling.assign(count, false);
    const auto where = path_of(s);
    for (std::size_t j = 0; j < count; ++j) {
        const VdpPath& p = s.paths[j];
        st.dangerous[j] = is_dangerous(s, j, st, g);
        st.dangling[j] = is_dangling(p, g);
        auto it = st.accepted_by_path.find(j);
        if (p.order() == 8 && it != st.accepted_by_path.end() && it->second.size() == 1) {
            Vertex v = it->second.front();
            st.weak[j] = neighbors_on(p, v, g) >= 2 && s.paths[where.at(v)].order() == 1 &&
                         out_endpoints(p, g).empty();
        }
    }

    // Every rejected path is of order 1 with at least two dangerous neighbors.
    for (Vertex v : st.rejected) {
        std::size_t j = where.at(v);
        if (s.paths[j].order() != 1) fail("accepting: rejected vertex on a path of order > 1");
        std::size_t dangerous = 0;
        for (std::size_t q : neighboring_paths(s, j, g)) dangerous += st.dangerous[q] ? 1 : 0;
        if (dangerous < 2) fail("accepting: rejected path with fewer than two dangerous neighbors");
    }
    return st;
}

AnnotationState normalize_weak_paths(const VdpCover& s, AnnotationState st, const Graph& g) {
    for (std::size_t j = 0; j < s.paths.size(); ++j) {
        if (!st.weak.at(j)) continue;
        const Seq& p = s.paths[j].vertices;
        const Vertex v = st.accepted_by_path.at(j).front();
        const Vertex w = st.acceptor_of.at(v);
        bool reversed;
        if (w == p[2]) {
            reversed = false;
        } else if (w == p[5]) {
            reversed = true;
        } else {
            fail("weak path: acceptor is neither v3 nor v6");
        }
        auto at = [&](std::size_t pos) { return reversed ? p[7 - pos] : p[pos]; };
        if (g.degree(at(4)) == 2) {
            Vertex other = at(5);
            if (!g.has_edge(v, other)) fail("weak path: accepted vertex not adjacent to v6");
            st.acceptor_of[v] = other;
            reversed = !reversed;
        }
        if (g.degree(at(4)) < 3) fail("weak path: deg(v5) < 3 after normalization");
        st.weak_reversed[j] = reversed;
    }
    return st;
}

AnnotationState run_forcing(const VdpCover& s, AnnotationState st, const Graph& g) {
    const auto where = path_of(s);
    std::set<std::size_t> forcing_paths;
    for (std::size_t j = 0; j < s.paths.size(); ++j) {
        if (!st.weak.at(j)) continue;
        const VdpPath& p = s.paths[j];
        if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](Vertex x) { return st.forced.count(x) != 0; }))
            continue;
        const bool rev = st.weak_reversed.at(j);
        const Vertex v5 = rev ? p.vertices[3] : p.vertices[4];
        std::vector<Vertex> outside;
        for (Vertex x : g.neighbors(v5))
            if (!p.contains(x)) outside.push_back(x);
        if (outside.empty()) continue;
        // A neighbor already in F dominates v5 as it is.
        if (std::any_of(outside.begin(), outside.end(), [&](Vertex x) { return st.forced.count(x) != 0; }))
            continue;
        auto pick = std::find_if(outside.begin(), outside.end(),
                                 [&](Vertex x) { return !forcing_paths.count(where.at(x)); });
        Vertex x = pick != outside.end() ? *pick : outside.front();
        st.forced.insert(x);
        st.forced_by[x] = j;
        forcing_paths.insert(j);
    }

    // No endpoint of a 1- or 2-path is forced.
    for (Vertex x : st.forced) {
        const VdpPath& q = s.paths[where.at(x)];
        if (q.residue() != 0 && (x == q.front() || x == q.back()))
            fail("forcing: endpoint of a 1-/2-path was forced");
    }
    return st;
}

ChargeLedger compute_charges(const VdpCover& s, const AnnotationState& st, const Graph& g) {
    ChargeLedger ledger;
    ledger.path_charge.assign(s.paths.size(), 0);
    const auto where = path_of(s);
    auto send_vertex_to_path = [&](Vertex from, std::size_t to, std::int64_t amount) {
        ledger.vertex_charge[from] -= amount;
        ledger.path_charge[to] += amount;
    };
    auto send_path_to_path = [&](std::size_t from, std::size_t to, std::int64_t amount) {
        ledger.path_charge[from] -= amount;
        ledger.path_charge[to] += amount;
    };

    // D1
    for (const auto& [v, w] : st.acceptor_of) {
        std::size_t j = where.at(v);
        const VdpPath& p = s.paths[j];
        if (v != p.front() && v != p.back()) fail("charges: accepted vertex is not an endpoint");
        const std::size_t len = p.order();
        if (p.residue() == 1 && len >= 4) {
            send_vertex_to_path(w, j, 4);
        } else if (len == 1 || len == 2 || len == 5 || len == 8) {
            send_vertex_to_path(w, j, 3);
        } else {
            fail("charges: accepted endpoint on a path of order " + std::to_string(len));
        }
    }
    // D2
    for (Vertex v : st.rejected) {
        std::size_t j = where.at(v);
        for (std::size_t q : neighboring_paths(s, j, g))
            if (st.dangerous.at(q)) send_path_to_path(j, q, 2);
    }
    // D3
    for (std::size_t j = 0; j < s.paths.size(); ++j) {
        if (!st.dangling.at(j)) continue;
        for (std::size_t q : neighboring_paths(s, j, g)) {
            const VdpPath& target = s.paths[q];
            if (target.residue() == 2) {
                if (target.order() != 11 && target.order() != 17)
                    fail("charges: dangling path next to a 2-path of order " + std::to_string(target.order()));
                std::size_t dangling_neighbors = 0;
                for (std::size_t r : neighboring_paths(s, q, g)) dangling_neighbors += st.dangling.at(r) ? 1 : 0;
                if (dangling_neighbors != 1) fail("charges: 2-path with several dangling neighbors");
            }
            send_path_to_path(j, q, 1);
        }
    }
    // D4
    for (const auto& [x, j] : st.forced_by) send_vertex_to_path(x, j, 6);

    if (ledger.total(s) != 0) fail("charges: total charge is not zero");
    return ledger;
}

std::int64_t vertex_charge_bound(Vertex v, const VdpCover& s, const AnnotationState& st) {
    const auto where = path_of(s);
    std::int64_t bound = 0;
    for (const auto& [x, w] : st.acceptor_of) {
        if (w != v) continue;
        const VdpPath& p = s.paths[where.at(x)];
        bound = std::min<std::int64_t>(bound, p.residue() == 1 && p.order() >= 4 ? -4 : -3);
    }
    return bound - (st.forced.count(v) ? 6 : 0);
}

BrickChoice select_brick(int kind, std::span<const Vertex> seg, const AnnotationState& st,
                         const ChargeLedger& ledger) {
    if (seg.size() != static_cast<std::size_t>(kind)) throw PreconditionError("select_brick: segment size mismatch");
    auto in_a = [&](std::size_t k) { return st.is_acceptor(seg[k]); };
    auto in_f = [&](std::size_t k) { return st.forced.count(seg[k]) != 0; };
    VertexSet fp;
    for (Vertex x : seg)
        if (st.forced.count(x)) fp.insert(x);
    auto pick = [&](std::initializer_list<std::size_t> positions) {
        VertexSet d(fp);
        for (std::size_t k : positions) d.insert(seg[k]);
        return d;
    };
    auto acceptors_within = [&](std::initializer_list<std::size_t> allowed) {
        for (std::size_t k = 0; k < seg.size(); ++k)
            if (in_a(k) && std::find(allowed.begin(), allowed.end(), k) == allowed.end()) return false;
        return true;
    };

    BrickChoice b;
    switch (kind) {
        case 3:
            if (!acceptors_within({1})) throw PreconditionError("3-brick: acceptor off v2");
            if (in_a(1)) {
                b.d = pick({1});
                b.alpha = 6;
            } else {
                b.d = fp.size() >= 2 ? fp : pick({1});
                b.alpha = 8;
            }
            break;
        case 4:
            if (!acceptors_within({2})) throw PreconditionError("4-brick: acceptor off v3");
            if (in_a(2)) {
                b.d = pick({1, 2});
                b.alpha = 11 + (in_f(0) ? 1 : 0) + (in_f(3) ? 1 : 0);
            } else {
                if (fp.empty())
                    b.d = pick({1, 2});
                else if (in_f(0) || in_f(1))
                    b.d = pick({2});
                else
                    b.d = pick({1});
                b.alpha = 14;
            }
            break;
        case 7:
            if (!acceptors_within({2, 5})) throw PreconditionError("7-brick: acceptor off v3/v6");
            if (in_a(2) || in_a(5)) {
                auto head = select_brick(4, seg.subspan(0, 4), st, ledger);
                auto tail = select_brick(3, seg.subspan(4, 3), st, ledger);
                b.d = head.d;
                b.d.insert(tail.d.begin(), tail.d.end());
            } else if (fp.empty()) {
                b.d = pick({1, 3, 5});
            } else if (in_f(0) || in_f(1)) {
                b.d = pick({2, 5});
            } else if (in_f(5) || in_f(6)) {
                b.d = pick({1, 4});
            } else {
                b.d = pick({1, 5});
            }
            b.alpha = 21;
            break;
        case 8:
            if (!acceptors_within({})) throw PreconditionError("8-brick: segment contains an acceptor");
            if (fp.size() <= 1)
                b.d = pick({1, 4, 7});
            else if (in_f(0) || in_f(1))
                b.d = pick({3, 6});
            else if (in_f(6) || in_f(7))
                b.d = pick({1, 4});
            else
                b.d = pick({1, 6});
            b.alpha = 22;
            break;
        default: throw PreconditionError("select_brick: unsupported brick size " + std::to_string(kind));
    }
    b.cost = 7 * static_cast<std::int64_t>(b.d.size());
    for (Vertex x : seg) b.cost += ledger.of(x);
    if (b.cost > b.alpha)
        throw InvariantError(std::to_string(kind) + "-brick: cost " + std::to_string(b.cost) + " exceeds " +
                             std::to_string(b.alpha));
    return b;
}

PathSelection select_for_path(const VdpCover& s, std::size_t path, const AnnotationState& st,
                              const ChargeLedger& ledger, const Graph& g) {
    return Selector(s, path, st, ledger, g).run();
}

SafetyEntry verify_safety(const VdpCover& s, std::size_t path, const VertexSet& d, const AnnotationState& st,
                          const ChargeLedger& ledger, const Graph& g) {
    const VdpPath& p = s.paths[path];
    SafetyEntry e;
    e.path = path;
    e.d = d;
    e.seven_times_budget = 3 * static_cast<std::int64_t>(p.order());
    e.seven_times_cost = 7 * static_cast<std::int64_t>(d.size()) + ledger.hat(s, path);

    const VertexSet acceptors = st.acceptors();
    auto in_support = [&](Vertex x) { return d.count(x) || acceptors.count(x) || st.forced.count(x); };
    bool subset = std::all_of(d.begin(), d.end(), [&](Vertex x) { return p.contains(x); });
    e.dominated = std::all_of(p.vertices.begin(), p.vertices.end(), [&](Vertex x) {
        if (in_support(x)) return true;
        const auto& n = g.neighbors(x);
        return std::any_of(n.begin(), n.end(), in_support);
    });
    e.contains_marked = std::all_of(p.vertices.begin(), p.vertices.end(), [&](Vertex x) {
        return !(acceptors.count(x) || st.forced.count(x)) || d.count(x);
    });
    e.safe = subset && e.dominated && e.contains_marked && e.seven_times_cost <= e.seven_times_budget;
    return e;
}

bool Construction::all_safe() const {
    return std::all_of(safety.begin(), safety.end(), [](const SafetyEntry& e) { return e.safe; });
}

Construction construct_dominating_set(const Graph& g) {
    if (auto bad = find_reduced_structure_violation(g))
        throw PreconditionError("dominating_set_3_7: graph is not reduced at vertices " +
                                std::to_string(bad->first) + " and " + std::to_string(bad->second));
    Construction c;
    auto built = build_cover_with_stats(g);
    c.cover = std::move(built.cover);
    c.cover_repairs = built.repairs;
    c.state = initial_marking(c.cover, g);
    c.state = run_accepting(c.cover, g, std::move(c.state));
    c.state = normalize_weak_paths(c.cover, std::move(c.state), g);
    c.state = run_forcing(c.cover, std::move(c.state), g);
    c.ledger = compute_charges(c.cover, c.state, g);
    for (std::size_t j = 0; j < c.cover.paths.size(); ++j) {
        c.selections.push_back(select_for_path(c.cover, j, c.state, c.ledger, g));
        c.safety.push_back(verify_safety(c.cover, j, c.selections.back().d, c.state, c.ledger, g));
        c.d.insert(c.selections.back().d.begin(), c.selections.back().d.end());
    }
    return c;
}

VertexSet dominating_set_3_7(const Graph& g) {
    Construction c = construct_dominating_set(g);
    if (!c.all_safe()) {
        for (const auto& e : c.safety)
            if (!e.safe)
                throw InvariantError("dominating_set_3_7: path " + std::to_string(e.path) + " (" +
                                     c.selections[e.path].rule + ") is not safe");
    }
    if (!is_dominating(g, c.d)) throw InvariantError("dominating_set_3_7: result does not dominate");
    if (7 * c.d.size() > 3 * g.num_vertices()) throw InvariantError("dominating_set_3_7: result exceeds 3n/7");
    return c.d;
}

std::string dump_construction(const Construction& c, const Graph& g) {
    std::ostringstream os;
    const VertexSet acceptors = c.state.acceptors();
    for (std::size_t j = 0; j < c.cover.paths.size(); ++j) {
        const VdpPath& p = c.cover.paths[j];
        os << "path " << j << " order=" << p.order() << " class=" << p.residue();
        if (c.state.dangerous[j]) os << " dangerous";
        if (c.state.weak[j]) os << " weak";
        if (c.state.dangling[j]) os << " dangling";
        os << " |";
        for (Vertex v : p.vertices) {
            os << ' ' << v;
            if (acceptors.count(v)) os << 'A';
            if (c.state.forced.count(v)) os << 'F';
            if (c.state.accepted(v)) os << "<-" << c.state.acceptor_of.at(v);
            if (c.state.rejected.count(v)) os << 'R';
            if (auto ch = c.ledger.of(v)) os << '[' << ch << ']';
        }
        os << " | ch=" << c.ledger.path_charge[j] << " hat=" << c.ledger.hat(c.cover, j) << " D=" << to_string(c.selections[j].d)
           << " rule=" << c.selections[j].rule << " cost=" << c.safety[j].seven_times_cost << "/"
           << c.safety[j].seven_times_budget << (c.safety[j].safe ? " safe" : " UNSAFE") << '\n';
    }
    (void)g;
    return os.str();
}

}  // namespace nbk
