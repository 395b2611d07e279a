#include "nbk/oracle.hpp"

#include <bit>
#include <vector>

#include "nbk/kernelizer.hpp"

namespace nbk {
namespace {

using Mask = std::uint32_t;

// Closed neighborhoods as bitmasks over a compact 0..n-1 indexing.
struct Compact {
    std::vector<Vertex> ids;
    std::vector<Mask> closed;
    Mask all = 0;
};

Compact compact(const Graph& g, std::size_t cap) {
    if (g.num_vertices() > cap)
        throw PreconditionError("oracle: " + std::to_string(g.num_vertices()) + " vertices exceed cap " +
                                std::to_string(cap));
    Compact c;
    c.ids = g.vertices();
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < c.ids.size(); ++i) index[c.ids[i]] = i;
    c.closed.assign(c.ids.size(), 0);
    for (std::size_t i = 0; i < c.ids.size(); ++i) {
        c.closed[i] |= Mask{1} << i;
        for (Vertex w : g.neighbors(c.ids[i])) c.closed[i] |= Mask{1} << index[w];
    }
    c.all = c.ids.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << c.ids.size()) - 1);
    return c;
}

VertexSet to_set(const Compact& c, Mask m) {
    VertexSet out;
    for (std::size_t i = 0; i < c.ids.size(); ++i)
        if (m >> i & 1) out.insert(c.ids[i]);
    return out;
}

class BranchAndBound {
public:
    explicit BranchAndBound(const Compact& c) : c_(c) {
        max_closed_ = 1;
        for (Mask m : c.closed) max_closed_ = std::max(max_closed_, std::popcount(m));
        greedy();
    }

    Mask solve() {
        search(0, 0, 0);
        return best_;
    }

private:
    void greedy() {
        Mask chosen = 0, covered = 0;
        while (covered != c_.all) {
            std::size_t pick = 0;
            int gain = -1;
            for (std::size_t i = 0; i < c_.closed.size(); ++i) {
                int g = std::popcount(c_.closed[i] & ~covered);
                if (g > gain) gain = g, pick = i;
            }
            chosen |= Mask{1} << pick;
            covered |= c_.closed[pick];
        }
        best_ = chosen;
        best_size_ = std::popcount(chosen);
    }

    void search(Mask chosen, Mask covered, int size) {
        if (covered == c_.all) {
            if (size < best_size_) best_ = chosen, best_size_ = size;
            return;
        }
        int missing = std::popcount(c_.all & ~covered);
        int lower = (missing + max_closed_ - 1) / max_closed_;
        if (size + lower >= best_size_) return;

        // Undominated vertex with the fewest candidate dominators.
        std::size_t target = 0;
        int fewest = 1 << 30;
        for (std::size_t i = 0; i < c_.closed.size(); ++i) {
            if (covered >> i & 1) continue;
            int k = std::popcount(c_.closed[i]);
            if (k < fewest) fewest = k, target = i;
        }
        for (std::size_t j = 0; j < c_.closed.size(); ++j) {
            if (!(c_.closed[target] >> j & 1)) continue;
            search(chosen | Mask{1} << j, covered | c_.closed[j], size + 1);
        }
    }

    const Compact& c_;
    int max_closed_ = 1;
    Mask best_ = 0;
    int best_size_ = 0;
};

// Advances m to the next mask with the same popcount (Gosper's hack).
std::uint64_t next_same_popcount(std::uint64_t m) {
    std::uint64_t lowest = m & (~m + 1);
    std::uint64_t ripple = m + lowest;
    return ripple | (((m ^ ripple) >> 2) / lowest);
}

}  // namespace

OracleResult min_dominating_set(const Graph& g, std::size_t cap) {
    Compact c = compact(g, std::min(cap, kOracleVertexCap));
    if (c.ids.empty()) return {};
    Mask best = BranchAndBound(c).solve();
    OracleResult r{static_cast<std::size_t>(std::popcount(best)), to_set(c, best)};
    if (!is_dominating(g, r.witness)) throw InvariantError("oracle: witness does not dominate");
    return r;
}

OracleResult min_dominating_set_exhaustive(const Graph& g, std::size_t cap) {
    Compact c = compact(g, std::min<std::size_t>(cap, 20));
    const std::size_t n = c.ids.size();
    if (n == 0) return {};
    for (std::size_t size = 1; size <= n; ++size) {
        std::uint64_t m = (std::uint64_t{1} << size) - 1;
        while (m < (std::uint64_t{1} << n)) {
            Mask covered = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1) covered |= c.closed[i];
            if (covered == c.all) return {size, to_set(c, static_cast<Mask>(m))};
            m = next_same_popcount(m);
        }
    }
    throw InvariantError("exhaustive oracle: no dominating set found");
}

bool has_dominating_set_of_size(const Graph& g, std::int64_t t, std::size_t cap) {
    if (t < 0) return false;
    if (g.empty()) return true;
    return static_cast<std::int64_t>(min_dominating_set(g, cap).gamma) <= t;
}

bool check_rule_equivalence(const DomSetInstance& before, const DomSetInstance& after, std::size_t cap) {
    return has_dominating_set_of_size(before.graph, before.k, cap) ==
           has_dominating_set_of_size(after.graph, after.k, cap);
}

}  // namespace nbk
