#include "nbk/pathcover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace nbk {
namespace {

struct Location {
    std::size_t path = 0;
    std::size_t pos = 0;
};

std::map<Vertex, Location> locate_all(const VdpCover& s) {
    std::map<Vertex, Location> where;
    for (std::size_t i = 0; i < s.paths.size(); ++i)
        for (std::size_t k = 0; k < s.paths[i].order(); ++k) where[s.paths[i].vertices[k]] = {i, k};
    return where;
}

using Seq = std::vector<Vertex>;

Seq slice(const Seq& v, std::size_t from, std::size_t to) {
    return Seq(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

Seq reversed(Seq v) {
    std::reverse(v.begin(), v.end());
    return v;
}

Seq concat(std::initializer_list<Seq> parts) {
    Seq out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Cover with paths i and j replaced by `fresh` (empty sequences dropped).
VdpCover replace_pair(const VdpCover& s, std::size_t i, std::size_t j, std::initializer_list<Seq> fresh) {
    VdpCover out;
    for (std::size_t t = 0; t < s.paths.size(); ++t)
        if (t != i && t != j) out.paths.push_back(s.paths[t]);
    for (const auto& f : fresh)
        if (!f.empty()) out.paths.push_back(VdpPath{f});
    normalize(out);
    return out;
}

bool is_22_vertex(std::size_t pos_one_based) { return pos_one_based % 3 == 0; }

// Position (0-based, in path order) of a neighbor of z on the far side of y
// that is not a (2,2)-vertex, if any.
std::optional<std::size_t> b6_offender(const VdpPath& pj, std::size_t y_pos, bool z_at_front, const Graph& g) {
    const std::size_t len = pj.order();
    const Vertex z = z_at_front ? pj.front() : pj.back();
    const auto& nz = g.neighbors(z);
    std::size_t from = z_at_front ? y_pos + 1 : 0;
    std::size_t to = z_at_front ? len : y_pos;
    for (std::size_t k = from; k < to; ++k) {
        if (!nz.count(pj.vertices[k])) continue;
        std::size_t pos_from_z = z_at_front ? k + 1 : len - k;
        if (!is_22_vertex(pos_from_z)) return k;
    }
    return std::nullopt;
}

std::optional<CoverCondition> check_pair(const VdpCover& s, std::size_t i, std::size_t j, std::size_t y_pos,
                                         const Graph& g, bool& z_at_front, std::size_t& chord_pos) {
    const VdpPath& pi = s.paths[i];
    const VdpPath& pj = s.paths[j];
    const std::size_t len = pj.order();
    const std::size_t a = y_pos, b = len - y_pos - 1;
    switch (pj.residue()) {
        case 1: return CoverCondition::B1;
        case 0:
            if (!(a % 3 == 1 && b % 3 == 1)) return CoverCondition::B2;
            return std::nullopt;
        default: break;
    }
    if (!(a % 3 == 2 && b % 3 == 2)) return CoverCondition::B3;
    if (len == 8 && pi.residue() != 1) return CoverCondition::B4;
    if (is_dangling(pi, g)) {
        VdpPath left{slice(pj.vertices, 0, y_pos)};
        VdpPath right{slice(pj.vertices, y_pos + 1, len)};
        bool ok = is_dangling(left, g) || is_dangling(right, g) || ((len == 11 || len == 17) && a == b);
        if (!ok) return CoverCondition::B5;
    }
    for (bool front : {true, false}) {
        if (auto k = b6_offender(pj, y_pos, front, g)) {
            z_at_front = front;
            chord_pos = *k;
            return CoverCondition::B6;
        }
    }
    return std::nullopt;
}

}  // namespace

bool VdpPath::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

bool is_dangling(const VdpPath& p, const Graph& g) {
    if (p.order() != 2) return false;
    return (g.degree(p.front()) == 1) != (g.degree(p.back()) == 1);
}

bool is_out_endpoint(const VdpPath& p, Vertex endpoint, const Graph& g) {
    for (Vertex w : g.neighbors(endpoint))
        if (!p.contains(w)) return true;
    return false;
}

std::vector<Vertex> out_endpoints(const VdpPath& p, const Graph& g) {
    std::vector<Vertex> out;
    VertexSet ends{p.front(), p.back()};
    for (Vertex e : ends)
        if (is_out_endpoint(p, e, g)) out.push_back(e);
    return out;
}

std::string to_string(const Potential& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.r.size(); ++i) os << (i ? "," : "") << p.r[i];
    os << ')';
    return os.str();
}

std::string to_string(CoverCondition c) { return "B" + std::to_string(static_cast<int>(c)); }

VdpCover initial_cover(const Graph& g) {
    VdpCover s;
    for (Vertex v : g.vertices()) s.paths.push_back(VdpPath{{v}});
    return s;
}

Potential potential(const VdpCover& s, const Graph& g) {
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, sum0 = 0, sum1 = 0, eights = 0, dangling = 0, n = 0;
    for (const auto& p : s.paths) {
        n += p.order();
        switch (p.residue()) {
            case 0: ++s0, sum0 += p.order(); break;
            case 1: ++s1, sum1 += p.order(); break;
            default: ++s2; break;
        }
        if (p.order() == 8) ++eights;
        if (is_dangling(p, g)) ++dangling;
    }
    return Potential{{2 * s1 + s2, s2, sum0, sum1, eights, dangling, n - s0}};
}

std::optional<Violation> find_violation(const VdpCover& s, const Graph& g) {
    for (std::size_t i = 0; i < s.paths.size(); ++i)
        if (s.paths[i].residue() == 0 && s.paths[i].order() >= 6) {
            Violation v;
            v.kind = CoverCondition::B7;
            v.path_i = i;
            return v;
        }
    const auto where = locate_all(s);
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        const VdpPath& pi = s.paths[i];
        if (pi.residue() == 0) continue;
        for (Vertex x : out_endpoints(pi, g)) {
            for (Vertex y : g.neighbors(x)) {
                const Location loc = where.at(y);
                if (loc.path == i) continue;
                bool z_at_front = true;
                std::size_t chord = 0;
                if (auto kind = check_pair(s, i, loc.path, loc.pos, g, z_at_front, chord)) {
                    return Violation{*kind, i, x, loc.path, y, loc.pos, z_at_front, chord};
                }
            }
        }
    }
    return std::nullopt;
}

VdpCover repair(const VdpCover& s, const Violation& v, const Graph& g) {
    const Potential before = potential(s, g);
    auto accept = [&](VdpCover next) {
        if (!(potential(next, g) < before))
            throw InvariantError("repair " + to_string(v.kind) + ": potential did not decrease from " +
                                 to_string(before));
        return next;
    };

    if (v.kind == CoverCondition::B7) {
        const Seq& p = s.paths[v.path_i].vertices;
        return accept(replace_pair(s, v.path_i, v.path_i, {slice(p, 0, 3), slice(p, 3, p.size())}));
    }

    // Orient P_i so that x is its last vertex; joins then read P_i y (side).
    Seq pi = s.paths[v.path_i].vertices;
    if (pi.back() != v.x) std::reverse(pi.begin(), pi.end());
    if (pi.back() != v.x) throw InvariantError("repair: x is not an endpoint of P_i");
    const Seq& pj = s.paths[v.path_j].vertices;
    const std::size_t len = pj.size();
    const Seq left = slice(pj, 0, v.y_pos);         // ends next to y
    const Seq right = slice(pj, v.y_pos + 1, len);  // starts next to y
    const Seq left_away = reversed(left);
    auto join = [&](const Seq& side_away) { return concat({pi, {v.y}, side_away}); };

    switch (v.kind) {
        case CoverCondition::B1:
        case CoverCondition::B2:
        case CoverCondition::B3: {
            VdpCover c1 = replace_pair(s, v.path_i, v.path_j, {join(right), left});
            VdpCover c2 = replace_pair(s, v.path_i, v.path_j, {join(left_away), right});
            return accept(potential(c2, g) < potential(c1, g) ? std::move(c2) : std::move(c1));
        }
        case CoverCondition::B4: {
            const bool left_is_two = left.size() == 2;
            if (left.size() + right.size() != 7 || (left.size() != 2 && right.size() != 2))
                throw InvariantError("repair B4: order-8 path not split 2+5");
            const Seq& two_away = left_is_two ? left_away : right;
            const Seq& two = left_is_two ? left : right;
            const Seq& five_away = left_is_two ? right : left_away;
            const Seq& five = left_is_two ? right : left;
            if (pi.size() != 5) return accept(replace_pair(s, v.path_i, v.path_j, {join(two_away), five}));
            return accept(replace_pair(s, v.path_i, v.path_j, {two, join(five_away)}));
        }
        case CoverCondition::B5: {
            // Name the sides so that |P_j'| != 5 and |P_j''| != 8.
            const bool left_prime = left.size() != 5 && right.size() != 8;
            const Seq& prime_away = left_prime ? left_away : right;
            const Seq& second = left_prime ? right : left;
            return accept(replace_pair(s, v.path_i, v.path_j, {join(prime_away), second}));
        }
        case CoverCondition::B6: {
            // Number P_j = v_1 ... v_{3p+2} from z; y = v_{3q}.
            Seq path = pj;
            std::size_t y = v.y_pos, c = v.chord_pos;
            if (!v.z_at_front) {
                std::reverse(path.begin(), path.end());
                y = len - 1 - y;
                c = len - 1 - c;
            }
            const Seq to_x = reversed(pi);  // starts at x
            if (c % 3 == 0) {
                // chord v_1 v_{3r+1}
                Seq p = concat({reversed(slice(path, c, len)), slice(path, 0, y + 1), to_x});
                return accept(replace_pair(s, v.path_i, v.path_j, {p, slice(path, y + 1, c)}));
            }
            if (c % 3 == 1) {
                // chord v_1 v_{3r+2}
                Seq p = concat({slice(path, y + 1, c + 1), slice(path, 0, y + 1), to_x});
                return accept(replace_pair(s, v.path_i, v.path_j, {p, slice(path, c + 1, len)}));
            }
            throw InvariantError("repair B6: chord ends at a (2,2)-vertex");
        }
        case CoverCondition::B7: break;
    }
    throw InvariantError("repair: unhandled condition");
}

void normalize(VdpCover& s) {
    for (auto& p : s.paths)
        if (p.order() > 1 && p.back() < p.front()) std::reverse(p.vertices.begin(), p.vertices.end());
    std::sort(s.paths.begin(), s.paths.end(),
              [](const VdpPath& a, const VdpPath& b) { return a.front() < b.front(); });
}

void check_partition(const VdpCover& s, const Graph& g) {
    VertexSet seen;
    for (const auto& p : s.paths) {
        if (p.vertices.empty()) throw InvariantError("cover: empty path");
        for (std::size_t k = 0; k < p.order(); ++k) {
            if (!g.has_vertex(p.vertices[k])) throw InvariantError("cover: unknown vertex");
            if (!seen.insert(p.vertices[k]).second) throw InvariantError("cover: vertex covered twice");
            if (k > 0 && !g.has_edge(p.vertices[k - 1], p.vertices[k])) throw InvariantError("cover: non-edge in path");
        }
    }
    if (seen.size() != g.num_vertices()) throw InvariantError("cover: vertex left uncovered");
}

std::uint64_t repair_cap(std::size_t n) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t cap = 64;
    for (int i = 0; i < 7; ++i) {
        if (n != 0 && cap > kMax / n) return kMax;
        cap *= n;
    }
    return cap > kMax - 1000 ? kMax : cap + 1000;
}

CoverBuild build_cover_with_stats(const Graph& g) {
    CoverBuild out{initial_cover(g), 0, repair_cap(g.num_vertices())};
    normalize(out.cover);
    while (auto v = find_violation(out.cover, g)) {
        if (++out.repairs > out.cap) throw InvariantError("build_cover: repair cap exceeded");
        out.cover = repair(out.cover, *v, g);
    }
    check_partition(out.cover, g);
    return out;
}

VdpCover build_cover(const Graph& g) { return build_cover_with_stats(g).cover; }

std::string dump_cover(const VdpCover& s) {
    std::ostringstream os;
    for (const auto& p : s.paths) {
        for (std::size_t k = 0; k < p.order(); ++k) os << (k ? " " : "") << p.vertices[k];
        os << '\n';
    }
    return os.str();
}

}  // namespace nbk
