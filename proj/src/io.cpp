#include "nbk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nbk/kernelizer.hpp"

namespace nbk {
namespace {

[[noreturn]] void reject(std::size_t line, const std::string& what) {
    throw PreconditionError("line " + std::to_string(line) + ": " + what);
}

/// Reads exactly two unsigned integers separated by whitespace.
std::optional<std::pair<std::uint64_t, std::uint64_t>> two_numbers(std::string_view s) {
    std::uint64_t out[2];
    const char* p = s.data();
    const char* end = s.data() + s.size();
    for (auto& x : out) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        auto [next, ec] = std::from_chars(p, end, x);
        if (ec != std::errc{}) return std::nullopt;
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p != end) return std::nullopt;
    return std::make_pair(out[0], out[1]);
}

bool skippable(std::string_view s) {
    auto pos = s.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || s[pos] == '#';
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::size_t> parse_numbers(std::string_view s) {
    std::vector<std::size_t> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw PreconditionError("generate: bad number '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && skippable(lines[i])) ++i;
    if (i == lines.size()) reject(i, "missing header \"n m\"");
    auto header = two_numbers(lines[i]);
    if (!header) reject(i + 1, "malformed header, expected \"n m\"");
    const auto [n, m] = *header;
    if (n > (std::uint64_t{1} << 31)) reject(i + 1, "vertex count too large");
    Graph g(static_cast<std::size_t>(n));
    std::uint64_t seen = 0;
    for (++i; i < lines.size(); ++i) {
        if (skippable(lines[i])) continue;
        auto e = two_numbers(lines[i]);
        if (!e) reject(i + 1, "malformed edge line, expected \"u v\"");
        auto [u, v] = *e;
        if (u >= n || v >= n) reject(i + 1, "vertex index out of range");
        if (u >= v) reject(i + 1, "edge must satisfy u < v");
        if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) reject(i + 1, "duplicate edge");
        if (++seen > m) reject(i + 1, "more edges than the header declares");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (seen != m) reject(lines.size(), "header declares " + std::to_string(m) + " edges, found " +
                                            std::to_string(seen));
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    const Graph c = relabel_compact(g);
    std::ostringstream os;
    os << c.num_vertices() << ' ' << c.num_edges() << '\n';
    for (auto [u, v] : c.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

Graph generate_random(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::size_t max_m = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > max_m)
        throw PreconditionError("generate: " + std::to_string(m) + " edges exceed n(n-1)/2 = " +
                                std::to_string(max_m));
    std::mt19937_64 rng(seed);
    Graph g(n);
    if (2 * m > max_m) {
        // Dense: shuffle all pairs and take a prefix.
        std::vector<std::pair<Vertex, Vertex>> all;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        for (std::size_t i = 0; i < m; ++i) g.add_edge(all[i].first, all[i].second);
        return g;
    }
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    while (g.num_edges() < m) {
        Vertex u = pick(rng), v = pick(rng);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

Graph generate_reduced(std::size_t n, std::size_t m, std::uint64_t seed) {
    auto [reduced, _] = reduce(DomSetInstance{generate_random(n, m, seed), 0});
    return relabel_compact(reduced.graph);
}

Graph generate_named(std::string_view name) {
    Graph g;
    if (name == "petersen") {
        g = Graph(10);
        for (Vertex i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, (i + 2) % 5 + 5);
        }
    } else if (name == "k4" || name == "k4_pendant") {
        g = Graph(name == "k4" ? 4 : 5);
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
        if (name == "k4_pendant") g.add_edge(0, 4);
    } else if (name == "weak_gadget" || name == "weak_gadget_switch") {
        // Order-8 path 0..7 whose only neighbor 8 touches it at 2 and 5, plus
        // a triangle 9-10-11 that supplies the forced vertex.
        g = Graph(12);
        for (Vertex i = 0; i + 1 < 8; ++i) g.add_edge(i, i + 1);
        g.add_edge(8, 2);
        g.add_edge(8, 5);
        g.add_edge(0, 5);
        g.add_edge(2, 7);
        g.add_edge(3, 6);
        g.add_edge(9, 10);
        g.add_edge(9, 11);
        g.add_edge(10, 11);
        if (name == "weak_gadget") {
            g.add_edge(1, 4);
            g.add_edge(9, 4);
        } else {
            // 4 keeps degree 2, so the acceptor has to move from 2 to 5.
            g.add_edge(1, 6);
        }
        g.add_edge(10, 3);
        g.add_edge(11, 6);
    } else {
        throw PreconditionError("generate: unknown named graph '" + std::string(name) + "'");
    }
    return g;
}

Graph generate(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw PreconditionError("generate: expected kind:args");
    auto kind = spec.substr(0, colon);
    auto args = spec.substr(colon + 1);
    if (kind == "named") return generate_named(args);
    if (kind != "random" && kind != "reduced")
        throw PreconditionError("generate: unknown kind '" + std::string(kind) + "'");
    auto nums = parse_numbers(args);
    if (nums.size() != 3) throw PreconditionError("generate: expected n,m,seed");
    return kind == "random" ? generate_random(nums[0], nums[1], nums[2]) : generate_reduced(nums[0], nums[1], nums[2]);
}

std::string to_json(const RunReport& r, int indent) {
    nlohmann::json j;
    j["instance_id"] = r.instance_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k_nb"] = r.k_nb;
    if (r.decided_yes) {
        j["outcome"] = "YES";
    } else {
        j["outcome"] = {{"kernel_n", r.kernel_n}, {"kernel_m", r.kernel_m}, {"kernel_k_nb", r.kernel_k_nb}};
    }
    nlohmann::json counts;
    for (std::size_t i = 0; i < r.rule_counts.size(); ++i) counts["R" + std::to_string(i + 1)] = r.rule_counts[i];
    j["rule_counts"] = counts;
    j["kernel_bound"] = {{"lhs_4n", 4 * static_cast<std::int64_t>(r.kernel_n)},
                         {"rhs_7k", 7 * r.kernel_k_nb},
                         {"ok", r.kernel_bound_ok}};
    if (r.constructor_size) {
        j["constructor"] = {{"size", *r.constructor_size}, {"bound", *r.constructor_bound}};
        if (r.oracle_gamma) j["constructor"]["oracle_gamma"] = *r.oracle_gamma;
    }
    j["wall_ms"] = r.wall_ms;
    j["failed"] = r.failed;
    if (r.failed) j["failure"] = r.failure;
    return j.dump(indent);
}

}  // namespace nbk
