#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbk/dominator.hpp"
#include "nbk/harness.hpp"
#include "nbk/io.hpp"
#include "nbk/kernelizer.hpp"
#include "nbk/oracle.hpp"

using namespace nbk;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

VertexSet parse_set(const std::string& text) {
    VertexSet out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) throw PreconditionError("bad vertex '" + tok + "'");
        out.insert(static_cast<Vertex>(v));
    }
    return out;
}

int cmd_kernelize(const std::string& file, std::int64_t k_nb) {
    const Graph g = read_edge_list_file(file);
    if (k_nb < 0 || k_nb > static_cast<std::int64_t>(g.num_vertices()))
        throw PreconditionError("--k must lie in [0, " + std::to_string(g.num_vertices()) + "]");
    BatteryOptions opt;
    opt.oracle_max_n = 0;
    opt.run_constructor = false;
    const RunReport r = run_battery(file, g, k_nb, opt);
    std::cout << to_json(r) << '\n';
    if (!r.decided_yes)
        std::cout << "kernel bound: " << 4 * r.kernel_n << " <= " << 7 * r.kernel_k_nb
                  << (r.kernel_bound_ok ? " holds" : " FAILS") << '\n';
    if (r.failed) std::cerr << "violation: " << r.failure << '\n';
    return r.failed ? kViolation : kOk;
}

int cmd_dominate(const std::string& file, bool reduce_first) {
    Graph g = read_edge_list_file(file);
    std::optional<ReductionTrace> trace;
    if (reduce_first) {
        auto [reduced, t] = reduce(DomSetInstance{g, 0});
        trace = std::move(t);
        g = std::move(reduced.graph);
    }
    auto print_lifted = [&](const VertexSet& d) {
        if (!trace) return;
        const VertexSet lifted = lift_solution(*trace, d);
        std::cout << "lifted D = " << to_string(lifted) << " (|D| = " << lifted.size() << ")\n";
    };
    if (g.empty()) {
        std::cout << "D = {}\n";
        print_lifted({});
        return kOk;
    }
    const Construction c = construct_dominating_set(g);
    std::size_t safe = 0;
    for (const auto& e : c.safety) safe += e.safe ? 1 : 0;
    const bool ok = c.all_safe() && c.ledger.total(c.cover) == 0 && is_dominating(g, c.d) &&
                    7 * c.d.size() <= 3 * g.num_vertices();
    std::cout << "D = " << to_string(c.d) << '\n'
              << "|D| = " << c.d.size() << ", floor(3n/7) = " << 3 * g.num_vertices() / 7 << ", n = "
              << g.num_vertices() << '\n'
              << "safety: " << safe << "/" << c.safety.size() << " paths safe" << (c.all_safe() ? ", all-safe" : "")
              << "; charge total = " << c.ledger.total(c.cover) << '\n';
    print_lifted(c.d);
    return ok ? kOk : kViolation;
}

int cmd_oracle(const std::string& file) {
    const Graph g = read_edge_list_file(file);
    const OracleResult r = min_dominating_set(g);
    std::cout << "gamma = " << r.gamma << "\nwitness = " << to_string(r.witness) << '\n';
    return kOk;
}

int cmd_verify(const std::string& file, const std::string& set) {
    const Graph g = read_edge_list_file(file);
    const VertexSet d = parse_set(set);
    for (Vertex v : d)
        if (!g.has_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
    const auto missed = undominated(g, d);
    if (missed.empty()) {
        std::cout << "OK\n";
        return kOk;
    }
    std::cout << "NOT DOMINATING: undominated " << to_string(VertexSet(missed.begin(), missed.end())) << '\n';
    return kViolation;
}

int cmd_gen(const std::string& spec, const std::string& out) {
    const std::string text = serialize_edge_list(generate(spec));
    if (out.empty() || out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out);
    if (!f) throw PreconditionError("cannot write " + out);
    f << text;
    return kOk;
}

int cmd_fuzz(std::size_t count, std::size_t max_n, std::uint64_t seed, bool no_oracle, unsigned threads) {
    BatteryOptions opt;
    if (no_oracle) opt.oracle_max_n = 0;
    const FuzzSummary s = fuzz(count, max_n, seed, opt, threads);
    nlohmann::json j;
    j["instances"] = s.instances;
    j["failures"] = s.failures;
    for (const auto& r : s.failed) j["failed"].push_back(nlohmann::json::parse(to_json(r, -1)));
    std::cout << j.dump(2) << '\n';
    return s.failures == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonblocker kernelization and 3n/7 dominating sets"};
    app.require_subcommand(1);

    std::string file, set, spec, out;
    std::int64_t k_nb = 0;
    bool reduce_first = false, no_oracle = false;
    std::size_t count = 500, max_n = 14;
    std::uint64_t seed = 1;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    auto* kernelize = app.add_subcommand("kernelize", "Kernelize a Nonblocker instance; prints a JSON report");
    kernelize->add_option("file", file, "edge-list file")->required();
    kernelize->add_option("--k", k_nb, "Nonblocker parameter")->required();

    auto* dominate = app.add_subcommand("dominate", "Dominating set of size at most 3n/7 on a reduced graph");
    dominate->add_option("file", file, "edge-list file")->required();
    dominate->add_flag("--reduce-first", reduce_first, "apply the reduction rules first");

    auto* oracle = app.add_subcommand("oracle", "Exact domination number");
    oracle->add_option("file", file, "edge-list file")->required();

    auto* verify = app.add_subcommand("verify", "Check that a set dominates the graph");
    verify->add_option("file", file, "edge-list file")->required();
    verify->add_option("--set", set, "comma-separated vertex ids")->required();

    auto* gen = app.add_subcommand("gen", "Generate a graph: random:n,m,seed | reduced:n,m,seed | named:<name>");
    gen->add_option("spec", spec, "generator spec")->required();
    gen->add_option("-o,--output", out, "output file (stdout when omitted)");

    auto* fz = app.add_subcommand("fuzz", "Run the invariant battery on random instances");
    fz->add_option("--count", count, "number of instances");
    fz->add_option("--max-n", max_n, "largest vertex count")->check(CLI::PositiveNumber);
    fz->add_option("--seed", seed, "random seed");
    fz->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    fz->add_flag("--no-oracle", no_oracle, "skip the exact oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*kernelize) return cmd_kernelize(file, k_nb);
        if (*dominate) return cmd_dominate(file, reduce_first);
        if (*oracle) return cmd_oracle(file);
        if (*verify) return cmd_verify(file, set);
        if (*gen) return cmd_gen(spec, out);
        if (*fz) return cmd_fuzz(count, max_n, seed, no_oracle, threads);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return kViolation;
    }
    return kUsage;
}
