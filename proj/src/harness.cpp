#include "nbk/harness.hpp"

#include <chrono>
#include <random>
#include <thread>

#include "nbk/dominator.hpp"
#include "nbk/kernelizer.hpp"
#include "nbk/oracle.hpp"
#include "nbk/pathcover.hpp"

namespace nbk {
namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

void check_oracle(const Graph& g, std::int64_t k_nb, const KernelOutcome& out) {
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    DomSetInstance inst = out.trace.original;
    for (const auto& step : out.trace.steps) {
        DomSetInstance next = apply_rule(inst, step.app).instance;
        expect(check_rule_equivalence(inst, next), "rule " + to_string(step.app.rule) + " changed the answer");
        inst = std::move(next);
    }

    const bool truth = has_dominating_set_of_size(g, n - k_nb);
    if (out.decided_yes) {
        expect(truth, "kernelizer answered YES on a NO instance");
        return;
    }
    const Graph& kg = out.reduced.graph;
    const auto kn = static_cast<std::int64_t>(kg.num_vertices());
    const auto kernel = min_dominating_set(kg);
    const bool kernel_yes = static_cast<std::int64_t>(kernel.gamma) <= kn - out.reduced.k_nb;
    expect(kernel_yes == truth, "kernel answer differs from the original");
    const VertexSet lifted = lift_solution(out.trace, kernel.witness);
    expect(is_dominating(g, lifted), "lifted set does not dominate");
    const std::int64_t budget = static_cast<std::int64_t>(kernel.gamma) + (n - k_nb) - (kn - out.reduced.k_nb);
    expect(static_cast<std::int64_t>(lifted.size()) <= budget, "lifted set exceeds its budget");
}

void check_constructor(const Graph& kg, RunReport& r) {
    const CoverBuild built = build_cover_with_stats(kg);
    expect(!find_violation(built.cover, kg), "cover has a failing condition");
    expect(built.repairs <= built.cap, "cover repairs exceed the cap");
    const Construction c = construct_dominating_set(kg);
    expect(c.ledger.total(c.cover) == 0, "charges do not sum to zero");
    expect(c.all_safe(), "a path is not safe");
    expect(is_dominating(kg, c.d), "constructor set does not dominate");
    r.constructor_size = c.d.size();
    r.constructor_bound = 3 * kg.num_vertices() / 7;
    expect(c.d.size() <= *r.constructor_bound, "constructor set exceeds floor(3n/7)");
    if (kg.num_vertices() <= kOracleVertexCap) r.oracle_gamma = min_dominating_set(kg).gamma;
}

}  // namespace

RunReport run_battery(const std::string& id, const Graph& g, std::int64_t k_nb, const BatteryOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.instance_id = id;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.k_nb = k_nb;
    try {
        const KernelOutcome out = kernelize_nonblocker(NonblockerInstance{g, k_nb});
        const Graph& kg = out.reduced.graph;
        r.decided_yes = out.decided_yes;
        r.kernel_n = kg.num_vertices();
        r.kernel_m = kg.num_edges();
        r.kernel_k_nb = out.reduced.k_nb;
        r.rule_counts = out.trace.rule_counts();
        if (auto bad = find_reduced_structure_violation(kg))
            throw Failure{"reduced graph fails the structure audit at " + std::to_string(bad->first) + "," +
                          std::to_string(bad->second)};
        r.kernel_bound_ok = out.decided_yes || 4 * static_cast<std::int64_t>(r.kernel_n) <= 7 * r.kernel_k_nb;
        expect(r.kernel_bound_ok, "kernel bound 4n' <= 7k' violated");
        expect(replay(out.trace).graph == kg, "replay differs from the reduction");
        if (opt.oracle_max_n && r.n <= opt.oracle_max_n) check_oracle(g, k_nb, out);
        if (opt.run_constructor && !kg.empty()) check_constructor(kg, r);
    } catch (const Failure& f) {
        r.failed = true;
        r.failure = f.what;
    } catch (const std::exception& e) {
        r.failed = true;
        r.failure = e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

FuzzSummary fuzz(std::size_t count, std::size_t max_n, std::uint64_t seed, const BatteryOptions& opt,
                 unsigned threads) {
    if (max_n == 0) throw PreconditionError("fuzz: max-n must be positive");
    struct Job {
        Graph g;
        std::int64_t k_nb;
        std::string id;
    };
    // Instances are drawn up front so the outcome does not depend on threads.
    std::mt19937_64 rng(seed);
    std::vector<Job> jobs;
    jobs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng() % max_n;
        const std::size_t max_m = n * (n - 1) / 2;
        const std::size_t m = max_m == 0 ? 0 : rng() % (max_m + 1);
        const std::uint64_t s = rng();
        const auto k_nb = static_cast<std::int64_t>(rng() % (n + 1));
        jobs.push_back({generate_random(n, m, s), k_nb,
                        "random:" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(s) +
                            " k_nb=" + std::to_string(k_nb)});
    }

    std::vector<RunReport> reports(count);
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads)
                reports[i] = run_battery(jobs[i].id, jobs[i].g, jobs[i].k_nb, opt);
        });
    for (auto& th : pool) th.join();

    FuzzSummary summary;
    summary.instances = count;
    for (auto& r : reports)
        if (r.failed) {
            ++summary.failures;
            summary.failed.push_back(std::move(r));
        }
    return summary;
}

}  // namespace nbk
