// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "nbk/dominator.hpp"
#include "nbk/io.hpp"
#include "nbk/kernelizer.hpp"
#include "nbk/oracle.hpp"
#include "nbk/pathcover.hpp"
#include "support.hpp"

using namespace nbk;
using namespace nbk::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Criterion {
public:
    void fail(const std::string& why) {
        if (out_.pass) out_.detail = why;
        out_.pass = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
    void note(const std::string& s) {
        if (out_.pass) out_.detail = s;
    }
    Outcome result() const { return out_; }

private:
    Outcome out_;
};

int report(int number, const std::string& name, double limit_s, const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) c.fail("took " + std::to_string(secs) + " s");
    const Outcome o = c.result();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " (" << o.detail << "; "
              << secs << " s)" << std::endl;
    return o.pass ? 0 : 1;
}

std::string describe(const Graph& g) { return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()); }

/// Random graph with density drawn per instance.
Graph random_instance(std::size_t max_n, std::mt19937_64& rng) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t max_m = n * (n - 1) / 2;
    const double avg = 0.5 + 5.0 * static_cast<double>(rng() % 1000) / 1000.0;
    const std::size_t m = std::min(max_m, static_cast<std::size_t>(avg * static_cast<double>(n) / 2));
    return generate_random(n, m, rng());
}

/// Non-empty reduced graphs with n <= max_n after reduction.
std::vector<Graph> reduced_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        const std::size_t n = 4 + rng() % (max_n - 3);
        const double avg = 1.8 + 2.5 * static_cast<double>(rng() % 1000) / 1000.0;
        const std::size_t m = std::min(n * (n - 1) / 2, static_cast<std::size_t>(avg * static_cast<double>(n) / 2));
        Graph g = generate_reduced(n, m, rng());
        if (!g.empty()) out.push_back(std::move(g));
    }
    return out;
}

struct SmallInstance {
    Graph g;
    std::int64_t k_nb;
};

std::vector<SmallInstance> small_corpus() {
    std::mt19937_64 rng(3003);
    std::vector<SmallInstance> out;
    for (int i = 0; i < 300; ++i) {
        Graph g = random_instance(14, rng);
        const auto k_nb = static_cast<std::int64_t>(rng() % (g.num_vertices() + 1));
        out.push_back({std::move(g), k_nb});
    }
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    const std::vector<Graph> corpus = reduced_corpus(300, 60, 2002);
    const std::vector<SmallInstance> small = small_corpus();

    failures += report(1, "kernel bound 4|V'| <= 7k' on undecided outputs", 10.0, [](Criterion& c) {
        std::mt19937_64 rng(1001);
        std::size_t undecided = 0;
        for (int i = 0; i < 500; ++i) {
            const Graph g = random_instance(40, rng);
            const auto k_nb = static_cast<std::int64_t>(rng() % (g.num_vertices() + 1));
            const KernelOutcome out = kernelize_nonblocker({g, k_nb});
            if (out.decided_yes) continue;
            ++undecided;
            const auto n = static_cast<std::int64_t>(out.reduced.graph.num_vertices());
            c.expect(4 * n <= 7 * out.reduced.k_nb, "bound fails on " + describe(g));
        }
        c.note("500 instances, " + std::to_string(undecided) + " undecided");
    });

    std::vector<Construction> runs;
    failures += report(2, "constructor returns a dominating set of size <= floor(3n/7)", 60.0, [&](Criterion& c) {
        std::size_t largest = 0;
        for (const Graph& g : corpus) {
            largest = std::max(largest, g.num_vertices());
            const VertexSet d = dominating_set_3_7(g);
            c.expect(is_dominating(g, d), "not dominating on " + describe(g));
            c.expect(d.size() <= 3 * g.num_vertices() / 7, "too large on " + describe(g));
            runs.push_back(construct_dominating_set(g));
        }
        c.note(std::to_string(corpus.size()) + " reduced graphs, largest n=" + std::to_string(largest));
    });

    failures += report(3, "every rule application is answer-preserving (oracle)", 0, [&](Criterion& c) {
        std::size_t applications = 0;
        for (const auto& [g, k_nb] : small) {
            DomSetInstance inst{g, static_cast<std::int64_t>(g.num_vertices()) - k_nb};
            while (auto app = find_rule_application(inst.graph)) {
                DomSetInstance next = apply_rule(inst, *app).instance;
                c.expect(check_rule_equivalence(inst, next), to_string(app->rule) + " fails on " + describe(g));
                inst = std::move(next);
                ++applications;
            }
        }
        c.note(std::to_string(applications) + " applications over " + std::to_string(small.size()) + " instances");
    });

    failures += report(4, "kernelizer agrees with the oracle end to end", 0, [&](Criterion& c) {
        std::size_t yes = 0, kernels = 0;
        for (const auto& [g, k_nb] : small) {
            const auto n = static_cast<std::int64_t>(g.num_vertices());
            const bool truth = naive_gamma(g) <= static_cast<std::size_t>(n - k_nb);
            const KernelOutcome out = kernelize_nonblocker({g, k_nb});
            if (out.decided_yes) {
                ++yes;
                c.expect(truth, "YES on a NO instance " + describe(g));
                continue;
            }
            ++kernels;
            const Graph& kg = out.reduced.graph;
            const auto kernel = min_dominating_set(kg);
            const std::int64_t kernel_budget = static_cast<std::int64_t>(kg.num_vertices()) - out.reduced.k_nb;
            const bool kernel_yes = static_cast<std::int64_t>(kernel.gamma) <= kernel_budget;
            c.expect(kernel_yes == truth, "kernel answer differs on " + describe(g));
            const VertexSet lifted = lift_solution(out.trace, kernel.witness);
            c.expect(is_dominating(g, lifted), "lifted set not dominating on " + describe(g));
            if (kernel_yes)
                c.expect(static_cast<std::int64_t>(lifted.size()) <= n - k_nb, "lifted set over budget on " + describe(g));
            c.expect(lifted.size() == naive_gamma(g), "lifted optimum is not optimal on " + describe(g));
        }
        c.note(std::to_string(yes) + " decided YES, " + std::to_string(kernels) + " kernels lifted");
    });

    failures += report(5, "charge conservation, exact sevenths", 0, [&](Criterion& c) {
        for (const Construction& r : runs) c.expect(r.ledger.total(r.cover) == 0, "nonzero total");
        c.note(std::to_string(runs.size()) + " constructor runs");
    });

    failures += report(6, "every path is safe", 0, [&](Criterion& c) {
        std::size_t paths = 0;
        for (const Construction& r : runs)
            for (const SafetyEntry& e : r.safety) {
                ++paths;
                c.expect(e.safe && e.dominated && e.contains_marked && e.seven_times_cost <= e.seven_times_budget,
                         "unsafe path");
            }
        c.note(std::to_string(paths) + " paths");
    });

    failures += report(7, "cover conditions, strict potential decrease, repair cap", 0, [&](Criterion& c) {
        std::uint64_t repairs = 0;
        for (const Graph& g : corpus) {
            VdpCover s = initial_cover(g);
            Potential phi = potential(s, g);
            std::uint64_t steps = 0;
            const std::uint64_t cap = repair_cap(g.num_vertices());
            while (auto v = find_violation(s, g)) {
                s = repair(s, *v, g);
                const Potential next = potential(s, g);
                c.expect(next < phi, "potential did not decrease");
                phi = next;
                if (++steps > cap) {
                    c.fail("repair cap exceeded");
                    break;
                }
            }
            repairs += steps;
            const CoverBuild built = build_cover_with_stats(g);
            c.expect(!find_violation(built.cover, g), "build_cover output violates a condition");
            c.expect(built.repairs <= built.cap, "build_cover exceeded its cap");
        }
        c.note(std::to_string(repairs) + " repairs");
    });

    failures += report(8, "reduced outputs: no isolated vertex, 1-vertices >= 5 apart, 2-vertices >= 2 apart", 0,
                       [&](Criterion& c) {
                           std::mt19937_64 rng(8008);
                           for (int i = 0; i < 500; ++i) {
                               const Graph g = random_instance(40, rng);
                               auto [reduced, _] = reduce({g, 0});
                               c.expect(reduced.graph.empty() || reduced_structure_holds(reduced.graph),
                                        "audit fails on " + describe(g));
                           }
                           for (const auto& [g, k_nb] : small) {
                               auto [reduced, _] = reduce({g, 0});
                               c.expect(reduced.graph.empty() || reduced_structure_holds(reduced.graph),
                                        "audit fails on " + describe(g));
                           }
                           c.note("800 reductions");
                       });

    failures += report(9, "named instances", 0, [](Criterion& c) {
        const Graph petersen = generate_named("petersen");
        const KernelOutcome p7 = kernelize_nonblocker({petersen, 7});
        c.expect(!p7.decided_yes, "Petersen k_nb=7 decided");
        c.expect(4 * p7.reduced.graph.num_vertices() == 40 && 7 * p7.reduced.k_nb == 49, "Petersen kernel sizes");
        const VertexSet dp = dominating_set_3_7(petersen);
        c.expect(dp.size() <= 4 && is_dominating(petersen, dp), "Petersen constructor");
        c.expect(naive_gamma(petersen) == 3 && min_dominating_set(petersen).gamma == 3, "Petersen gamma");

        const Graph k4 = generate_named("k4");
        c.expect(dominating_set_3_7(k4).size() == 1, "K4 constructor");

        const Graph pendant = generate_named("k4_pendant");
        const VertexSet dk = dominating_set_3_7(pendant);
        c.expect(dk.size() <= 2 && is_dominating(pendant, dk), "K4+pendant constructor");
        c.expect(naive_gamma(pendant) == 1 && min_dominating_set(pendant).gamma == 1, "K4+pendant gamma");

        std::ostringstream os;
        os << "Petersen |D|=" << dp.size() << ", K4 |D|=1, K4+pendant |D|=" << dk.size();
        c.note(os.str());
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
