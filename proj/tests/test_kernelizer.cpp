#include <doctest.h>

#include "nbk/io.hpp"
#include "nbk/kernelizer.hpp"
#include "nbk/oracle.hpp"
#include "support.hpp"

using namespace nbk;
using namespace nbk::testing;

namespace {

RuleApplication app(Rule r, std::vector<Vertex> w, bool cycle = false) { return {r, std::move(w), cycle}; }

ReductionTrace single_step(DomSetInstance original, RuleApplication a) {
    auto applied = apply_rule(original, a);
    return ReductionTrace{std::move(original), {{std::move(a), applied.minted}}};
}

}  // namespace

TEST_CASE("find_rule_application") {
    Graph iso = path_graph(3);
    iso.add_vertex();
    CHECK(find_rule_application(iso) == app(Rule::R1, {3}));
    CHECK(find_rule_application(path_graph(4)) == app(Rule::R5, {0, 1, 2, 3}));
    CHECK_FALSE(find_rule_application(generate_named("petersen")));
    CHECK(find_rule_application(cycle_graph(4)) == app(Rule::R4, {0, 1, 2, 3}));
    CHECK(find_rule_application(cycle_graph(3)) == app(Rule::R4, {0, 1, 2}, true));
    CHECK(find_rule_application(path_graph(2)) == app(Rule::R2, {0, 1}));
    Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(find_rule_application(star) == app(Rule::R3, {0, 1, 2, 3}));
}

TEST_CASE("apply_rule examples") {
    auto r1 = apply_rule({Graph(1), 1}, app(Rule::R1, {0})).instance;
    CHECK(r1.graph.empty());
    CHECK(r1.k == 0);

    auto r4 = apply_rule({cycle_graph(4), 2}, app(Rule::R4, {0, 1, 2, 3}));
    CHECK(r4.instance.graph.num_vertices() == 1);
    CHECK(r4.instance.k == 1);
    CHECK(naive_gamma(cycle_graph(4)) == 2);
    CHECK(naive_gamma(r4.instance.graph) == 1);

    auto r5 = apply_rule({path_graph(4), 2}, app(Rule::R5, {0, 1, 2, 3})).instance;
    CHECK(r5.graph.num_vertices() == 3);
    CHECK(r5.graph.num_edges() == 2);
    CHECK(r5.graph.degree(4) == 2);
    CHECK(r5.k == 1);
    CHECK(naive_gamma(path_graph(4)) == 2);
    CHECK(naive_gamma(r5.graph) == 1);

    auto r6 = apply_rule({path_graph(5), 2}, app(Rule::R6, {0, 1, 2, 3, 4})).instance;
    CHECK(r6.graph == from_edges(5, {{0, 1}, {2, 3}, {3, 4}}));
    CHECK(r6.k == 2);
    CHECK(naive_gamma(r6.graph) == 2);
    CHECK(naive_gamma(path_graph(5)) == 2);

    auto r4c = apply_rule({cycle_graph(3), 1}, app(Rule::R4, {0, 1, 2}, true)).instance;
    CHECK(r4c.graph.num_edges() == 1);
    CHECK(r4c.k == 1);
}

TEST_CASE("apply_rule rejects mismatched witnesses") {
    const DomSetInstance p4{path_graph(4), 2};
    CHECK_THROWS_AS(apply_rule(p4, app(Rule::R1, {0})), PreconditionError);
    CHECK_THROWS_AS(apply_rule(p4, app(Rule::R5, {0, 2, 1, 3})), PreconditionError);
    CHECK_THROWS_AS(apply_rule(p4, app(Rule::R5, {0, 1, 2, 9})), PreconditionError);
    CHECK_THROWS_AS(apply_rule(p4, app(Rule::R6, {0, 1, 2, 3, 0})), PreconditionError);
    CHECK_THROWS_AS(apply_rule(p4, app(Rule::R5, {0, 1, 2, 3}, true)), PreconditionError);
    CHECK_THROWS_AS(apply_rule(p4, app(Rule::R3, {1, 0})), PreconditionError);
    CHECK_THROWS_AS(apply_rule({cycle_graph(4), 2}, app(Rule::R4, {0, 1, 2}, true)), PreconditionError);
}

TEST_CASE("reduce") {
    auto [p4, trace] = reduce({path_graph(4), 2});
    CHECK(p4.graph.empty());
    CHECK(p4.k == 0);
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].app.rule == Rule::R5);
    CHECK(trace.steps[1].app.rule == Rule::R3);
    CHECK(trace.steps[2].app.rule == Rule::R2);
    CHECK(replay(trace).graph == p4.graph);

    const Graph petersen = generate_named("petersen");
    auto [same, empty_trace] = reduce({petersen, 3});
    CHECK(same.graph == petersen);
    CHECK(same.k == 3);
    CHECK(empty_trace.steps.empty());

    auto [none, two] = reduce({Graph(2), 2});
    CHECK(none.graph.empty());
    CHECK(none.k == 0);
    CHECK(two.rule_counts()[0] == 2);
}

TEST_CASE("kernelize_nonblocker") {
    auto c4 = kernelize_nonblocker({cycle_graph(4), 2});
    CHECK(c4.decided_yes);
    CHECK(c4.reduced.graph.empty());
    CHECK(c4.reduced.k_nb == 0);

    const Graph petersen = generate_named("petersen");
    auto p7 = kernelize_nonblocker({petersen, 7});
    CHECK_FALSE(p7.decided_yes);
    CHECK(p7.reduced.graph == petersen);
    CHECK(4 * 10 <= 7 * p7.reduced.k_nb);
    CHECK(naive_gamma(petersen) == 10 - 7);

    CHECK(kernelize_nonblocker({petersen, 5}).decided_yes);

    CHECK_THROWS_AS(kernelize_nonblocker({petersen, 11}), PreconditionError);
    CHECK_THROWS_AS(kernelize_nonblocker({petersen, -1}), PreconditionError);

    // Empty graph: YES exactly for k_nb <= 0.
    CHECK(kernelize_nonblocker({Graph{}, 0}).decided_yes);
}

TEST_CASE("lift_solution") {
    auto r6 = single_step({path_graph(5), 2}, app(Rule::R6, {0, 1, 2, 3, 4}));
    CHECK(lift_solution(r6, {1, 3}) == VertexSet{1, 3});

    auto r4 = single_step({cycle_graph(4), 2}, app(Rule::R4, {0, 1, 2, 3}));
    const Vertex w = *r4.steps[0].minted;
    const VertexSet lifted = lift_solution(r4, {w});
    CHECK(lifted == VertexSet{0, 3});
    CHECK(lifted.size() == naive_gamma(cycle_graph(4)));

    auto r5 = single_step({path_graph(4), 2}, app(Rule::R5, {0, 1, 2, 3}));
    CHECK(lift_solution(r5, {*r5.steps[0].minted}) == VertexSet{1, 2});

    CHECK_THROWS_AS(lift_solution(r5, {0}), PreconditionError);
}

TEST_CASE("lift through R4 when the merged vertex is dominated from a degree-1 end") {
    // u-a-b-c-d with d a leaf: putting b alone back would leave d undominated.
    Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}});
    auto trace = single_step({g, 3}, app(Rule::R4, {1, 2, 3, 4}));
    const Vertex w = *trace.steps[0].minted;
    const VertexSet lifted = lift_solution(trace, {0});
    CHECK(is_dominating(g, lifted));
    CHECK(lifted.size() == 2);
    (void)w;
}

TEST_CASE("property: every rule application preserves the answer, n <= 14") {
    std::mt19937_64 rng(21);
    std::size_t applications = 0;
    for (int round = 0; round < 250; ++round) {
        const std::size_t n = 1 + rng() % 14;
        Graph g = gnp(n, 0.05 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
        DomSetInstance inst{g, static_cast<std::int64_t>(rng() % (n + 1))};
        std::size_t size = g.num_vertices() + g.num_edges();
        while (auto a = find_rule_application(inst.graph)) {
            auto next = apply_rule(inst, *a).instance;
            CHECK(check_rule_equivalence(inst, next));
            CHECK(next.k <= inst.k);
            const auto knb_before = static_cast<std::int64_t>(inst.graph.num_vertices()) - inst.k;
            const auto knb_after = static_cast<std::int64_t>(next.graph.num_vertices()) - next.k;
            CHECK(knb_after <= knb_before);
            const std::size_t next_size = next.graph.num_vertices() + next.graph.num_edges();
            CHECK(next_size < size);
            size = next_size;
            inst = std::move(next);
            ++applications;
        }
        CHECK((inst.graph.empty() || reduced_structure_holds(inst.graph)));
        CHECK_FALSE(find_reduced_structure_violation(inst.graph));
    }
    CHECK(applications > 500);
}

TEST_CASE("property: lifted optimum dominates and meets the budget") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 14;
        const Graph g = gnp(n, 0.05 + 0.35 * static_cast<double>(rng() % 100) / 100.0, rng);
        auto [reduced, trace] = reduce({g, static_cast<std::int64_t>(n)});
        const auto kernel = min_dominating_set(reduced.graph);
        const VertexSet lifted = lift_solution(trace, kernel.witness);
        CHECK(is_dominating(g, lifted));
        const auto k_drop = static_cast<std::int64_t>(n) - reduced.k;
        CHECK(static_cast<std::int64_t>(lifted.size()) <= static_cast<std::int64_t>(kernel.gamma) + k_drop);
        CHECK(static_cast<std::int64_t>(trace.k_decreasing_steps()) == k_drop);
        // The kernel optimum lifts to an optimum of the original.
        CHECK(lifted.size() == naive_gamma(g));
    }
}

TEST_CASE("property: undecided kernels satisfy 4n' <= 7k'") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng() % 40;
        const Graph g = gnp(n, 0.02 + 0.3 * static_cast<double>(rng() % 100) / 100.0, rng);
        const auto out = kernelize_nonblocker({g, static_cast<std::int64_t>(rng() % (n + 1))});
        if (!out.decided_yes)
            CHECK(4 * static_cast<std::int64_t>(out.reduced.graph.num_vertices()) <= 7 * out.reduced.k_nb);
    }
}
