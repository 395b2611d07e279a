#include <doctest.h>

#include "nbk/io.hpp"
#include "nbk/kernelizer.hpp"
#include "nbk/oracle.hpp"
#include "support.hpp"

using namespace nbk;
using namespace nbk::testing;

TEST_CASE("min_dominating_set on small named graphs") {
    CHECK(min_dominating_set(Graph(1)).gamma == 1);
    CHECK(min_dominating_set(cycle_graph(4)).gamma == naive_gamma(cycle_graph(4)));
    CHECK(naive_gamma(cycle_graph(4)) == 2);
    const Graph petersen = generate_named("petersen");
    const auto r = min_dominating_set(petersen);
    CHECK(r.gamma == naive_gamma(petersen));
    CHECK(r.gamma == 3);
    CHECK(is_dominating(petersen, r.witness));
    CHECK(min_dominating_set(Graph{}).gamma == 0);
}

TEST_CASE("oracle cap") {
    CHECK_THROWS_AS(min_dominating_set(Graph(kOracleVertexCap + 1)), PreconditionError);
    CHECK_THROWS_AS(min_dominating_set_exhaustive(Graph(17)), PreconditionError);
}

TEST_CASE("has_dominating_set_of_size") {
    CHECK(has_dominating_set_of_size(Graph{}, 0));
    CHECK_FALSE(has_dominating_set_of_size(Graph{}, -1));
    CHECK_FALSE(has_dominating_set_of_size(cycle_graph(4), 1));
    CHECK(has_dominating_set_of_size(cycle_graph(4), 2));
}

TEST_CASE("check_rule_equivalence") {
    CHECK(check_rule_equivalence({path_graph(4), 2}, {path_graph(3), 1}));
    CHECK(check_rule_equivalence({cycle_graph(4), 2}, {Graph(1), 1}));
    // Deleting a vertex of C4 without touching k is not a rule: the answers
    // differ at k = 1.
    CHECK_FALSE(check_rule_equivalence({cycle_graph(4), 1}, {path_graph(3), 1}));
}

TEST_CASE("property: branch and bound agrees with both enumerations for n <= 8") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 600; ++round) {
        const std::size_t n = 1 + rng() % 8;
        const Graph g = gnp(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
        const auto bb = min_dominating_set(g);
        const auto ex = min_dominating_set_exhaustive(g);
        CHECK(bb.gamma == ex.gamma);
        CHECK(bb.gamma == naive_gamma(g));
        CHECK(is_dominating(g, bb.witness));
        CHECK(bb.witness.size() == bb.gamma);
        CHECK(is_dominating(g, ex.witness));
    }
}

TEST_CASE("property: branch and bound agrees with the exhaustive search up to n = 16") {
    std::mt19937_64 rng(6);
    for (int round = 0; round < 60; ++round) {
        const Graph g = gnp(9 + rng() % 8, 0.15 + 0.3 * static_cast<double>(rng() % 100) / 100.0, rng);
        CHECK(min_dominating_set(g).gamma == min_dominating_set_exhaustive(g).gamma);
    }
}
