#include "swcol/lattice.hpp"
#include "swcol/rewire.hpp"
#include "swcol/solver.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace swcol;
using namespace swcol::testing;

TEST_SUITE("solver") {

TEST_CASE("small forced instances") {
    CHECK(solve(complete_graph(4), 3).status == SolveStatus::Uncolourable);
    CHECK(solve(complete_graph(4), 4).status == SolveStatus::Colourable);
    CHECK(solve(cycle_graph(5), 3).status == SolveStatus::Colourable);
    CHECK(solve(cycle_graph(5), 2).status == SolveStatus::Uncolourable);
    CHECK(solve(cycle_graph(6), 2).status == SolveStatus::Colourable);

    Graph lonely(1);
    const SolveOutcome one = solve(lonely, 1);
    CHECK(one.status == SolveStatus::Colourable);
    CHECK(one.nodes_visited == 1);

    Graph pair = path_graph(2);
    CHECK(solve(pair, 1).status == SolveStatus::Uncolourable);
}

TEST_CASE("square lattice at p=0 colours without backtracking") {
    const SolveOutcome outcome = solve(generate({LatticeFamily::Square, 4}), 3);
    CHECK(outcome.status == SolveStatus::Colourable);
    CHECK(outcome.nodes_visited == 16); // one push per vertex, no backtrack

    // the lattice is bipartite (independent check): alternating colouring
    LatticeSpec spec{LatticeFamily::Square, 4};
    Graph g = generate(spec);
    Colouring alternating(16);
    for (std::uint32_t y = 0; y < 4; ++y)
        for (std::uint32_t x = 0; x < 4; ++x)
            alternating.values[node_index(spec, x, y)] = static_cast<std::int32_t>((x + y) % 2);
    CHECK(is_valid_colouring(g, alternating, 2));
}

TEST_CASE("witness is always validated") {
    RandomSource rng(2024);
    for (int round = 0; round < 200; ++round) {
        const auto n = static_cast<std::uint32_t>(2 + rng.uniform_index(9));
        Graph g = random_gnp(n, 0.45, rng);
        const SolveOutcome outcome = solve(g, 3);
        if (outcome.status == SolveStatus::Colourable) {
            REQUIRE(outcome.witness.has_value());
            CHECK(is_valid_colouring(g, *outcome.witness, 3));
            CHECK(outcome.nodes_visited >= n); // at least one push per vertex
        } else {
            CHECK_FALSE(outcome.witness.has_value());
        }
        CHECK(outcome.nodes_visited >= 1);
    }
}

TEST_CASE("agrees with exhaustive enumeration") {
    RandomSource rng(60917);
    for (int round = 0; round < 1000; ++round) {
        const auto n = static_cast<std::uint32_t>(1 + rng.uniform_index(10));
        Graph g = random_gnp(n, 0.2 + 0.6 * rng.uniform_unit(), rng);
        CAPTURE(round);
        REQUIRE((solve(g, 3).status == SolveStatus::Colourable) == brute_force_colourable(g, 3));
    }
}

TEST_CASE("monotone in k") {
    RandomSource rng(31);
    for (int round = 0; round < 100; ++round) {
        Graph g = random_gnp(8, 0.5, rng);
        bool previous = false;
        for (int k = 1; k <= 5; ++k) {
            const bool now = solve(g, k).status == SolveStatus::Colourable;
            if (previous)
                CHECK(now); // colourable at k implies colourable at k+1
            previous = now;
        }
    }
}

TEST_CASE("deterministic node counts") {
    Graph g = generate({LatticeFamily::Cubic5, 4});
    RandomSource rng(8);
    Graph rewired = rewire(g, 0.3, rng).graph;
    const SolveOutcome a = solve(rewired, 3);
    const SolveOutcome b = solve(rewired, 3);
    CHECK(a.status == b.status);
    CHECK(a.nodes_visited == b.nodes_visited);
}

TEST_CASE("budget exhaustion is a status, not an exception") {
    // K4 with k=3 needs 5 nodes to refute; cap below that
    const SolveOutcome capped = solve(complete_graph(4), 3, {std::uint64_t{3}});
    CHECK(capped.status == SolveStatus::BudgetExhausted);
    CHECK(capped.nodes_visited == 3);
    CHECK_FALSE(capped.witness.has_value());

    const SolveOutcome enough = solve(complete_graph(4), 3, {std::uint64_t{5}});
    CHECK(enough.status == SolveStatus::Uncolourable);
    CHECK(enough.nodes_visited == 5);
}

TEST_CASE("first-vertex fixing is reported and does not change decisions") {
    Graph g = cycle_graph(5);
    const SolveOutcome fixed = solve(g, 3);
    const SolveOutcome free = solve(g, 3, {}, false);
    CHECK(fixed.first_vertex_fixed);
    CHECK_FALSE(free.first_vertex_fixed);
    CHECK(fixed.status == free.status);

    RandomSource rng(5150);
    for (int round = 0; round < 200; ++round) {
        Graph random = random_gnp(8, 0.5, rng);
        CHECK(solve(random, 3).status == solve(random, 3, {}, false).status);
    }
}

TEST_CASE("argument validation") {
    Graph g = triangle();
    CHECK_THROWS_AS(solve(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(solve(g, 3, {std::uint64_t{0}}), std::invalid_argument);
}

TEST_CASE("brute force oracle basics") {
    CHECK_FALSE(brute_force_colourable(triangle(), 2));
    CHECK(brute_force_colourable(triangle(), 3));
    CHECK(brute_force_colourable(Graph(5), 1)); // empty graph, one colour
    CHECK_THROWS_AS(brute_force_colourable(Graph(17), 3), std::invalid_argument); // over the guard
}

} // TEST_SUITE
