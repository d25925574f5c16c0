#include "swcol/lattice.hpp"
#include "swcol/rewire.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace swcol;
using namespace swcol::testing;

TEST_SUITE("rewire") {

TEST_CASE("p=0 is the identity on edge sets") {
    for (const LatticeSpec spec : {LatticeSpec{LatticeFamily::Square, 4}, LatticeSpec{LatticeFamily::Cubic5, 4}}) {
        Graph g = generate(spec);
        RandomSource rng(3);
        RewireResult result = rewire(g, 0.0, rng);
        CHECK(result.rewired == 0);
        CHECK(result.skipped == 0);
        CHECK(result.graph.edges() == g.edges());
    }
}

TEST_CASE("p=1 conserves edge count and simplicity") {
    Graph g = generate({LatticeFamily::Square, 4});
    RandomSource rng(17);
    RewireResult result = rewire(g, 1.0, rng);
    CHECK(result.graph.edge_count() == 32);
    result.graph.check_invariants(); // no self-loops, no duplicates
    CHECK(result.rewired + result.skipped == 32);
}

TEST_CASE("degree sum is conserved while individual degrees move") {
    Graph g = generate({LatticeFamily::Triangular, 6});
    RandomSource rng(23);
    RewireResult result = rewire(g, 0.8, rng);
    std::uint64_t degree_sum = 0;
    bool any_changed = false;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        degree_sum += result.graph.degree(v);
        any_changed = any_changed || result.graph.degree(v) != g.degree(v);
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(any_changed);
}

TEST_CASE("rewired count tracks the binomial mean") {
    // square L=6: M = 72, p = 0.5; over 10k seeds the mean rewired count
    // must land within 3 standard errors of pM = 36.
    Graph g = generate({LatticeFamily::Square, 6});
    const int runs = 10000;
    double total = 0;
    std::uint64_t skips = 0;
    for (int s = 0; s < runs; ++s) {
        RandomSource rng = derive_trial_rng(4242, static_cast<std::uint64_t>(s));
        RewireResult result = rewire(g, 0.5, rng);
        total += static_cast<double>(result.rewired);
        skips += result.skipped;
    }
    const double mean = total / runs;
    const double se = std::sqrt(72.0 * 0.25) / std::sqrt(static_cast<double>(runs));
    CHECK(std::abs(mean - 36.0) <= 3.0 * se);
    CHECK(skips == 0);
}

TEST_CASE("selected edge with no legal endpoint is skipped unchanged") {
    // complete graph: every endpoint is adjacent to every other node, so no
    // shortcut can ever be placed
    Graph k4 = complete_graph(4);
    RandomSource rng(9);
    RewireResult result = rewire(k4, 1.0, rng);
    CHECK(result.rewired == 0);
    CHECK(result.skipped == 6);
    CHECK(result.graph.edges() == k4.edges());
}

TEST_CASE("deterministic given the seed") {
    Graph g = generate({LatticeFamily::Cubic6, 3});
    RewireParams params{0.4, 999, RngAlgorithm::Default};
    CHECK(rewire(g, params).graph.edges() == rewire(g, params).graph.edges());

    params.rng = RngAlgorithm::MitchellMoore;
    RewireResult mm = rewire(g, params);
    CHECK(mm.graph.edge_count() == g.edge_count());
    mm.graph.check_invariants();
}

TEST_CASE("property: conservation and simplicity across families and p") {
    const LatticeSpec specs[] = {{LatticeFamily::Square, 5},
                                 {LatticeFamily::Triangular, 6},
                                 {LatticeFamily::Cubic6, 3},
                                 {LatticeFamily::Cubic5, 4}};
    std::uint64_t seed = 0;
    for (const auto& spec : specs) {
        Graph g = generate(spec);
        for (double p : {0.05, 0.3, 0.7, 1.0}) {
            for (int s = 0; s < 25; ++s) {
                RandomSource rng = derive_trial_rng(1000, seed++);
                RewireResult result = rewire(g, p, rng);
                REQUIRE(result.graph.edge_count() == g.edge_count());
                result.graph.check_invariants();
            }
        }
    }
}

TEST_CASE("rewire rejects bad input") {
    Graph tiny(2);
    tiny.add_edge(0, 1);
    RandomSource rng(1);
    CHECK_THROWS_AS(rewire(tiny, 0.5, rng), std::invalid_argument);
    Graph g = generate({LatticeFamily::Square, 4});
    CHECK_THROWS_AS(rewire(g, 1.5, rng), std::invalid_argument);
}

TEST_CASE("random_graph forced cases") {
    RandomSource rng(55);
    Graph k4 = random_graph(4, 6, rng);
    CHECK(k4.edge_count() == 6);
    for (std::uint32_t v = 0; v < 4; ++v)
        CHECK(k4.degree(v) == 3);

    Graph empty = random_graph(10, 0, rng);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(random_graph(4, 7, rng), std::invalid_argument);
}

TEST_CASE("random_graph matches the hypergeometric degree law") {
    // G(36, 72): the degree of a fixed node is hypergeometric with
    // P = 630 pairs, K = 35 incident, m = 72 draws -> mean 4, and
    // pmf(4) computable in closed form. 1000 independent graphs.
    const int runs = 1000;
    const double P = 630, K = 35, m = 72;
    const double var = m * (K / P) * (1.0 - K / P) * ((P - m) / (P - 1.0));

    double sum = 0;
    int deg4 = 0;
    for (int s = 0; s < runs; ++s) {
        RandomSource rng = derive_trial_rng(7777, static_cast<std::uint64_t>(s));
        Graph g = random_graph(36, 72, rng);
        REQUIRE(g.edge_count() == 72);
        CHECK(g.mean_degree() == Ratio{4, 1}); // exact by construction
        sum += g.degree(0);
        deg4 += g.degree(0) == 4 ? 1 : 0;
    }
    const double mean = sum / runs;
    CHECK(std::abs(mean - 4.0) <= 3.0 * std::sqrt(var / runs));

    // exact hypergeometric pmf at 4 via log-gammas
    auto lchoose = [](double n, double k) {
        return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
    };
    const double pmf4 = std::exp(lchoose(35, 4) + lchoose(595, 68) - lchoose(630, 72));
    const double freq = static_cast<double>(deg4) / runs;
    CHECK(std::abs(freq - pmf4) <= 3.0 * std::sqrt(pmf4 * (1.0 - pmf4) / runs));
}

TEST_CASE("random_graph is deterministic per seed") {
    RandomSource a(31415), b(31415);
    CHECK(random_graph(20, 50, a).edges() == random_graph(20, 50, b).edges());
}

} // TEST_SUITE
