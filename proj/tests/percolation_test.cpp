#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "twocore/generators.hpp"
#include "twocore/percolation.hpp"

using namespace twocore;
using namespace twocore::testing;

TEST_SUITE_BEGIN("percolation");

TEST_CASE("p = 1 keeps every edge, p = 0 keeps none") {
    Graph g = erdos_renyi(300, 5.0, 3);
    PercolationCoupling c = draw_coupling(g, 42);
    CHECK(percolate_at(c, 1.0).edges() == g.edges());
    CHECK(percolate_at(c, 0.0).edge_count() == 0);
    CHECK(percolate_at(c, 0.0).vertex_count() == g.vertex_count());
}

TEST_CASE("one coupling gives nested subgraphs across p") {
    Graph g = complete_graph(12);
    PercolationCoupling c = draw_coupling(g, 9);
    std::vector<double> grid = {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Graph low = percolate_at(c, grid[i]);
        Graph high = percolate_at(c, grid[i + 1]);
        std::set<std::pair<VertexId, VertexId>> high_set(high.edges().begin(),
                                                         high.edges().end());
        for (const auto& e : low.edges()) CHECK(high_set.count(e) == 1);
    }
}

TEST_CASE("edge weights are uniform on average") {
    Graph g = complete_graph(4);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 100000; ++seed) {
        PercolationCoupling c = draw_coupling(g, seed);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            sum += c.weight(i);
            ++count;
        }
    }
    CHECK(std::abs(sum / count - 0.5) < 0.005);
}

TEST_CASE("percolation keeps each edge with probability p") {
    Graph g = erdos_renyi(100000, 4.0, 17);
    PercolationCoupling c = draw_coupling(g, 23);
    const double p = 0.37;
    Graph sub = percolate_at(c, p);
    const double frac = static_cast<double>(sub.edge_count()) / g.edge_count();
    const double sigma = std::sqrt(p * (1 - p) / g.edge_count());
    CHECK(std::abs(frac - p) < 5 * sigma);
}

TEST_CASE("sprinkling marginals equal the higher percolation level") {
    Graph g = complete_graph(100);
    PercolationCoupling c = draw_coupling(g, 5);
    const double p_low = 0.3;
    const double p_high = 0.65;

    // An edge closed at p_low reopens with probability beta = 0.5 here.
    Graph low = percolate_at(c, p_low);
    std::set<std::pair<VertexId, VertexId>> low_set(low.edges().begin(), low.edges().end());
    std::size_t probe = 0;
    while (low_set.count(g.edges()[probe]) == 1) ++probe;

    std::size_t trials = 2000;
    std::size_t probe_hits = 0;
    double total_frac = 0.0;
    for (std::uint64_t aux = 0; aux < trials; ++aux) {
        Graph s = sprinkle(c, p_low, p_high, aux);
        std::set<std::pair<VertexId, VertexId>> s_set(s.edges().begin(), s.edges().end());
        // The low layer always survives into the sprinkled graph.
        for (const auto& e : low.edges()) REQUIRE(s_set.count(e) == 1);
        probe_hits += s_set.count(g.edges()[probe]);
        total_frac += static_cast<double>(s.edge_count()) / g.edge_count();
    }
    const double beta = 1.0 - (1.0 - p_high) / (1.0 - p_low);
    CHECK(std::abs(static_cast<double>(probe_hits) / trials - beta) <
          5 * std::sqrt(beta * (1 - beta) / trials));
    CHECK(std::abs(total_frac / trials - p_high) < 0.01);
}

TEST_CASE("sprinkling to p_high = 1 restores the full base graph") {
    Graph g = erdos_renyi(500, 3.0, 31);
    PercolationCoupling c = draw_coupling(g, 8);
    Graph s = sprinkle(c, 0.4, 1.0, 77);
    CHECK(s.edges() == g.edges());
}

TEST_CASE("percolation validates its arguments") {
    Graph g = complete_graph(4);
    PercolationCoupling c = draw_coupling(g, 1);
    CHECK_THROWS_AS(percolate_at(c, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(percolate_at(c, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(sprinkle(c, 0.5, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(sprinkle(c, 0.7, 0.3, 0), std::invalid_argument);
    CHECK_THROWS_AS(sprinkle(c, 0.3, 1.2, 0), std::invalid_argument);
    CHECK_THROWS_AS(sprinkle(c, -0.1, 0.5, 0), std::invalid_argument);
}

TEST_CASE("percolation is a pure function of coupling and p") {
    Graph g = erdos_renyi(200, 4.0, 12);
    PercolationCoupling c1 = draw_coupling(g, 99);
    PercolationCoupling c2 = draw_coupling(g, 99);
    CHECK(percolate_at(c1, 0.6).edges() == percolate_at(c2, 0.6).edges());
    PercolationCoupling c3 = draw_coupling(g, 100);
    CHECK(percolate_at(c1, 0.6).edges() != percolate_at(c3, 0.6).edges());
}

TEST_SUITE_END();
