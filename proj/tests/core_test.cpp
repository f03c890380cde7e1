#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "twocore/core.hpp"
#include "twocore/generators.hpp"
#include "twocore/rng.hpp"

using namespace twocore;
using namespace twocore::testing;

namespace {

Graph random_small_graph(std::uint64_t seed, std::size_t max_n) {
    rng::Engine eng(seed);
    const std::size_t n = 2 + eng.below(max_n - 1);
    const double target = 0.5 + 2.5 * eng.unit();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (eng.unit() < target / n) edges.push_back({u, v});
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("coreness on fixed shapes") {
    Graph tree = make_graph(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    auto k = coreness(tree);
    CHECK(k == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 0});

    CHECK(coreness(complete_graph(4)) == std::vector<std::uint32_t>(4, 3));
    CHECK(coreness(cycle_graph(7)) == std::vector<std::uint32_t>(7, 2));

    // Triangle with a pendant path: the tail stays at 1.
    Graph lollipop = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    CHECK(coreness(lollipop) == std::vector<std::uint32_t>{2, 2, 2, 1, 1});
}

TEST_CASE("coreness matches subset enumeration on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_small_graph(seed, 10);
        CAPTURE(seed);
        CHECK(coreness(g) == brute_force_coreness(g));
    }
}

TEST_CASE("coreness matches subset enumeration on G(12, c=3)") {
    Graph g = erdos_renyi(12, 3.0, 4242);
    CHECK(coreness(g) == brute_force_coreness(g));
}

TEST_CASE("two_core on fixed shapes") {
    SUBCASE("cycle keeps everything") {
        CoreResult core = two_core(cycle_graph(9));
        CHECK(core.two_core_size == 9);
        CHECK(core.core_component_sizes == std::vector<std::size_t>{9});
        CHECK(core.frac_c2 == doctest::Approx(1.0));
        CHECK(core.frac_c2max == doctest::Approx(1.0));
        CHECK(core.frac_cmax == doctest::Approx(1.0));
    }
    SUBCASE("lollipop peels its tail") {
        Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
        CoreResult core = two_core(g);
        CHECK(core.in_two_core == std::vector<std::uint8_t>{1, 1, 1, 0, 0});
        CHECK(core.two_core_size == 3);
        CHECK(core.frac_c2 == doctest::Approx(0.6));
        CHECK(core.core_component[3] == kUnreachable);
        CHECK(core.core_component[0] == 0);
    }
    SUBCASE("forests peel to nothing") {
        Graph g = make_graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
        CoreResult core = two_core(g);
        CHECK(core.two_core_size == 0);
        CHECK(core.frac_c2 == 0.0);
        CHECK(core.frac_c2max == 0.0);
        CHECK(core.frac_cmax == doctest::Approx(3.0 / 7));
    }
    SUBCASE("two disjoint triangles give two core components") {
        Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        CoreResult core = two_core(g);
        CHECK(core.core_component_sizes == std::vector<std::size_t>{3, 3});
        CHECK(core.frac_c2max == doctest::Approx(3.0 / 7));
    }
}

TEST_CASE("two_core agrees with coreness and is a fixed point") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_small_graph(seed + 900, 60);
        CoreResult core = two_core(g);
        auto k = coreness(g);
        std::vector<VertexId> members;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(static_cast<bool>(core.in_two_core[v]) == (k[v] >= 2));
            if (core.in_two_core[v]) members.push_back(v);
        }

        InducedSubgraph sub = induced_subgraph(g, members);
        CoreResult again = two_core(sub.graph);
        CHECK(again.two_core_size == members.size());
        for (VertexId v = 0; v < sub.graph.vertex_count(); ++v) {
            CHECK(sub.graph.degree(v) >= 2);
        }

        // Maximality: no peeled vertex survives a re-peel after rejoining.
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (core.in_two_core[v]) continue;
            std::vector<VertexId> plus = members;
            plus.push_back(v);
            std::sort(plus.begin(), plus.end());
            InducedSubgraph ext = induced_subgraph(g, plus);
            CoreResult repeeled = two_core(ext.graph);
            CHECK(repeeled.two_core_size == members.size());
        }
    }
}

TEST_CASE("c2_ell_set on cycles and paths") {
    Graph c100 = cycle_graph(100);
    auto in_c = c2_ell_set(c100, 5);
    CHECK(std::count(in_c.begin(), in_c.end(), 1) == 100);

    Graph p100 = path_graph(100);
    auto in_p = c2_ell_set(p100, 5);
    // Within distance 5 of an end the protected peel eats the whole prefix.
    CHECK(std::count(in_p.begin(), in_p.end(), 1) == 90);
    CHECK(in_p[0] == 0);
    CHECK(in_p[4] == 0);
    CHECK(in_p[5] == 1);
    CHECK(in_p[50] == 1);
    CHECK(in_p[94] == 1);
    CHECK(in_p[95] == 0);

    CHECK_THROWS_AS(c2_ell_set(c100, 0), std::invalid_argument);
}

TEST_CASE("c2_ell_set matches the gadget oracle and shrinks with ell") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_small_graph(seed + 300, 40);
        CAPTURE(seed);
        std::vector<std::uint8_t> prev;
        for (std::uint32_t ell = 1; ell <= 6; ++ell) {
            auto cur = c2_ell_set(g, ell);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                CHECK(static_cast<bool>(cur[v]) == gadget_c2_ell_member(g, v, ell));
            }
            if (!prev.empty()) {
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    if (cur[v]) CHECK(prev[v] == 1);
                }
            }
            prev = std::move(cur);
        }
    }
}

TEST_CASE("c2_ell_set parallel and serial kernels agree bit for bit") {
    Graph g = erdos_renyi(3000, 3.0, 77);
    for (std::uint32_t ell : {1u, 2u, 4u}) {
        CHECK(c2_ell_set(g, ell) == c2_ell_set_serial(g, ell));
    }
}

TEST_CASE("branching oracle fixed points") {
    auto z0 = er_branching_oracle(0.0);
    CHECK(z0.zeta == 0.0);
    CHECK(z0.zeta2inf == 0.0);
    auto z1 = er_branching_oracle(1.0);
    CHECK(z1.zeta == 0.0);
    CHECK(z1.zeta2inf == 0.0);

    auto z2 = er_branching_oracle(2.0);
    CHECK(z2.zeta == doctest::Approx(0.7968).epsilon(1e-3));
    CHECK(z2.zeta2inf == doctest::Approx(0.4730).epsilon(1e-3));
    // The returned value really solves z = 1 - exp(-lambda z).
    CHECK(std::abs(1.0 - std::exp(-2.0 * z2.zeta) - z2.zeta) < 1e-10);
    CHECK(z2.zeta2inf ==
          doctest::Approx(1.0 - (1.0 + 2.0 * z2.zeta) * std::exp(-2.0 * z2.zeta))
              .epsilon(1e-12));

    // Monotone in lambda and approaching full survival.
    double prev = 0.0;
    for (double lam : {1.2, 1.5, 2.0, 3.0, 6.0}) {
        auto z = er_branching_oracle(lam);
        CHECK(z.zeta > prev);
        CHECK(z.zeta2inf <= z.zeta);
        prev = z.zeta;
    }
    CHECK(er_branching_oracle(8.0).zeta > 0.999);

    CHECK_THROWS_AS(er_branching_oracle(-0.5), std::invalid_argument);
}

TEST_SUITE_END();
