#pragma once

#include <cstdint>

#include "twocore/graph.hpp"
#include "twocore/rng.hpp"

namespace twocore {

// Monotone coupling for edge percolation: edge i of the base graph carries a
// uniform weight in [0,1) derived counter-style from (seed, i), so lookups are
// random-access and independent of iteration order or thread count. Keeping
// edges with weight < p yields G(p), and p' <= p gives nested edge sets.
//
// The coupling borrows the base graph; the caller keeps it alive.
struct PercolationCoupling {
    const Graph* base = nullptr;
    std::uint64_t seed = 0;

    double weight(std::size_t edge_index) const {
        return rng::unit(rng::at(seed, edge_index));
    }
};

PercolationCoupling draw_coupling(const Graph& g, std::uint64_t seed);

// Subgraph keeping edge i iff weight(i) < p. Strict comparison makes p = 1
// keep everything (weights live in the half-open unit interval) and p = 0
// keep nothing. Vertex set unchanged.
Graph percolate_at(const PercolationCoupling& c, double p);

// Union of percolate_at(c, p_low) with an independent beta-percolation of the
// base edges, beta = 1 - (1-p_high)/(1-p_low), drawn from a fresh coupling
// keyed by aux_seed. Each base edge ends up present with marginal probability
// exactly p_high. Requires 0 <= p_low < p_high <= 1.
Graph sprinkle(const PercolationCoupling& c, double p_low, double p_high, std::uint64_t aux_seed);

}  // namespace twocore
