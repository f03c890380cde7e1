#pragma once

#include <cstdint>
#include <vector>

#include "twocore/graph.hpp"

namespace twocore {

// Largest k such that the vertex belongs to the k-core: bucket-queue peeling
// in nondecreasing residual degree order, O(n + m).
std::vector<std::uint32_t> coreness(const Graph& g);

struct CoreResult {
    std::vector<std::uint32_t> coreness;
    std::vector<std::uint8_t> in_two_core;
    // Component labeling restricted to the 2-core: kUnreachable outside it,
    // dense ids ordered by smallest contained vertex otherwise.
    std::vector<std::uint32_t> core_component;
    std::vector<std::size_t> core_component_sizes;
    std::size_t two_core_size = 0;
    double frac_c2 = 0.0;     // |2-core| / n
    double frac_c2max = 0.0;  // largest 2-core component / n
    double frac_cmax = 0.0;   // largest component of g / n
};

// Iteratively deletes vertices of degree <= 1; survivors form the 2-core.
// The peel is independent of the coreness computation so the two can be
// cross-checked against each other.
CoreResult two_core(const Graph& g);

// Vertices v whose radius-ell ball, with one virtual degree unit granted to
// every vertex at distance exactly ell (standing in for an unexplored
// continuation), keeps v alive under degree-<=1 peeling AND leaves v's
// surviving component touching that boundary. Vertices whose component lies
// entirely within distance < ell are excluded: with no boundary there is
// nothing to continue into. Monotone nonincreasing in ell.
//
// c2_ell_set parallelizes over vertices with OpenMP; c2_ell_set_serial is the
// single-threaded reference. Outputs are identical bit for bit.
std::vector<std::uint8_t> c2_ell_set(const Graph& g, std::uint32_t ell);
std::vector<std::uint8_t> c2_ell_set_serial(const Graph& g, std::uint32_t ell);

struct BranchingFixedPoint {
    double zeta;       // largest root of z = 1 - exp(-lambda z); 0 for lambda <= 1
    double zeta2inf;   // 1 - (1 + lambda*zeta) * exp(-lambda*zeta)
};

// Poisson(lambda) offspring limits for Erdos-Renyi percolation: the chance a
// root survives forever, and the chance it additionally keeps two or more
// surviving children lines (the 2-core analog). Bisection to 1e-12.
BranchingFixedPoint er_branching_oracle(double lambda);

}  // namespace twocore
