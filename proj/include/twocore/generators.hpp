#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "twocore/graph.hpp"

namespace twocore {

// Every generator is a pure function of (parameters, seed): identical inputs
// give identical graphs byte for byte, on any platform.

// Each of the n(n-1)/2 pairs is an edge independently with probability
// c/(n-1), so the expected degree is exactly c. Geometric skipping keeps the
// cost O(n + m). Requires 0 <= c < n.
Graph erdos_renyi(std::size_t n, double c, std::uint64_t seed);

// Erased configuration model: uniform random perfect matching on degree
// stubs, then self-loops and parallel edges dropped. Degree sum must be even
// and every degree < n.
Graph configuration_model(const std::vector<std::uint32_t>& degrees, std::uint64_t seed);

// Configuration model on the constant sequence d, rematched until the erased
// graph is exactly d-regular (equivalently, the matching is simple) or the
// retry cap is hit; the last erased attempt is returned in that case and
// *exact_regular, when given, reports which happened. Requires n*d even and
// d < n.
Graph random_regular(std::size_t n, std::uint32_t d, std::uint64_t seed,
                     bool* exact_regular = nullptr, int retry_cap = 100);

// Each base vertex v becomes the triangle {3v, 3v+1, 3v+2}; each base edge
// joins uniformly random members of the two triangles. Collisions between
// attachment edges are collapsed by simple-graph normalization.
Graph household_triangle(const Graph& base, std::uint64_t seed);

// k = ceil(sqrt(n)) disjoint independent random_regular(k, d) copies, k*k
// vertices total. Requires d < k and d*k even.
Graph disjoint_regular(std::size_t n, std::uint32_t d, std::uint64_t seed,
                       bool* exact_regular = nullptr);

// JSON-serializable recipe: {"model": ..., "params": {...}, "seed": ...}.
// Models and parameters:
//   erdos_renyi        {n, c}
//   configuration      {degrees: [..]}
//   random_regular     {n, d}
//   household_triangle {n, c}   (ER base from a derived seed, then households)
//   disjoint_regular   {n, d}
struct GeneratorSpec {
    std::string model;
    nlohmann::json params;
    std::uint64_t seed = 0;

    static GeneratorSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

Graph generate(const GeneratorSpec& spec);

}  // namespace twocore
