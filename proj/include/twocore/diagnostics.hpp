#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twocore/graph.hpp"

namespace twocore {

// Raised when a diagnostic's structural precondition fails (disconnected
// input, cycles where a forest is required, bad attachment counts, ...).
struct StructureError final : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Orientation of g \ H toward a seed set H. Requires: g connected, g \ H a
// forest, and each tree of g \ H adjacent to H through exactly one vertex.
// depth is 1 at leaves and 1 + max over direct upstream otherwise, so depth
// grows downstream: each tree's attachment vertex carries the tree's height.
struct OrientedForest {
    std::vector<std::uint8_t> in_h;
    // Toward H. Attachment vertices point at their smallest-id H-neighbor;
    // H members hold kUnreachable.
    std::vector<VertexId> parent;
    std::vector<std::uint32_t> depth;  // 0 on H members
};

OrientedForest orient_forest(const Graph& g, std::span<const VertexId> h);

enum class VertexColor : std::uint8_t { none, red, purple, black, gray };

struct Segment {
    VertexColor color = VertexColor::none;
    bool complete = false;
    VertexId root = 0;  // unique deepest (most downstream) member
    std::vector<VertexId> vertices;
};

struct ColoredForest {
    std::uint32_t ell = 0;
    OrientedForest orientation;
    // Final color per vertex; none on H members. Incomplete purple runs end
    // black, incomplete red runs end gray.
    std::vector<VertexColor> color;
    // Surviving red/purple segments (complete == true) plus the gray remains
    // of incomplete red runs (complete == false).
    std::vector<Segment> segments;
    // Edge (v, parent(v)) grayed along with an incomplete red run; recorded
    // per upstream endpoint v. Bookkeeping only, nothing downstream reads it.
    std::vector<std::uint8_t> parent_edge_gray;
};

// Three steps: color vertices by depth (red: depth <= ell; purple:
// depth > 2*ell and depth mod 2*ell in 1..ell; black otherwise), form
// segments from equal-colored parent edges of consecutive depth, then demote
// incomplete segments (purple -> black, red -> gray plus the downstream
// edge). A segment is complete iff it contains a depth divisible by ell.
ColoredForest color_forest(const Graph& g, std::span<const VertexId> h, std::uint32_t ell);

// Checks 3 * |colored inclusive upstream| >= |regular inclusive upstream| at
// every black and purple vertex, where the colored side counts complete
// red/purple segments wholly contained in the inclusive upstream and the
// regular side counts non-gray vertices. Red vertices sit below depth ell + 1
// where the bound cannot bind (their own segment never fits inside their
// inclusive upstream) and are reported as skipped.
struct UpstreamBoundReport {
    struct Violation {
        VertexId v;
        std::size_t regular;
        std::size_t colored;
    };
    std::size_t checked = 0;
    std::size_t red_skipped = 0;
    std::size_t gray_skipped = 0;
    std::vector<Violation> violations;
};

UpstreamBoundReport verify_upstream_bound(const ColoredForest& cf);

// Maximum number of pairwise edge-disjoint A-B paths: unit-capacity max flow
// from a super-source over A to a super-sink over B, BFS augmentation.
// A and B must be nonempty and disjoint.
std::size_t edge_disjoint_paths(const Graph& g, std::span<const VertexId> a,
                                std::span<const VertexId> b);

struct CutWitness {
    std::vector<VertexId> side_a;  // sorted
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    std::size_t crossing = 0;
    double epsilon_level = 0.0;  // min(size_a, size_b) / n
    double delta_level = 0.0;    // crossing / n
};

// Heuristic search for a sparse balanced cut: seeded restarts (whole
// components packed greedily into one side, remainder split at random)
// followed by best-improvement single-vertex moves that keep both sides at
// least ceil(epsilon * n). The result is an upper-bound witness on the
// minimum balanced cut, never claimed optimal. Requires 0 < epsilon < 1/2.
CutWitness find_balanced_cut(const Graph& g, double epsilon, std::size_t iters,
                             std::uint64_t seed);

struct SprinklingBound {
    double log_value = 0.0;  // natural log of 2^(n/ell) * (1 - beta^L)^(delta*n/2 - n/ell)
    double value = 0.0;      // clamped to [0, 1]
    bool vacuous = false;    // bound >= 1, so it says nothing as a probability
};

// Evaluated in log space; exponent delta*n/2 - n/ell <= 0 always yields a
// vacuous bound (the formula then exceeds 1).
SprinklingBound sprinkling_bound(double n, double ell, double delta, double beta, double L);

struct SeedCoreReport {
    std::size_t n = 0;
    std::size_t c_max_low = 0;   // largest component size at p_low
    std::size_t h_size = 0;
    std::size_t f_components = 0;  // components of C_max \ H with size >= ell
    std::size_t f_vertices = 0;
    std::size_t paths = 0;           // edge-disjoint H-F paths in the base graph
    std::size_t paths_filtered = 0;  // after deleting each F-component's attachment edges
    std::size_t c_max_high = 0;      // largest component size after sprinkling
    std::size_t core_in_c_max = 0;   // 2-core vertices inside it
    bool core_nonempty = false;
};

// Percolate at p_low, grow H by BFS inside the largest component from its
// smallest-id leaf (smallest-id vertex if no leaf exists), identify the
// forest F of large components of C_max \ H, count edge-disjoint H-F paths
// in the base graph, sprinkle up to p_high, and test whether the largest
// component now holds a nonempty 2-core. An empirical illustration, not a
// proof checker. h_size 0 selects the default |C_max| / 10.
SeedCoreReport seed_core_experiment(const Graph& g, double p_low, double p_high,
                                    std::uint32_t ell, std::uint64_t seed,
                                    std::size_t h_size = 0);

}  // namespace twocore
