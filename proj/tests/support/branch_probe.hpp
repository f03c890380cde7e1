#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "twocore/estimator.hpp"

namespace twocore::testing {

struct ProbeVerdict {
    bool i2 = false;
    bool i2inf = false;
    // True when an induced edge joins two distinct first-hop branches. The
    // written bookkeeping charges such a cycle to the scanning branch only,
    // so the verdict may undercount and fall below classify's.
    bool branch_meet = false;
};

// Branch-counting cross-check for classify: each first-hop neighbor of the
// root heads a branch, deeper vertices inherit the branch of their BFS
// discoverer, and a branch qualifies when it closed a cycle (truncated balls:
// or reached the frontier). The root is a candidate when at least two
// branches qualify. Replays the ball's own BFS (members are in BFS order, so
// the discoverer of w is its lowest-index neighbor one level up), which pins
// down the deviations a freestanding rescan would need anyway: parent edges
// are never cycle evidence, the root counts as discovered, truncation and
// overflow follow the ball's level-granular flags, and a truncated branch
// qualifies when its reach is at least the ball radius.
inline ProbeVerdict branch_probe(const Ball& ball) {
    if (ball.degree_overflow) return {true, true, false};
    const std::size_t s = ball.S();
    if (s <= 1) return {false, false, false};

    std::vector<std::vector<std::uint32_t>> adj(s);
    for (const auto& [a, b] : ball.induced_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> discoverer(s, kNone);
    std::vector<std::uint32_t> branch(s, kNone);
    for (std::uint32_t w = 1; w < s; ++w) {
        std::uint32_t best = kNone;
        for (std::uint32_t u : adj[w]) {
            if (ball.dist[u] + 1 == ball.dist[w]) best = std::min(best, u);
        }
        discoverer[w] = best;
        if (ball.dist[w] == 1) branch[w] = w;
    }
    for (std::uint32_t w = 1; w < s; ++w) {
        if (branch[w] == kNone) branch[w] = branch[discoverer[w]];
    }

    std::vector<std::uint8_t> cycle(s, 0);
    std::vector<std::uint32_t> reach(s, 0);
    bool meet = false;
    for (std::uint32_t w = 1; w < s; ++w) {
        reach[branch[w]] = std::max(reach[branch[w]], ball.dist[w]);
    }
    for (const auto& [a, b] : ball.induced_edges) {
        if (a == 0) continue;
        if (discoverer[b] == a || discoverer[a] == b) continue;
        // a sits earlier in BFS order, so a's branch does the scanning.
        cycle[branch[a]] = 1;
        meet |= branch[a] != branch[b];
    }

    std::size_t qualifying = 0;
    for (std::uint32_t w = 1; w < s && ball.dist[w] == 1; ++w) {
        const bool hit = ball.truncated ? (cycle[w] || reach[w] >= ball.R) : cycle[w] != 0;
        qualifying += hit;
    }
    ProbeVerdict out;
    out.branch_meet = meet;
    out.i2 = qualifying >= 2;
    out.i2inf = ball.truncated && out.i2;
    return out;
}

}  // namespace twocore::testing
