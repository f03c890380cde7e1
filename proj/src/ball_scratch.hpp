#pragma once

#include <cstdint>
#include <vector>

#include "twocore/graph.hpp"

namespace twocore::detail {

// Reusable buffers for extracting a small induced ball around a root and
// peeling it. Visited marks are epoch-stamped so nothing is cleared between
// calls; every buffer grows to the largest instance seen and stays allocated.
// One scratch per thread.
struct BallScratch {
    // Per base vertex; stamp[v] == epoch means v is in the current ball and
    // local_of[v] is its local index.
    std::vector<std::uint32_t> stamp;
    std::vector<std::uint32_t> local_of;
    std::uint32_t epoch = 0;

    // Current ball, in BFS order with the root at local index 0.
    std::vector<VertexId> members;
    std::vector<std::uint32_t> dist;
    std::uint32_t radius = 0;
    bool truncated = false;
    bool overflow = false;

    // Induced adjacency over local indices, CSR.
    std::vector<std::uint32_t> adj_off;
    std::vector<std::uint32_t> adj;

    // Peel state.
    std::vector<std::uint32_t> deg;
    std::vector<std::uint32_t> queue;
    std::vector<std::uint8_t> alive;

    void bind(std::size_t n) {
        if (stamp.size() < n) {
            stamp.assign(n, 0);
            local_of.resize(n);
            epoch = 0;
        }
    }

    std::uint32_t next_epoch() {
        if (++epoch == 0) {  // wrapped: invalidate all stale marks
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
        return epoch;
    }
};

// Ball capped by member count: levels are admitted whole while the cumulative
// size stays <= cap, so the radius is the largest R with |ball(R)| <= cap.
// A root of degree >= cap short-circuits to the overflow ball {root}.
// truncated means the next level was nonempty (equivalently, some vertex at
// the final radius has a neighbor outside the ball). Frontier = every vertex
// at the final radius, but only when truncated.
inline void collect_ball_size_capped(const Graph& g, VertexId root, std::uint32_t cap,
                                     BallScratch& s) {
    s.bind(g.vertex_count());
    const std::uint32_t ep = s.next_epoch();
    s.members.clear();
    s.dist.clear();
    s.radius = 0;

    if (g.degree(root) >= cap) {
        s.overflow = true;
        s.truncated = true;
        s.members.push_back(root);
        s.dist.push_back(0);
        s.stamp[root] = ep;
        s.local_of[root] = 0;
        s.adj_off.assign(2, 0);
        s.adj.clear();
        return;
    }
    s.overflow = false;

    s.stamp[root] = ep;
    s.local_of[root] = 0;
    s.members.push_back(root);
    s.dist.push_back(0);
    std::size_t level_begin = 0;
    std::uint32_t r = 0;
    bool truncated = false;
    while (true) {
        const std::size_t level_end = s.members.size();
        std::size_t appended = 0;
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (VertexId w : g.neighbors(s.members[i])) {
                if (s.stamp[w] == ep) continue;
                s.stamp[w] = ep;
                s.members.push_back(w);
                ++appended;
            }
        }
        if (appended == 0) break;  // component exhausted
        if (s.members.size() > cap) {
            // Next level would blow the cap: roll it back whole.
            for (std::size_t i = level_end; i < s.members.size(); ++i) s.stamp[s.members[i]] = 0;
            s.members.resize(level_end);
            truncated = true;
            break;
        }
        ++r;
        for (std::size_t i = level_end; i < s.members.size(); ++i) {
            s.local_of[s.members[i]] = static_cast<std::uint32_t>(i);
            s.dist.push_back(r);
        }
        level_begin = level_end;
    }
    s.radius = r;
    s.truncated = truncated;

    // Induced local CSR; edges leaving the ball are skipped by the stamp test.
    const std::size_t k = s.members.size();
    s.adj_off.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t d = 0;
        for (VertexId w : g.neighbors(s.members[i]))
            if (s.stamp[w] == ep) ++d;
        s.adj_off[i + 1] = s.adj_off[i] + d;
    }
    s.adj.resize(s.adj_off[k]);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t pos = s.adj_off[i];
        for (VertexId w : g.neighbors(s.members[i]))
            if (s.stamp[w] == ep) s.adj[pos++] = s.local_of[w];
    }
}

// Ball capped by radius: every vertex within distance ell, no size limit.
// truncated means some member sits at distance exactly ell.
inline void collect_ball_radius_capped(const Graph& g, VertexId root, std::uint32_t ell,
                                       BallScratch& s) {
    s.bind(g.vertex_count());
    const std::uint32_t ep = s.next_epoch();
    s.members.clear();
    s.dist.clear();
    s.overflow = false;

    s.stamp[root] = ep;
    s.local_of[root] = 0;
    s.members.push_back(root);
    s.dist.push_back(0);
    std::size_t head = 0;
    std::uint32_t max_d = 0;
    while (head < s.members.size()) {
        const std::size_t i = head++;
        const std::uint32_t d = s.dist[i];
        if (d == ell) continue;  // boundary vertices are not expanded
        for (VertexId w : g.neighbors(s.members[i])) {
            if (s.stamp[w] == ep) continue;
            s.stamp[w] = ep;
            s.local_of[w] = static_cast<std::uint32_t>(s.members.size());
            s.members.push_back(w);
            s.dist.push_back(d + 1);
            if (d + 1 > max_d) max_d = d + 1;
        }
    }
    s.radius = (max_d < ell) ? max_d : ell;
    s.truncated = (max_d == ell);

    const std::size_t k = s.members.size();
    s.adj_off.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t d = 0;
        for (VertexId w : g.neighbors(s.members[i]))
            if (s.stamp[w] == ep) ++d;
        s.adj_off[i + 1] = s.adj_off[i] + d;
    }
    s.adj.resize(s.adj_off[k]);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t pos = s.adj_off[i];
        for (VertexId w : g.neighbors(s.members[i]))
            if (s.stamp[w] == ep) s.adj[pos++] = s.local_of[w];
    }
}

// Degree-<=1 peel of the scratch ball. When the ball is truncated, every
// vertex at the final radius holds one virtual degree unit, so it dies only
// if all its real ball neighbors die. Fills s.alive.
inline void peel_scratch_ball(BallScratch& s) {
    const std::size_t k = s.members.size();
    s.deg.resize(k);
    s.alive.assign(k, 1);
    s.queue.clear();
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t d = s.adj_off[i + 1] - s.adj_off[i];
        if (s.truncated && s.dist[i] == s.radius) ++d;
        s.deg[i] = d;
        if (d <= 1) {
            s.alive[i] = 0;
            s.queue.push_back(static_cast<std::uint32_t>(i));
        }
    }
    std::size_t head = 0;
    while (head < s.queue.size()) {
        const std::uint32_t v = s.queue[head++];
        for (std::uint32_t j = s.adj_off[v]; j < s.adj_off[v + 1]; ++j) {
            const std::uint32_t w = s.adj[j];
            if (!s.alive[w]) continue;
            if (--s.deg[w] <= 1) {
                s.alive[w] = 0;
                s.queue.push_back(w);
            }
        }
    }
}

// After peel_scratch_ball: does the root's surviving component contain a
// vertex at the final radius? False when the root itself died.
inline bool root_component_reaches_boundary(BallScratch& s) {
    if (!s.alive[0]) return false;
    if (s.dist[0] == s.radius && s.truncated) return true;
    const std::size_t k = s.members.size();
    // Reuse deg as an epoch-free visited mask; it is dead state after the peel.
    std::vector<std::uint32_t>& seen = s.deg;
    std::fill(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(k), 0);
    s.queue.clear();
    s.queue.push_back(0);
    seen[0] = 1;
    std::size_t head = 0;
    while (head < s.queue.size()) {
        const std::uint32_t v = s.queue[head++];
        if (s.truncated && s.dist[v] == s.radius) return true;
        for (std::uint32_t j = s.adj_off[v]; j < s.adj_off[v + 1]; ++j) {
            const std::uint32_t w = s.adj[j];
            if (!s.alive[w] || seen[w]) continue;
            seen[w] = 1;
            s.queue.push_back(w);
        }
    }
    return false;
}

}  // namespace twocore::detail
