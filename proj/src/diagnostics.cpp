#include "twocore/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "twocore/core.hpp"
#include "twocore/percolation.hpp"
#include "twocore/rng.hpp"

namespace twocore {

OrientedForest orient_forest(const Graph& g, std::span<const VertexId> h) {
    const VertexId n = g.vertex_count();
    if (h.empty()) throw std::invalid_argument("orient_forest: seed set is empty");
    for (VertexId v : h) {
        if (v >= n) throw std::out_of_range("orient_forest: seed vertex out of range");
    }
    if (connected_components(g).count() != 1) {
        throw StructureError("orient_forest: graph is not connected");
    }

    OrientedForest out;
    out.in_h.assign(n, 0);
    for (VertexId v : h) out.in_h[v] = 1;
    out.parent.assign(n, kUnreachable);
    out.depth.assign(n, 0);

    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> tree;   // discovery pass
    std::vector<VertexId> order;  // BFS order from the attachment vertex

    for (VertexId s = 0; s < n; ++s) {
        if (out.in_h[s] || seen[s]) continue;

        tree.clear();
        tree.push_back(s);
        seen[s] = 1;
        std::size_t inner_degree_sum = 0;
        VertexId attach = kUnreachable;
        for (std::size_t head = 0; head < tree.size(); ++head) {
            const VertexId v = tree[head];
            bool touches_h = false;
            for (VertexId w : g.neighbors(v)) {
                if (out.in_h[w]) {
                    touches_h = true;
                } else {
                    ++inner_degree_sum;
                    if (!seen[w]) {
                        seen[w] = 1;
                        tree.push_back(w);
                    }
                }
            }
            if (touches_h) {
                if (attach != kUnreachable && attach != v) {
                    throw StructureError(
                        "orient_forest: a tree outside the seed set touches it at more "
                        "than one vertex");
                }
                attach = v;
            }
        }
        // g connected and H nonempty, so every tree borders H somewhere.
        if (attach == kUnreachable) {
            throw StructureError("orient_forest: a tree outside the seed set never touches it");
        }
        if (inner_degree_sum != 2 * (tree.size() - 1)) {
            throw StructureError("orient_forest: cycle outside the seed set");
        }

        // Neighbor lists are ascending, so the first H-neighbor is the smallest.
        for (VertexId w : g.neighbors(attach)) {
            if (out.in_h[w]) {
                out.parent[attach] = w;
                break;
            }
        }

        order.clear();
        order.push_back(attach);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId v = order[head];
            for (VertexId w : g.neighbors(v)) {
                if (out.in_h[w] || w == out.parent[v]) continue;
                if (out.parent[w] != kUnreachable || w == attach) continue;
                out.parent[w] = v;
                order.push_back(w);
            }
        }
        // Reverse BFS order sees every vertex before its parent.
        for (std::size_t i = order.size(); i-- > 0;) {
            const VertexId v = order[i];
            if (out.depth[v] == 0) out.depth[v] = 1;
            const VertexId p = out.parent[v];
            if (!out.in_h[p]) out.depth[p] = std::max(out.depth[p], out.depth[v] + 1);
        }
    }
    return out;
}

namespace {

VertexId dsu_find(std::vector<VertexId>& dsu, VertexId v) {
    while (dsu[v] != v) {
        dsu[v] = dsu[dsu[v]];
        v = dsu[v];
    }
    return v;
}

}  // namespace

ColoredForest color_forest(const Graph& g, std::span<const VertexId> h, std::uint32_t ell) {
    if (ell < 1) throw std::invalid_argument("color_forest: ell must be at least 1");

    ColoredForest cf;
    cf.ell = ell;
    cf.orientation = orient_forest(g, h);

    const VertexId n = g.vertex_count();
    const auto& depth = cf.orientation.depth;
    const auto& parent = cf.orientation.parent;
    const auto& in_h = cf.orientation.in_h;

    cf.color.assign(n, VertexColor::none);
    cf.parent_edge_gray.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (in_h[v]) continue;
        const std::uint32_t d = depth[v];
        if (d <= ell) {
            cf.color[v] = VertexColor::red;
        } else if (d > 2 * ell && d % (2 * ell) >= 1 && d % (2 * ell) <= ell) {
            cf.color[v] = VertexColor::purple;
        } else {
            cf.color[v] = VertexColor::black;
        }
    }

    auto in_segment = [&](VertexId v) {
        return cf.color[v] == VertexColor::red || cf.color[v] == VertexColor::purple;
    };

    std::vector<VertexId> dsu(n);
    for (VertexId v = 0; v < n; ++v) dsu[v] = v;
    for (VertexId v = 0; v < n; ++v) {
        if (!in_segment(v)) continue;
        const VertexId p = parent[v];
        if (in_h[p]) continue;
        if (cf.color[p] == cf.color[v] && depth[p] == depth[v] + 1) {
            dsu[dsu_find(dsu, v)] = dsu_find(dsu, p);
        }
    }

    std::vector<VertexId> seg_of_root(n, kUnreachable);
    std::vector<Segment> raw;
    for (VertexId v = 0; v < n; ++v) {
        if (!in_segment(v)) continue;
        const VertexId r = dsu_find(dsu, v);
        if (seg_of_root[r] == kUnreachable) {
            seg_of_root[r] = static_cast<VertexId>(raw.size());
            raw.push_back(Segment{cf.color[v], false, v, {}});
        }
        raw[seg_of_root[r]].vertices.push_back(v);
    }

    for (Segment& seg : raw) {
        for (VertexId v : seg.vertices) {
            if (depth[v] > depth[seg.root]) seg.root = v;
            if (depth[v] % ell == 0) seg.complete = true;
        }
        std::sort(seg.vertices.begin(), seg.vertices.end());
        if (seg.complete) {
            cf.segments.push_back(std::move(seg));
            continue;
        }
        if (seg.color == VertexColor::purple) {
            for (VertexId v : seg.vertices) cf.color[v] = VertexColor::black;
        } else {
            for (VertexId v : seg.vertices) cf.color[v] = VertexColor::gray;
            cf.parent_edge_gray[seg.root] = 1;
            seg.color = VertexColor::gray;
            cf.segments.push_back(std::move(seg));
        }
    }
    return cf;
}

UpstreamBoundReport verify_upstream_bound(const ColoredForest& cf) {
    const std::size_t n = cf.color.size();
    const auto& depth = cf.orientation.depth;
    const auto& parent = cf.orientation.parent;
    const auto& in_h = cf.orientation.in_h;

    // Vertices in increasing depth order; every child precedes its parent.
    std::uint32_t max_depth = 0;
    for (std::size_t v = 0; v < n; ++v) max_depth = std::max(max_depth, depth[v]);
    std::vector<std::size_t> bucket_start(max_depth + 2, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_h[v]) ++bucket_start[depth[v] + 1];
    }
    for (std::size_t d = 1; d < bucket_start.size(); ++d) bucket_start[d] += bucket_start[d - 1];
    std::vector<VertexId> by_depth(bucket_start.back());
    {
        std::vector<std::size_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_h[v]) by_depth[cursor[depth[v]]++] = static_cast<VertexId>(v);
        }
    }

    // reg: non-gray vertices in the inclusive upstream. col: total size of
    // complete colored segments contained in it; a segment lies inside iff
    // its deepest member does, so its whole size is charged to that root.
    std::vector<std::size_t> reg(n, 0);
    std::vector<std::size_t> col(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_h[v] && cf.color[v] != VertexColor::gray) reg[v] = 1;
    }
    for (const Segment& seg : cf.segments) {
        if (seg.complete) col[seg.root] += seg.vertices.size();
    }
    for (VertexId v : by_depth) {
        const VertexId p = parent[v];
        if (in_h[p]) continue;
        reg[p] += reg[v];
        col[p] += col[v];
    }

    UpstreamBoundReport report;
    for (VertexId v : by_depth) {
        switch (cf.color[v]) {
            case VertexColor::black:
            case VertexColor::purple:
                ++report.checked;
                if (3 * col[v] < reg[v]) {
                    report.violations.push_back({v, reg[v], col[v]});
                }
                break;
            case VertexColor::red:
                ++report.red_skipped;
                break;
            case VertexColor::gray:
                ++report.gray_skipped;
                break;
            case VertexColor::none:
                break;
        }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const UpstreamBoundReport::Violation& a, const UpstreamBoundReport::Violation& b) {
                  return a.v < b.v;
              });
    return report;
}

namespace {

struct FlowArc {
    VertexId to;
    std::uint32_t cap;
    std::uint32_t rev;
};

void add_arc(std::vector<std::vector<FlowArc>>& net, VertexId u, VertexId v,
             std::uint32_t cap_uv, std::uint32_t cap_vu) {
    net[u].push_back({v, cap_uv, static_cast<std::uint32_t>(net[v].size())});
    net[v].push_back({u, cap_vu, static_cast<std::uint32_t>(net[u].size() - 1)});
}

}  // namespace

std::size_t edge_disjoint_paths(const Graph& g, std::span<const VertexId> a,
                                std::span<const VertexId> b) {
    const VertexId n = g.vertex_count();
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("edge_disjoint_paths: endpoint set is empty");
    }
    std::vector<std::uint8_t> in_a(n, 0);
    for (VertexId v : a) {
        if (v >= n) throw std::out_of_range("edge_disjoint_paths: vertex out of range");
        in_a[v] = 1;
    }
    for (VertexId v : b) {
        if (v >= n) throw std::out_of_range("edge_disjoint_paths: vertex out of range");
        if (in_a[v]) {
            throw std::invalid_argument("edge_disjoint_paths: endpoint sets share a vertex");
        }
    }

    const VertexId source = n;
    const VertexId sink = n + 1;
    const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 2;
    std::vector<std::vector<FlowArc>> net(n + 2);
    for (const auto& [u, v] : g.edges()) add_arc(net, u, v, 1, 1);
    for (VertexId v : a) add_arc(net, source, v, inf, 0);
    for (VertexId v : b) add_arc(net, v, sink, inf, 0);

    std::size_t flow = 0;
    std::vector<std::pair<VertexId, std::uint32_t>> prev(n + 2);  // (node, arc index)
    std::vector<std::uint8_t> reached(n + 2);
    std::vector<VertexId> queue;
    for (;;) {
        std::fill(reached.begin(), reached.end(), 0);
        queue.clear();
        queue.push_back(source);
        reached[source] = 1;
        for (std::size_t head = 0; head < queue.size() && !reached[sink]; ++head) {
            const VertexId u = queue[head];
            for (std::uint32_t i = 0; i < net[u].size(); ++i) {
                const FlowArc& arc = net[u][i];
                if (arc.cap == 0 || reached[arc.to]) continue;
                reached[arc.to] = 1;
                prev[arc.to] = {u, i};
                queue.push_back(arc.to);
                if (arc.to == sink) break;
            }
        }
        if (!reached[sink]) break;

        std::uint32_t push = inf;
        for (VertexId v = sink; v != source;) {
            const auto [u, i] = prev[v];
            push = std::min(push, net[u][i].cap);
            v = u;
        }
        for (VertexId v = sink; v != source;) {
            const auto [u, i] = prev[v];
            FlowArc& arc = net[u][i];
            arc.cap -= push;
            net[arc.to][arc.rev].cap += push;
            v = u;
        }
        flow += push;
    }
    return flow;
}

CutWitness find_balanced_cut(const Graph& g, double epsilon, std::size_t iters,
                             std::uint64_t seed) {
    const VertexId n = g.vertex_count();
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw std::invalid_argument("find_balanced_cut: epsilon must lie in (0, 1/2)");
    }
    if (n < 2) throw std::invalid_argument("find_balanced_cut: need at least two vertices");
    if (iters < 1) throw std::invalid_argument("find_balanced_cut: need at least one restart");
    const auto min_side = static_cast<std::size_t>(std::ceil(epsilon * n));
    if (2 * min_side > n) {
        throw std::invalid_argument("find_balanced_cut: epsilon leaves no feasible split");
    }

    const ComponentLabeling comps = connected_components(g);
    std::vector<std::vector<VertexId>> groups(comps.count());
    for (VertexId v = 0; v < n; ++v) groups[comps.label[v]].push_back(v);

    std::vector<std::uint8_t> side(n), best_side;
    std::vector<std::size_t> cross(n);
    std::vector<std::uint8_t> moved(n);
    std::vector<VertexId> seq, pool, perm_groups;
    std::size_t best_crossing = std::numeric_limits<std::size_t>::max();

    auto recount = [&](const std::vector<std::uint8_t>& s) {
        std::size_t c = 0;
        for (const auto& [u, v] : g.edges()) c += s[u] != s[v];
        return c;
    };

    for (std::size_t it = 0; it < iters; ++it) {
        rng::Engine eng(rng::derive(seed, it));

        // Pack whole components into side 0 up to half, then top up at random.
        std::fill(side.begin(), side.end(), 1);
        perm_groups.resize(groups.size());
        for (std::size_t i = 0; i < groups.size(); ++i) {
            perm_groups[i] = static_cast<VertexId>(i);
        }
        eng.shuffle(perm_groups);
        std::size_t size_a = 0;
        const std::size_t target = n / 2;
        for (VertexId gi : perm_groups) {
            if (size_a + groups[gi].size() > target) continue;
            for (VertexId v : groups[gi]) side[v] = 0;
            size_a += groups[gi].size();
        }
        pool.clear();
        for (VertexId v = 0; v < n; ++v) {
            if (side[v] == 1) pool.push_back(v);
        }
        eng.shuffle(pool);
        for (std::size_t i = 0; size_a < target; ++i, ++size_a) side[pool[i]] = 0;

        for (VertexId v = 0; v < n; ++v) {
            std::size_t c = 0;
            for (VertexId w : g.neighbors(v)) c += side[w] != side[v];
            cross[v] = c;
        }
        std::size_t crossing = recount(side);

        auto flip = [&](VertexId v) {
            const std::uint8_t from = side[v];
            side[v] = 1 - from;
            size_a += from == 1 ? 1 : std::size_t(-1);
            cross[v] = g.degree(v) - cross[v];
            for (VertexId w : g.neighbors(v)) {
                if (side[w] == side[v]) {
                    --cross[w];
                } else {
                    ++cross[w];
                }
            }
        };

        // Move-based refinement with pass rewind: each pass moves every
        // vertex at most once, taking the best legal move regardless of
        // sign, then rolls back to the best prefix. Plateau moves let arc
        // boundaries slide, so stripes merge instead of freezing.
        for (;;) {
            const std::size_t pass_start = crossing;
            std::fill(moved.begin(), moved.end(), 0);
            seq.clear();
            std::size_t best_in_pass = crossing;
            std::size_t best_prefix = 0;
            for (std::size_t step = 0; step < n; ++step) {
                VertexId pick = kUnreachable;
                std::ptrdiff_t pick_gain = std::numeric_limits<std::ptrdiff_t>::min();
                for (VertexId v = 0; v < n; ++v) {
                    if (moved[v]) continue;
                    const std::size_t from_size = side[v] == 0 ? size_a : n - size_a;
                    if (from_size <= min_side) continue;
                    const auto gain = static_cast<std::ptrdiff_t>(2 * cross[v]) -
                                      static_cast<std::ptrdiff_t>(g.degree(v));
                    if (gain > pick_gain) {
                        pick_gain = gain;
                        pick = v;
                    }
                }
                if (pick == kUnreachable) break;
                moved[pick] = 1;
                crossing -= pick_gain;
                flip(pick);
                seq.push_back(pick);
                if (crossing < best_in_pass) {
                    best_in_pass = crossing;
                    best_prefix = seq.size();
                }
            }
            for (std::size_t i = seq.size(); i-- > best_prefix;) {
                const VertexId v = seq[i];
                crossing += static_cast<std::size_t>(
                    static_cast<std::ptrdiff_t>(g.degree(v)) -
                    static_cast<std::ptrdiff_t>(2 * cross[v]));
                flip(v);
            }
            if (best_in_pass >= pass_start) break;
        }

        crossing = recount(side);
        if (crossing < best_crossing) {
            best_crossing = crossing;
            best_side = side;
        }
    }

    // Report the side holding vertex 0 for a stable witness.
    CutWitness w;
    const std::uint8_t a_mark = best_side[0];
    for (VertexId v = 0; v < n; ++v) {
        if (best_side[v] == a_mark) w.side_a.push_back(v);
    }
    w.size_a = w.side_a.size();
    w.size_b = n - w.size_a;
    w.crossing = best_crossing;
    w.epsilon_level = static_cast<double>(std::min(w.size_a, w.size_b)) / n;
    w.delta_level = static_cast<double>(w.crossing) / n;
    return w;
}

SprinklingBound sprinkling_bound(double n, double ell, double delta, double beta, double L) {
    SprinklingBound out;
    const double exponent = delta * n / 2.0 - n / ell;
    const double base = -std::expm1(L * std::log(beta));  // 1 - beta^L
    double tail;
    if (exponent == 0.0) {
        tail = 0.0;  // anything to the 0th power, including 0^0 here
    } else {
        tail = exponent * std::log(base);
    }
    out.log_value = (n / ell) * std::numbers::ln2 + tail;
    out.vacuous = !(out.log_value < 0.0);
    out.value = out.vacuous ? 1.0 : std::exp(out.log_value);
    return out;
}

SeedCoreReport seed_core_experiment(const Graph& g, double p_low, double p_high,
                                    std::uint32_t ell, std::uint64_t seed,
                                    std::size_t h_size) {
    if (!(p_low >= 0.0 && p_low < p_high && p_high <= 1.0)) {
        throw std::invalid_argument(
            "seed_core_experiment: need 0 <= p_low < p_high <= 1");
    }
    if (ell < 1) throw std::invalid_argument("seed_core_experiment: ell must be at least 1");
    const VertexId n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("seed_core_experiment: empty graph");

    SeedCoreReport report;
    report.n = n;

    const PercolationCoupling coupling = draw_coupling(g, rng::derive(seed, 1));
    const Graph g_low = percolate_at(coupling, p_low);
    const ComponentLabeling comps_low = connected_components(g_low);

    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
        if (comps_low.label[v] == comps_low.largest_id) members.push_back(v);
    }
    report.c_max_low = members.size();

    const std::size_t want =
        h_size != 0 ? h_size : std::max<std::size_t>(1, members.size() / 10);
    if (members.size() < want) {
        throw StructureError("seed_core_experiment: largest component has " +
                             std::to_string(members.size()) +
                             " vertices, fewer than the requested seed size " +
                             std::to_string(want));
    }

    VertexId start = members[0];
    for (VertexId v : members) {
        if (g_low.degree(v) == 1) {
            start = v;
            break;
        }
    }
    std::vector<std::uint8_t> in_h(n, 0);
    std::vector<VertexId> h_set;
    h_set.push_back(start);
    in_h[start] = 1;
    for (std::size_t head = 0; head < h_set.size() && h_set.size() < want; ++head) {
        for (VertexId w : g_low.neighbors(h_set[head])) {
            if (in_h[w]) continue;
            in_h[w] = 1;
            h_set.push_back(w);
            if (h_set.size() == want) break;
        }
    }
    report.h_size = h_set.size();

    // Components of C_max minus H with at least ell vertices.
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> f_all, comp;
    for (VertexId s : members) {
        if (in_h[s] || seen[s]) continue;
        comp.clear();
        comp.push_back(s);
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (VertexId w : g_low.neighbors(comp[head])) {
                if (seen[w] || in_h[w]) continue;
                seen[w] = 1;
                comp.push_back(w);
            }
        }
        if (comp.size() >= ell) {
            ++report.f_components;
            report.f_vertices += comp.size();
            f_all.insert(f_all.end(), comp.begin(), comp.end());
        }
    }
    std::sort(f_all.begin(), f_all.end());

    if (!f_all.empty()) {
        report.paths = edge_disjoint_paths(g, h_set, f_all);

        // Drop each tree's direct attachment edges into H (the F-H edges that
        // were open at p_low), then recount.
        std::vector<std::uint8_t> in_f(n, 0);
        for (VertexId v : f_all) in_f[v] = 1;
        std::vector<std::pair<VertexId, VertexId>> kept;
        const auto& base_edges = g.edges();
        for (std::size_t i = 0; i < base_edges.size(); ++i) {
            const auto [u, v] = base_edges[i];
            const bool attachment = (in_f[u] && in_h[v]) || (in_h[u] && in_f[v]);
            if (attachment && coupling.weight(i) < p_low) continue;
            kept.push_back({u, v});
        }
        const Graph filtered = Graph::from_edges(n, kept);
        report.paths_filtered = edge_disjoint_paths(filtered, h_set, f_all);
    }

    const Graph g_high = sprinkle(coupling, p_low, p_high, rng::derive(seed, 2));
    const ComponentLabeling comps_high = connected_components(g_high);
    const CoreResult core = two_core(g_high);
    report.c_max_high = comps_high.largest_size();
    for (VertexId v = 0; v < n; ++v) {
        if (core.in_two_core[v] && comps_high.label[v] == comps_high.largest_id) {
            ++report.core_in_c_max;
        }
    }
    report.core_nonempty = report.core_in_c_max > 0;
    return report;
}

}  // namespace twocore
