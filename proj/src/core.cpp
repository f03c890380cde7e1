#include "twocore/core.hpp"

#include <cmath>
#include <stdexcept>

#include "ball_scratch.hpp"

namespace twocore {

std::vector<std::uint32_t> coreness(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        if (deg[v] > max_deg) max_deg = deg[v];
    }

    // Counting sort by degree; bin[d] tracks the start of bucket d in vert.
    std::vector<std::size_t> bin(max_deg + 2, 0);
    for (VertexId v = 0; v < n; ++v) ++bin[deg[v] + 1];
    for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
    std::vector<VertexId> vert(n);
    std::vector<std::size_t> pos(n);
    {
        std::vector<std::size_t> cursor(bin.begin(), bin.end() - 1);
        for (VertexId v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    // Peel in nondecreasing residual degree order. The deg[w] > deg[v] guard
    // both skips processed vertices and clamps residual degrees from below,
    // which is exactly the running-maximum rule: deg[v] at processing time is
    // the final coreness.
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = vert[i];
        for (VertexId w : g.neighbors(v)) {
            if (deg[w] <= deg[v]) continue;
            const std::uint32_t dw = deg[w];
            const std::size_t pw = pos[w];
            const std::size_t pu = bin[dw];
            const VertexId u = vert[pu];
            if (u != w) {
                vert[pw] = u;
                pos[u] = pw;
                vert[pu] = w;
                pos[w] = pu;
            }
            ++bin[dw];
            --deg[w];
        }
    }
    return deg;
}

CoreResult two_core(const Graph& g) {
    const std::size_t n = g.vertex_count();
    CoreResult out;
    out.coreness = coreness(g);
    out.in_two_core.assign(n, 1);

    // Direct peel, independent of the coreness pass above.
    std::vector<std::uint32_t> deg(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.degree(v));
        if (deg[v] <= 1) {
            out.in_two_core[v] = 0;
            queue.push_back(v);
        }
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        const VertexId v = queue[head++];
        for (VertexId w : g.neighbors(v)) {
            if (!out.in_two_core[w]) continue;
            if (--deg[w] <= 1) {
                out.in_two_core[w] = 0;
                queue.push_back(w);
            }
        }
    }

    out.core_component.assign(n, kUnreachable);
    for (VertexId start = 0; start < n; ++start) {
        if (!out.in_two_core[start] || out.core_component[start] != kUnreachable) continue;
        const auto id = static_cast<std::uint32_t>(out.core_component_sizes.size());
        out.core_component[start] = id;
        queue.assign(1, start);
        std::size_t h = 0, size = 0;
        while (h < queue.size()) {
            const VertexId v = queue[h++];
            ++size;
            for (VertexId w : g.neighbors(v)) {
                if (out.in_two_core[w] && out.core_component[w] == kUnreachable) {
                    out.core_component[w] = id;
                    queue.push_back(w);
                }
            }
        }
        out.core_component_sizes.push_back(size);
        out.two_core_size += size;
    }

    if (n > 0) {
        std::size_t largest_core = 0;
        for (std::size_t s : out.core_component_sizes)
            if (s > largest_core) largest_core = s;
        const ComponentLabeling comps = connected_components(g);
        out.frac_c2 = static_cast<double>(out.two_core_size) / static_cast<double>(n);
        out.frac_c2max = static_cast<double>(largest_core) / static_cast<double>(n);
        out.frac_cmax = static_cast<double>(comps.largest_size()) / static_cast<double>(n);
    }
    return out;
}

namespace {

std::vector<std::uint8_t> c2_ell_impl(const Graph& g, std::uint32_t ell, bool parallel) {
    if (ell < 1) throw std::invalid_argument("c2_ell_set: ell must be >= 1");
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    std::vector<std::uint8_t> member(static_cast<std::size_t>(n), 0);
#pragma omp parallel if (parallel)
    {
        detail::BallScratch s;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t v = 0; v < n; ++v) {
            detail::collect_ball_radius_capped(g, static_cast<VertexId>(v), ell, s);
            detail::peel_scratch_ball(s);
            member[static_cast<std::size_t>(v)] =
                detail::root_component_reaches_boundary(s) ? 1 : 0;
        }
    }
    return member;
}

}  // namespace

std::vector<std::uint8_t> c2_ell_set(const Graph& g, std::uint32_t ell) {
    return c2_ell_impl(g, ell, true);
}

std::vector<std::uint8_t> c2_ell_set_serial(const Graph& g, std::uint32_t ell) {
    return c2_ell_impl(g, ell, false);
}

BranchingFixedPoint er_branching_oracle(double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("er_branching_oracle: lambda must be >= 0");
    if (lambda <= 1.0) return {0.0, 0.0};
    // 1 - exp(-lambda z) - z is positive between the trivial root 0 and the
    // survival probability, negative beyond it, so bisection keeps the sign
    // change bracketed around the largest root.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double f = 1.0 - std::exp(-lambda * mid) - mid;
        if (f > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double zeta = 0.5 * (lo + hi);
    const double zeta2inf = 1.0 - (1.0 + lambda * zeta) * std::exp(-lambda * zeta);
    return {zeta, zeta2inf};
}

}  // namespace twocore
