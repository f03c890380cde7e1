#include "twocore/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ball_scratch.hpp"
#include "twocore/core.hpp"
#include "twocore/rng.hpp"

namespace twocore {

Ball explore_ball(const Graph& g, VertexId v, std::uint32_t K) {
    if (K < 2) throw std::invalid_argument("explore_ball: K must be >= 2");
    if (v >= g.vertex_count()) throw std::out_of_range("explore_ball: root out of range");

    detail::BallScratch s;
    detail::collect_ball_size_capped(g, v, K, s);

    Ball ball;
    ball.root = v;
    ball.R = s.radius;
    ball.truncated = s.truncated;
    ball.degree_overflow = s.overflow;
    ball.members = s.members;
    ball.dist = s.dist;
    const std::size_t k = s.members.size();
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = s.adj_off[i]; j < s.adj_off[i + 1]; ++j)
            if (s.adj[j] > i) ball.induced_edges.emplace_back(i, s.adj[j]);
    std::sort(ball.induced_edges.begin(), ball.induced_edges.end());
    if (ball.truncated) {
        ball.frontier.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (ball.dist[i] == ball.R) ball.frontier[i] = 1;
    }
    return ball;
}

namespace {

// Rebuilds scratch peel state from a packaged Ball so the public classifier
// and the sampling hot path share one peel implementation.
void scratch_from_ball(const Ball& ball, detail::BallScratch& s) {
    const std::size_t k = ball.members.size();
    s.members = ball.members;
    s.dist = ball.dist;
    s.radius = ball.R;
    s.truncated = ball.truncated;
    s.overflow = ball.degree_overflow;
    s.adj_off.assign(k + 1, 0);
    for (const auto& [a, b] : ball.induced_edges) {
        ++s.adj_off[a + 1];
        ++s.adj_off[b + 1];
    }
    for (std::size_t i = 1; i <= k; ++i) s.adj_off[i] += s.adj_off[i - 1];
    s.adj.resize(2 * ball.induced_edges.size());
    std::vector<std::uint32_t> cursor(s.adj_off.begin(), s.adj_off.end() - 1);
    for (const auto& [a, b] : ball.induced_edges) {
        s.adj[cursor[a]++] = b;
        s.adj[cursor[b]++] = a;
    }
}

Classification classify_scratch(detail::BallScratch& s, ClassifyMode mode) {
    if (s.overflow) return {true, true};
    detail::peel_scratch_ball(s);
    Classification c;
    c.i2 = s.alive[0] != 0;
    if (mode == ClassifyMode::semantic)
        c.i2inf = detail::root_component_reaches_boundary(s);
    else
        c.i2inf = c.i2 && s.truncated;
    return c;
}

}  // namespace

Classification classify(const Ball& ball, ClassifyMode mode) {
    if (ball.degree_overflow) return {true, true};
    detail::BallScratch s;
    scratch_from_ball(ball, s);
    return classify_scratch(s, mode);
}

ClassifyMode classify_mode_from_string(const std::string& name) {
    if (name == "semantic") return ClassifyMode::semantic;
    if (name == "literal") return ClassifyMode::literal;
    throw std::invalid_argument("unknown classify mode: " + name);
}

std::string to_string(ClassifyMode mode) {
    return mode == ClassifyMode::semantic ? "semantic" : "literal";
}

std::uint64_t sample_size(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("sample_size: epsilon must lie in (0,1)");
    const double t = (8.0 / (epsilon * epsilon)) * std::log(8.0 / epsilon);
    return static_cast<std::uint64_t>(std::ceil(t));
}

namespace {

EstimateReport run_estimate(const Graph& g, std::uint32_t K, std::uint64_t T, std::uint64_t seed,
                            ClassifyMode mode, bool keep_samples, bool parallel) {
    if (g.vertex_count() == 0) throw std::invalid_argument("estimate: empty graph");
    if (K < 2) throw std::invalid_argument("estimate: K must be >= 2");
    if (T < 1) throw std::invalid_argument("estimate: T must be >= 1");

    EstimateReport rep;
    rep.T = T;
    rep.K = K;
    rep.seed = seed;
    rep.mode = mode;
    if (keep_samples) rep.per_sample.resize(T);

    const std::uint64_t n = g.vertex_count();
    std::uint64_t c2 = 0, c2inf = 0;
    const auto t_count = static_cast<std::int64_t>(T);
#pragma omp parallel if (parallel)
    {
        detail::BallScratch s;
#pragma omp for schedule(dynamic, 256) reduction(+ : c2, c2inf)
        for (std::int64_t t = 0; t < t_count; ++t) {
            const auto v =
                static_cast<VertexId>(rng::below(rng::at(seed, static_cast<std::uint64_t>(t)), n));
            Classification cl;
            if (g.degree(v) >= K) {
                cl = {true, true};
            } else {
                detail::collect_ball_size_capped(g, v, K, s);
                cl = classify_scratch(s, mode);
            }
            c2 += cl.i2 ? 1 : 0;
            c2inf += cl.i2inf ? 1 : 0;
            if (keep_samples)
                rep.per_sample[static_cast<std::size_t>(t)] = {
                    v, static_cast<std::uint8_t>(cl.i2), static_cast<std::uint8_t>(cl.i2inf)};
        }
    }
    rep.i2_count = c2;
    rep.i2inf_count = c2inf;
    rep.i2 = static_cast<double>(c2) / static_cast<double>(T);
    rep.i2inf = static_cast<double>(c2inf) / static_cast<double>(T);
    return rep;
}

}  // namespace

EstimateReport estimate(const Graph& g, std::uint32_t K, std::uint64_t T, std::uint64_t seed,
                        ClassifyMode mode, bool keep_samples) {
    return run_estimate(g, K, T, seed, mode, keep_samples, true);
}

EstimateReport estimate_serial(const Graph& g, std::uint32_t K, std::uint64_t T,
                               std::uint64_t seed, ClassifyMode mode, bool keep_samples) {
    return run_estimate(g, K, T, seed, mode, keep_samples, false);
}

namespace {

// Sub-seed tags for the sweep pipeline; fixed constants so artifacts are
// reproducible across versions.
constexpr std::uint64_t kSweepCouplingTag = 101;
constexpr std::uint64_t kSweepPointTagBase = 1000;

}  // namespace

SweepTable sweep(const GeneratorSpec& spec, std::span<const double> p_grid, std::uint32_t K,
                 std::uint64_t T, std::uint64_t seed, ClassifyMode mode, bool with_exact) {
    return sweep(generate(spec), p_grid, K, T, seed, mode, with_exact);
}

SweepTable sweep(const Graph& base, std::span<const double> p_grid, std::uint32_t K,
                 std::uint64_t T, std::uint64_t seed, ClassifyMode mode, bool with_exact) {
    const PercolationCoupling coupling =
        draw_coupling(base, rng::derive(seed, kSweepCouplingTag));
    SweepTable table;
    table.with_exact = with_exact;
    table.rows.reserve(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        const Graph gp = percolate_at(coupling, p_grid[i]);
        const EstimateReport rep =
            estimate(gp, K, T, rng::derive(seed, kSweepPointTagBase + i), mode);
        SweepRow row;
        row.p = p_grid[i];
        row.i2 = rep.i2;
        row.i2inf = rep.i2inf;
        if (with_exact) {
            const CoreResult core = two_core(gp);
            row.frac_c2 = core.frac_c2;
            row.frac_c2max = core.frac_c2max;
        } else {
            row.frac_c2 = std::nan("");
            row.frac_c2max = std::nan("");
        }
        table.rows.push_back(row);
    }
    return table;
}

namespace {

std::string format_cell(double x) {
    if (std::isnan(x)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

std::string sweep_csv(const SweepTable& table) {
    std::string out = "p,I2,I2inf,frac_c2,frac_c2max\n";
    for (const SweepRow& r : table.rows) {
        out += format_cell(r.p);
        out += ',';
        out += format_cell(r.i2);
        out += ',';
        out += format_cell(r.i2inf);
        out += ',';
        out += format_cell(r.frac_c2);
        out += ',';
        out += format_cell(r.frac_c2max);
        out += '\n';
    }
    return out;
}

}  // namespace twocore
