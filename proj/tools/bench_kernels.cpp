#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "twocore/core.hpp"
#include "twocore/estimator.hpp"
#include "twocore/generators.hpp"
#include "twocore/graph.hpp"
#include "twocore/percolation.hpp"

namespace {

using namespace twocore;

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, seconds(t0, t1));
    }
    return best;
}

void print_row(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 200000;
    double c = 4.0;
    int reps = 3;
    if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) c = std::strtod(argv[2], nullptr);
    if (argc > 3) reps = std::atoi(argv[3]);

    GeneratorSpec spec;
    spec.model = "erdos_renyi";
    spec.params = {{"n", n}, {"c", c}};
    spec.seed = 7;
    const Graph base = generate(spec);
    const Graph g = percolate_at(draw_coupling(base, 11), 0.7);
    std::printf("graph: er n=%zu c=%.2f, percolated p=0.7 -> m=%zu, threads=%d, best of %d\n\n",
                n, c, g.edge_count(), omp_get_max_threads(), reps);
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    bool all_identical = true;

    {
        EstimateReport serial_rep, parallel_rep;
        const double ts = time_best_of(
            reps, [&] { serial_rep = estimate_serial(g, 200, 20000, 42); });
        const double tp =
            time_best_of(reps, [&] { parallel_rep = estimate(g, 200, 20000, 42); });
        const bool same = serial_rep.i2_count == parallel_rep.i2_count &&
                          serial_rep.i2inf_count == parallel_rep.i2inf_count &&
                          serial_rep.i2 == parallel_rep.i2 &&
                          serial_rep.i2inf == parallel_rep.i2inf;
        all_identical &= same;
        print_row("estimate K=200 T=20000", ts, tp, same);
    }
    {
        std::vector<std::uint8_t> serial_set, parallel_set;
        const double ts =
            time_best_of(reps, [&] { serial_set = c2_ell_set_serial(g, 6); });
        const double tp = time_best_of(reps, [&] { parallel_set = c2_ell_set(g, 6); });
        const bool same = serial_set == parallel_set;
        all_identical &= same;
        print_row("c2_ell_set ell=6", ts, tp, same);
    }

    if (!all_identical) {
        std::printf("\nserial and parallel kernels disagree\n");
        return 1;
    }
    return 0;
}
