#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twocore/generators.hpp"
#include "twocore/graph.hpp"
#include "twocore/percolation.hpp"

namespace twocore {

// Truncated BFS neighborhood of a root. Levels are admitted whole while the
// cumulative size stays <= K, so R is the largest radius whose ball fits.
// A root of degree >= K short-circuits to the degree_overflow ball {root}.
struct Ball {
    VertexId root = 0;
    std::uint32_t R = 0;
    bool truncated = false;
    bool degree_overflow = false;
    std::vector<VertexId> members;  // BFS order; members[0] == root
    std::vector<std::uint32_t> dist;
    // Every base-graph edge with both endpoints in members, as sorted pairs of
    // local indices into members (intra-frontier edges included).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> induced_edges;
    std::vector<std::uint8_t> frontier;  // distance == R, only when truncated

    std::size_t S() const { return members.size(); }
};

Ball explore_ball(const Graph& g, VertexId v, std::uint32_t K);

// Per-sample verdict. i2: the root cannot be ruled out of the 2-core from the
// ball alone. i2inf: additionally, the root's surviving neighborhood connects
// to the unexplored boundary, so it cannot be ruled out of a giant 2-core
// component either.
struct Classification {
    bool i2 = false;
    bool i2inf = false;
};

// semantic: i2inf requires the root's surviving component to contain a
// frontier vertex after protected peeling. literal: i2inf is just i2 on a
// truncated ball. The two coincide on every ball (a surviving root always
// keeps an intact path to the frontier, whose interior never peels); both
// are kept so the equivalence stays checkable.
enum class ClassifyMode { semantic, literal };

ClassifyMode classify_mode_from_string(const std::string& name);
std::string to_string(ClassifyMode mode);

Classification classify(const Ball& ball, ClassifyMode mode = ClassifyMode::semantic);

// Smallest sample count T with the two-sided Hoeffding guarantee
// P(|mean - E| >= eps/4) <= eps/4, i.e. T = ceil((8/eps^2) ln(8/eps)).
std::uint64_t sample_size(double epsilon);

struct SampleRecord {
    VertexId vertex;
    std::uint8_t i2;
    std::uint8_t i2inf;
};

struct ExactComparison {
    double frac_c2 = 0.0;
    double frac_c2max = 0.0;
    double gap_i2 = 0.0;     // i2 - frac_c2
    double gap_i2inf = 0.0;  // i2inf - frac_c2max
};

struct EstimateReport {
    double i2 = 0.0;
    double i2inf = 0.0;
    std::uint64_t T = 0;
    std::uint32_t K = 0;
    std::optional<double> epsilon;
    std::uint64_t seed = 0;
    ClassifyMode mode = ClassifyMode::semantic;
    std::uint64_t i2_count = 0;
    std::uint64_t i2inf_count = 0;
    std::vector<SampleRecord> per_sample;       // filled only on request
    std::optional<ExactComparison> exact_comparison;
};

// T independent vertex draws; sample t and everything it consumes derive from
// (seed, t), and the tallies are exact integer sums, so the report is
// bit-identical for any execution order or worker count. estimate runs the
// samples under OpenMP; estimate_serial is the reference loop.
EstimateReport estimate(const Graph& g, std::uint32_t K, std::uint64_t T, std::uint64_t seed,
                        ClassifyMode mode = ClassifyMode::semantic, bool keep_samples = false);
EstimateReport estimate_serial(const Graph& g, std::uint32_t K, std::uint64_t T,
                               std::uint64_t seed, ClassifyMode mode = ClassifyMode::semantic,
                               bool keep_samples = false);

struct SweepRow {
    double p = 0.0;
    double i2 = 0.0;
    double i2inf = 0.0;
    // NaN when exact fractions were not requested.
    double frac_c2 = 0.0;
    double frac_c2max = 0.0;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    bool with_exact = false;
};

// One generated base graph, one coupling; per grid point percolate and rerun
// the estimator (plus the exact oracle when requested). The coupling seed and
// the per-point sample seeds all derive from `seed`.
SweepTable sweep(const GeneratorSpec& spec, std::span<const double> p_grid, std::uint32_t K,
                 std::uint64_t T, std::uint64_t seed, ClassifyMode mode = ClassifyMode::semantic,
                 bool with_exact = false);
SweepTable sweep(const Graph& base, std::span<const double> p_grid, std::uint32_t K,
                 std::uint64_t T, std::uint64_t seed, ClassifyMode mode = ClassifyMode::semantic,
                 bool with_exact = false);

// 5-column CSV per row: p,I2,I2inf,frac_c2,frac_c2max (exact cells blank when
// absent), 6 significant digits, LF endings.
std::string sweep_csv(const SweepTable& table);

}  // namespace twocore
