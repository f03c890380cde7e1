#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "twocore/core.hpp"
#include "twocore/diagnostics.hpp"
#include "twocore/estimator.hpp"
#include "twocore/generators.hpp"
#include "twocore/graph.hpp"
#include "twocore/percolation.hpp"
#include "twocore/rng.hpp"

namespace {

using nlohmann::json;
using namespace twocore;

// Bad flags or config contents; exits 2 where runtime failures exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string gen;    // generator text: compact, inline JSON, or a JSON file
    std::string input;  // edge-list path
    double p = -1.0;
    std::vector<double> p_grid;
    std::uint32_t K = 0;
    std::int64_t T = -1;
    double epsilon = -1.0;
    std::uint64_t seed = 1;
    std::string mode = "semantic";
    bool with_exact = false;
    std::string out;
    std::string plot_out;
    std::string samples_out;
    // diagnose
    double cut_epsilon = -1.0;
    std::size_t iters = 20;
    std::uint32_t ell = 0;
    std::string h_file;
    std::string paths_a;
    std::string paths_b;
    double p_low = -1.0;
    double p_high = -1.0;
    std::size_t h_size = 0;
    // oracle
    double lambda = -1.0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Temp-and-rename so a failed run never leaves a truncated artifact.
void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

GeneratorSpec parse_gen(const std::string& text) {
    if (text.empty()) throw UsageError("empty generator description");
    if (text.front() == '{') {
        try {
            return GeneratorSpec::from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad generator JSON: ") + e.what());
        }
    }
    const auto colon = text.find(':');
    const bool compact = colon != std::string::npos ||
                         text.find_first_not_of(
                             "abcdefghijklmnopqrstuvwxyz_") == std::string::npos;
    if (!compact) {
        try {
            return GeneratorSpec::from_json(json::parse(slurp(text)));
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad generator file: ") + e.what());
        }
    }
    json j;
    j["model"] = text.substr(0, colon);
    j["params"] = json::object();
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::stringstream ss(rest);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("bad generator parameter \"" + pair + "\", want key=value");
        }
        const std::string key = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);
        std::size_t used = 0;
        try {
            const long long as_int = std::stoll(value, &used);
            if (used == value.size()) {
                if (key == "seed") {
                    j["seed"] = static_cast<std::uint64_t>(as_int);
                } else {
                    j["params"][key] = as_int;
                }
                continue;
            }
        } catch (const std::exception&) {
        }
        try {
            const double as_double = std::stod(value, &used);
            if (used == value.size()) {
                j["params"][key] = as_double;
                continue;
            }
        } catch (const std::exception&) {
        }
        throw UsageError("bad generator value \"" + pair + "\"");
    }
    return GeneratorSpec::from_json(j);
}

Graph load_base(const Options& o) {
    if (o.gen.empty() == o.input.empty()) {
        throw UsageError("exactly one input source: --gen or --in");
    }
    if (!o.gen.empty()) return generate(parse_gen(o.gen));
    return read_edge_list_file(o.input);
}

std::vector<VertexId> read_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<VertexId> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t used = 0;
        const unsigned long v = std::stoul(line, &used);
        if (used != line.size() || v > 0xffffffffUL) {
            throw UsageError("bad vertex id \"" + line + "\" in " + path);
        }
        ids.push_back(static_cast<VertexId>(v));
    }
    if (ids.empty()) throw UsageError("no vertex ids in " + path);
    return ids;
}

// Mirror of the effective options, embedded next to every artifact.
json effective_config(const Options& o) {
    json c;
    c["command"] = o.command;
    if (!o.gen.empty()) c["generator"] = parse_gen(o.gen).to_json();
    if (!o.input.empty()) c["input"] = o.input;
    if (o.p >= 0.0) c["p"] = o.p;
    if (!o.p_grid.empty()) c["p_grid"] = o.p_grid;
    if (o.K > 0) c["K"] = o.K;
    if (o.T >= 0) c["T"] = o.T;
    if (o.epsilon >= 0.0) c["epsilon"] = o.epsilon;
    c["seed"] = o.seed;
    if (o.command == "estimate" || o.command == "sweep") c["mode"] = o.mode;
    if (o.with_exact) c["with_exact"] = true;
    if (!o.out.empty()) c["out"] = o.out;
    if (!o.plot_out.empty()) c["plot_out"] = o.plot_out;
    if (!o.samples_out.empty()) c["samples_out"] = o.samples_out;
    if (o.cut_epsilon >= 0.0) {
        c["cut_epsilon"] = o.cut_epsilon;
        c["iters"] = o.iters;
    }
    if (o.ell > 0) c["ell"] = o.ell;
    if (!o.h_file.empty()) c["h_file"] = o.h_file;
    if (!o.paths_a.empty()) c["paths_a"] = o.paths_a;
    if (!o.paths_b.empty()) c["paths_b"] = o.paths_b;
    if (o.p_low >= 0.0) c["p_low"] = o.p_low;
    if (o.p_high >= 0.0) c["p_high"] = o.p_high;
    if (o.h_size > 0) c["h_size"] = o.h_size;
    if (o.lambda >= 0.0) c["lambda"] = o.lambda;
    return c;
}

void write_sidecar(const std::string& artifact, const Options& o) {
    json meta;
    meta["config"] = effective_config(o);
    meta["seed"] = o.seed;
    atomic_write(artifact + ".meta.json", meta.dump(2) + "\n");
}

// Reports go to stdout as a single line unless --out is given.
void emit_report(const json& report, const Options& o) {
    if (o.out.empty()) {
        std::cout << report.dump() << "\n";
        return;
    }
    atomic_write(o.out, report.dump(2) + "\n");
    write_sidecar(o.out, o);
    std::cout << o.command << ": wrote " << o.out << "\n";
}

std::uint64_t resolve_samples(const Options& o) {
    const bool has_t = o.T >= 0;
    const bool has_eps = o.epsilon >= 0.0;
    if (has_t == has_eps) throw UsageError("exactly one of --T or --epsilon");
    if (has_eps) return sample_size(o.epsilon);
    if (o.T < 1) throw UsageError("--T must be at least 1");
    return static_cast<std::uint64_t>(o.T);
}

double require_probability(double p, const char* flag) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(std::string(flag) + " must lie in [0, 1]");
    }
    return p;
}

void run_gen(const Options& o) {
    if (o.gen.empty() || !o.input.empty()) throw UsageError("gen needs --gen");
    if (o.out.empty()) throw UsageError("gen needs --out");
    const GeneratorSpec spec = parse_gen(o.gen);
    const Graph g = generate(spec);
    std::ostringstream ss;
    write_edge_list(ss, g);
    atomic_write(o.out, ss.str());
    write_sidecar(o.out, o);
    std::cout << "gen: model=" << spec.model << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << " -> " << o.out << "\n";
}

void run_percolate(const Options& o) {
    const Graph g = load_base(o);
    require_probability(o.p, "--p");
    if (o.out.empty()) throw UsageError("percolate needs --out");
    const Graph kept = percolate_at(draw_coupling(g, o.seed), o.p);
    std::ostringstream ss;
    write_edge_list(ss, kept);
    atomic_write(o.out, ss.str());
    write_sidecar(o.out, o);
    std::cout << "percolate: p=" << o.p << " kept m=" << kept.edge_count() << " of "
              << g.edge_count() << " -> " << o.out << "\n";
}

void run_exact(const Options& o) {
    Graph g = load_base(o);
    if (o.p >= 0.0) {
        require_probability(o.p, "--p");
        g = percolate_at(draw_coupling(g, o.seed), o.p);
    }
    const CoreResult core = two_core(g);
    json rep;
    rep["n"] = g.vertex_count();
    rep["m"] = g.edge_count();
    rep["frac_cmax"] = core.frac_cmax;
    rep["frac_c2"] = core.frac_c2;
    rep["frac_c2max"] = core.frac_c2max;
    if (o.p >= 0.0) rep["p"] = o.p;
    emit_report(rep, o);
}

void run_estimate(const Options& o) {
    Graph g = load_base(o);
    if (o.p >= 0.0) {
        require_probability(o.p, "--p");
        // Derived coupling seed keeps edge weights independent of the
        // estimator's per-sample keys.
        g = percolate_at(draw_coupling(g, rng::derive(o.seed, 1)), o.p);
    }
    if (o.K < 2) throw UsageError("--K must be at least 2");
    const std::uint64_t samples = resolve_samples(o);
    const ClassifyMode mode = classify_mode_from_string(o.mode);
    EstimateReport rep =
        estimate(g, o.K, samples, o.seed, mode, !o.samples_out.empty());

    json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["K"] = rep.K;
    out["T"] = rep.T;
    out["seed"] = rep.seed;
    out["mode"] = to_string(rep.mode);
    out["i2"] = rep.i2;
    out["i2inf"] = rep.i2inf;
    out["i2_count"] = rep.i2_count;
    out["i2inf_count"] = rep.i2inf_count;
    if (o.epsilon >= 0.0) out["epsilon"] = o.epsilon;
    if (o.p >= 0.0) out["p"] = o.p;
    if (o.with_exact) {
        const CoreResult core = two_core(g);
        out["exact"] = {{"frac_c2", core.frac_c2},
                        {"frac_c2max", core.frac_c2max},
                        {"gap_i2", rep.i2 - core.frac_c2},
                        {"gap_i2inf", rep.i2inf - core.frac_c2max}};
    }
    if (!o.samples_out.empty()) {
        std::string csv = "t,vertex,i2,i2inf\n";
        for (std::size_t t = 0; t < rep.per_sample.size(); ++t) {
            const SampleRecord& r = rep.per_sample[t];
            csv += std::to_string(t) + "," + std::to_string(r.vertex) + "," +
                   std::to_string(int(r.i2)) + "," + std::to_string(int(r.i2inf)) + "\n";
        }
        atomic_write(o.samples_out, csv);
        write_sidecar(o.samples_out, o);
    }
    emit_report(out, o);
}

std::string format_plot_cell(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// 7-column plot CSV; the branching-oracle columns are filled per row from
// lambda = c * p when the base graph came from the erdos_renyi model.
std::string plot_csv(const SweepTable& table, const std::optional<double>& er_c) {
    std::string out = "p,I2,I2inf,frac_c2,frac_c2max,zeta2_oracle,zeta2inf_oracle\n";
    for (const SweepRow& r : table.rows) {
        out += format_plot_cell(r.p);
        out += ',';
        out += format_plot_cell(r.i2);
        out += ',';
        out += format_plot_cell(r.i2inf);
        out += ',';
        out += std::isnan(r.frac_c2) ? "" : format_plot_cell(r.frac_c2);
        out += ',';
        out += std::isnan(r.frac_c2max) ? "" : format_plot_cell(r.frac_c2max);
        out += ',';
        if (er_c) {
            // Tree-limit membership needs two disjoint infinite rays, so the
            // full and giant 2-core limits coincide for this family.
            const BranchingFixedPoint fp = er_branching_oracle(*er_c * r.p);
            out += format_plot_cell(fp.zeta2inf);
            out += ',';
            out += format_plot_cell(fp.zeta2inf);
        } else {
            out += ',';
        }
        out += '\n';
    }
    return out;
}

void run_sweep(const Options& o) {
    const Graph base = load_base(o);
    if (o.p_grid.empty()) throw UsageError("sweep needs --p-grid");
    for (double p : o.p_grid) require_probability(p, "--p-grid");
    if (o.K < 2) throw UsageError("--K must be at least 2");
    if (o.out.empty()) throw UsageError("sweep needs --out");
    const std::uint64_t samples = resolve_samples(o);
    const ClassifyMode mode = classify_mode_from_string(o.mode);
    const SweepTable table =
        sweep(base, o.p_grid, o.K, samples, o.seed, mode, o.with_exact);

    atomic_write(o.out, sweep_csv(table));
    write_sidecar(o.out, o);
    if (!o.plot_out.empty()) {
        std::optional<double> er_c;
        if (!o.gen.empty()) {
            const GeneratorSpec spec = parse_gen(o.gen);
            if (spec.model == "erdos_renyi" && spec.params.contains("c")) {
                er_c = spec.params["c"].get<double>();
            }
        }
        atomic_write(o.plot_out, plot_csv(table, er_c));
        write_sidecar(o.plot_out, o);
    }
    std::cout << "sweep: " << table.rows.size() << " rows -> " << o.out << "\n";
}

void run_diagnose(const Options& o) {
    const Graph g = load_base(o);
    json rep;
    rep["n"] = g.vertex_count();
    rep["m"] = g.edge_count();
    bool ran_any = false;

    if (o.cut_epsilon >= 0.0) {
        const CutWitness w = find_balanced_cut(g, o.cut_epsilon, o.iters, o.seed);
        rep["cut"] = {{"crossing", w.crossing},       {"size_a", w.size_a},
                      {"size_b", w.size_b},           {"epsilon_level", w.epsilon_level},
                      {"delta_level", w.delta_level}, {"side_a", w.side_a}};
        ran_any = true;
    }
    if (!o.paths_a.empty() || !o.paths_b.empty()) {
        if (o.paths_a.empty() || o.paths_b.empty()) {
            throw UsageError("--paths needs two files");
        }
        const std::vector<VertexId> a = read_vertex_file(o.paths_a);
        const std::vector<VertexId> b = read_vertex_file(o.paths_b);
        rep["paths"] = {{"count", edge_disjoint_paths(g, a, b)},
                        {"a_size", a.size()},
                        {"b_size", b.size()}};
        ran_any = true;
    }
    if (!o.h_file.empty()) {
        if (o.ell < 1) throw UsageError("coloring needs --ell");
        const std::vector<VertexId> h = read_vertex_file(o.h_file);
        const ColoredForest cf = color_forest(g, h, o.ell);
        std::size_t red = 0, purple = 0, black = 0, gray = 0, complete = 0;
        for (VertexColor c : cf.color) {
            red += c == VertexColor::red;
            purple += c == VertexColor::purple;
            black += c == VertexColor::black;
            gray += c == VertexColor::gray;
        }
        for (const Segment& s : cf.segments) complete += s.complete;
        const UpstreamBoundReport ub = verify_upstream_bound(cf);
        rep["coloring"] = {{"ell", o.ell},
                           {"red", red},
                           {"purple", purple},
                           {"black", black},
                           {"gray", gray},
                           {"segments", cf.segments.size()},
                           {"complete_segments", complete},
                           {"checked", ub.checked},
                           {"red_skipped", ub.red_skipped},
                           {"gray_skipped", ub.gray_skipped},
                           {"violations", ub.violations.size()}};
        ran_any = true;
    }
    if (o.p_low >= 0.0 || o.p_high >= 0.0) {
        if (o.p_low < 0.0 || o.p_high < 0.0) {
            throw UsageError("seed-core needs both --p-low and --p-high");
        }
        if (o.ell < 1) throw UsageError("seed-core needs --ell");
        const SeedCoreReport r =
            seed_core_experiment(g, o.p_low, o.p_high, o.ell, o.seed, o.h_size);
        rep["seed_core"] = {{"n", r.n},
                            {"c_max_low", r.c_max_low},
                            {"h_size", r.h_size},
                            {"f_components", r.f_components},
                            {"f_vertices", r.f_vertices},
                            {"paths", r.paths},
                            {"paths_filtered", r.paths_filtered},
                            {"c_max_high", r.c_max_high},
                            {"core_in_c_max", r.core_in_c_max},
                            {"core_nonempty", r.core_nonempty}};
        ran_any = true;
    }
    if (!ran_any) {
        throw UsageError(
            "diagnose needs --cut-epsilon, --paths, --h-file with --ell, or "
            "--p-low/--p-high");
    }
    emit_report(rep, o);
}

void run_oracle(const Options& o) {
    if (o.lambda < 0.0) throw UsageError("oracle needs --lambda >= 0");
    const BranchingFixedPoint fp = er_branching_oracle(o.lambda);
    json rep;
    rep["lambda"] = o.lambda;
    rep["zeta"] = fp.zeta;
    rep["zeta2inf"] = fp.zeta2inf;
    emit_report(rep, o);
}

void execute(const Options& o) {
    if (o.command == "gen") return run_gen(o);
    if (o.command == "percolate") return run_percolate(o);
    if (o.command == "exact") return run_exact(o);
    if (o.command == "estimate") return run_estimate(o);
    if (o.command == "sweep") return run_sweep(o);
    if (o.command == "diagnose") return run_diagnose(o);
    if (o.command == "oracle") return run_oracle(o);
    throw UsageError("unknown command \"" + o.command + "\"");
}

Options options_from_config(const std::string& path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad config JSON: ") + e.what());
    }
    Options o;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "command") {
                o.command = value.get<std::string>();
            } else if (key == "generator") {
                o.gen = value.is_string() ? value.get<std::string>() : value.dump();
            } else if (key == "input") {
                o.input = value.get<std::string>();
            } else if (key == "p") {
                o.p = value.get<double>();
            } else if (key == "p_grid") {
                o.p_grid = value.get<std::vector<double>>();
            } else if (key == "K") {
                o.K = value.get<std::uint32_t>();
            } else if (key == "T") {
                o.T = value.get<std::int64_t>();
            } else if (key == "epsilon") {
                o.epsilon = value.get<double>();
            } else if (key == "seed") {
                o.seed = value.get<std::uint64_t>();
            } else if (key == "mode") {
                o.mode = value.get<std::string>();
            } else if (key == "with_exact") {
                o.with_exact = value.get<bool>();
            } else if (key == "out") {
                o.out = value.get<std::string>();
            } else if (key == "plot_out") {
                o.plot_out = value.get<std::string>();
            } else if (key == "samples_out") {
                o.samples_out = value.get<std::string>();
            } else if (key == "cut_epsilon") {
                o.cut_epsilon = value.get<double>();
            } else if (key == "iters") {
                o.iters = value.get<std::size_t>();
            } else if (key == "ell") {
                o.ell = value.get<std::uint32_t>();
            } else if (key == "h_file") {
                o.h_file = value.get<std::string>();
            } else if (key == "paths_a") {
                o.paths_a = value.get<std::string>();
            } else if (key == "paths_b") {
                o.paths_b = value.get<std::string>();
            } else if (key == "p_low") {
                o.p_low = value.get<double>();
            } else if (key == "p_high") {
                o.p_high = value.get<double>();
            } else if (key == "h_size") {
                o.h_size = value.get<std::size_t>();
            } else if (key == "lambda") {
                o.lambda = value.get<double>();
            } else {
                throw UsageError("unknown config key \"" + key + "\"");
            }
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad config value: ") + e.what());
    }
    if (o.command.empty()) throw UsageError("config needs a \"command\" key");
    return o;
}

void add_common_flags(CLI::App* cmd, Options& o, bool graph_input) {
    if (graph_input) {
        cmd->add_option("--gen", o.gen,
                        "generator: compact (er:n=1000,c=4), inline JSON, or a JSON file");
        cmd->add_option("--in", o.input, "edge-list input file");
    }
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--out", o.out, "output artifact path");
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("TWOCORE_THREADS")) {
        const int k = std::atoi(env);
        if (k > 0) omp_set_num_threads(k);
    }

    Options o;
    std::string config_path;

    CLI::App app{"local 2-core estimation toolkit"};
    app.require_subcommand(0, 1);
    app.add_option("--config", config_path, "run a JSON config instead of a subcommand");

    CLI::App* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
    add_common_flags(gen, o, true);

    CLI::App* percolate =
        app.add_subcommand("percolate", "keep each edge independently with probability p");
    add_common_flags(percolate, o, true);
    percolate->add_option("--p", o.p, "retention probability");

    CLI::App* exact = app.add_subcommand("exact", "exact 2-core and component fractions");
    add_common_flags(exact, o, true);
    exact->add_option("--p", o.p, "percolate first at this probability");

    CLI::App* estimate = app.add_subcommand("estimate", "sampled 2-core membership fractions");
    add_common_flags(estimate, o, true);
    estimate->add_option("--p", o.p, "percolate first at this probability");
    estimate->add_option("--K", o.K, "neighborhood exploration budget");
    estimate->add_option("--T", o.T, "sample count");
    estimate->add_option("--epsilon", o.epsilon, "accuracy target that picks T");
    estimate->add_option("--mode", o.mode, "classifier variant: semantic or literal");
    estimate->add_flag("--with-exact", o.with_exact, "also run the exact oracle");
    estimate->add_option("--samples-out", o.samples_out, "per-sample CSV path");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "estimate across a probability grid");
    add_common_flags(sweep_cmd, o, true);
    sweep_cmd->add_option("--p-grid", o.p_grid, "comma-separated probabilities")
        ->delimiter(',');
    sweep_cmd->add_option("--K", o.K, "neighborhood exploration budget");
    sweep_cmd->add_option("--T", o.T, "sample count per grid point");
    sweep_cmd->add_option("--epsilon", o.epsilon, "accuracy target that picks T");
    sweep_cmd->add_option("--mode", o.mode, "classifier variant: semantic or literal");
    sweep_cmd->add_flag("--with-exact", o.with_exact, "also run the exact oracle per point");
    sweep_cmd->add_option("--plot-out", o.plot_out, "7-column CSV with oracle columns");

    CLI::App* diagnose = app.add_subcommand("diagnose", "structural reports on one graph");
    add_common_flags(diagnose, o, true);
    diagnose->add_option("--cut-epsilon", o.cut_epsilon, "balance level for the cut search");
    diagnose->add_option("--iters", o.iters, "cut search restarts");
    diagnose->add_option("--ell", o.ell, "localization parameter");
    diagnose->add_option("--h-file", o.h_file, "seed set file for forest coloring");
    diagnose->add_option("--paths", [&o](const std::vector<std::string>& vals) {
        o.paths_a = vals.at(0);
        o.paths_b = vals.at(1);
        return true;
    }, "two vertex-set files for disjoint path counting")->expected(2);
    diagnose->add_option("--p-low", o.p_low, "seed-core base retention");
    diagnose->add_option("--p-high", o.p_high, "seed-core sprinkle target");
    diagnose->add_option("--h-size", o.h_size, "seed-core H size (0 = default)");

    CLI::App* oracle = app.add_subcommand("oracle", "branching fixed-point values");
    oracle->add_option("--lambda", o.lambda, "mean offspring count");
    oracle->add_option("--out", o.out, "output artifact path");
    oracle->add_option("--seed", o.seed, "master seed (recorded in sidecars)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const auto chosen = app.get_subcommands();
        if (!config_path.empty()) {
            if (!chosen.empty()) {
                throw UsageError("--config conflicts with a subcommand");
            }
            execute(options_from_config(config_path));
        } else {
            if (chosen.empty()) throw UsageError("need a subcommand or --config");
            o.command = chosen.front()->get_name();
            execute(o);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
