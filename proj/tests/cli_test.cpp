#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "support/oracles.hpp"
#include "twocore/core.hpp"
#include "twocore/estimator.hpp"
#include "twocore/graph.hpp"

namespace {

using nlohmann::json;
using namespace twocore;
using twocore::testing::cycle_graph;
using twocore::testing::path_graph;

struct CliResult {
    int status = -1;
    std::string out;
};

// Runs the built binary through the shell, merging stderr into the capture.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + std::string(TWOCORE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    REQUIRE(WIFEXITED(rc));
    return {WEXITSTATUS(rc), out};
}

std::string scratch_path(const std::string& name) {
    static const std::filesystem::path dir = [] {
        const auto d = std::filesystem::temp_directory_path() / "twocore_cli_test";
        std::filesystem::create_directories(d);
        return d;
    }();
    return (dir / name).string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
}

json parse_line(const CliResult& r) {
    REQUIRE(r.status == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("oracle reports the branching fixed point") {
    const json rep = parse_line(run_cli("oracle --lambda 2"));
    const BranchingFixedPoint fp = er_branching_oracle(2.0);
    CHECK(rep["lambda"].get<double>() == 2.0);
    CHECK(rep["zeta"].get<double>() == doctest::Approx(fp.zeta).epsilon(1e-12));
    CHECK(rep["zeta2inf"].get<double>() == doctest::Approx(fp.zeta2inf).epsilon(1e-12));
    CHECK(rep["zeta"].get<double>() == doctest::Approx(0.7968).epsilon(1e-3));
    CHECK(rep["zeta2inf"].get<double>() == doctest::Approx(0.4730).epsilon(1e-3));
}

TEST_CASE("estimate on an edgeless graph returns zero") {
    const json rep = parse_line(
        run_cli("estimate --gen er:n=1000,c=0 --p 1 --K 20 --T 100 --seed 1"));
    CHECK(rep["i2"].get<double>() == 0.0);
    CHECK(rep["i2inf"].get<double>() == 0.0);
    CHECK(rep["n"].get<std::size_t>() == 1000);
    CHECK(rep["m"].get<std::size_t>() == 0);
    CHECK(rep["T"].get<std::uint64_t>() == 100);
}

TEST_CASE("estimate resolves T from epsilon") {
    const json rep = parse_line(
        run_cli("estimate --gen er:n=50,c=1,seed=3 --K 10 --epsilon 0.5 --seed 2"));
    CHECK(rep["T"].get<std::uint64_t>() == sample_size(0.5));
    CHECK(rep["epsilon"].get<double>() == 0.5);
}

TEST_CASE("sweep over a full-retention cycle") {
    const std::string in = scratch_path("c1000.txt");
    const std::string out = scratch_path("c1000_sweep.csv");
    write_edge_list_file(in, cycle_graph(1000));
    const CliResult r = run_cli("sweep --in " + in +
                                " --p-grid 1 --K 12 --T 200 --seed 4 --with-exact --out " + out);
    REQUIRE(r.status == 0);
    CHECK(read_file(out) == "p,I2,I2inf,frac_c2,frac_c2max\n1,1,1,1,1\n");
}

TEST_CASE("plot output leaves oracle columns blank off the branching family") {
    const std::string out = scratch_path("reg_sweep.csv");
    const std::string plot = scratch_path("reg_plot.csv");
    const CliResult r = run_cli(
        "sweep --gen random_regular:n=50,d=2,seed=3 --p-grid 0,1 --K 8 --T 50 "
        "--seed 5 --with-exact --out " + out + " --plot-out " + plot);
    REQUIRE(r.status == 0);
    const std::string csv = read_file(plot);
    std::stringstream ss(csv);
    std::string header, row0;
    std::getline(ss, header);
    std::getline(ss, row0);
    CHECK(header == "p,I2,I2inf,frac_c2,frac_c2max,zeta2_oracle,zeta2inf_oracle");
    CHECK(row0 == "0,0,0,0,0,,");
}

TEST_CASE("plot output fills oracle columns for the branching family") {
    const std::string out = scratch_path("er_sweep.csv");
    const std::string plot = scratch_path("er_plot.csv");
    const CliResult r =
        run_cli("sweep --gen er:n=400,c=4,seed=9 --p-grid 0.8 --K 25 --T 200 "
                "--seed 6 --out " + out + " --plot-out " + plot);
    REQUIRE(r.status == 0);
    std::stringstream ss(read_file(plot));
    std::string header, row;
    std::getline(ss, header);
    std::getline(ss, row);
    const auto last_comma = row.rfind(',');
    const auto prev_comma = row.rfind(',', last_comma - 1);
    const double z2 = std::stod(row.substr(prev_comma + 1, last_comma - prev_comma - 1));
    const double z2inf = std::stod(row.substr(last_comma + 1));
    const BranchingFixedPoint fp = er_branching_oracle(4.0 * 0.8);
    CHECK(z2 == doctest::Approx(fp.zeta2inf).epsilon(1e-5));
    CHECK(z2inf == doctest::Approx(fp.zeta2inf).epsilon(1e-5));
    // Exact columns stay blank without --with-exact.
    std::stringstream ws(read_file(out));
    std::getline(ws, header);
    std::getline(ws, row);
    CHECK(row.find(",,") != std::string::npos);
}

TEST_CASE("exact matches the library on a generated graph") {
    const std::string in = scratch_path("gen_exact.txt");
    const CliResult g =
        run_cli("gen --gen er:n=300,c=3,seed=11 --out " + in);
    REQUIRE(g.status == 0);
    const json rep = parse_line(run_cli("exact --in " + in));
    const Graph base = read_edge_list_file(in);
    const CoreResult core = two_core(base);
    CHECK(rep["n"].get<std::size_t>() == base.vertex_count());
    CHECK(rep["m"].get<std::size_t>() == base.edge_count());
    CHECK(rep["frac_c2"].get<double>() == core.frac_c2);
    CHECK(rep["frac_c2max"].get<double>() == core.frac_c2max);
    CHECK(rep["frac_cmax"].get<double>() == core.frac_cmax);
    // The same generator description given inline yields the same report.
    const json rep2 = parse_line(run_cli("exact --gen er:n=300,c=3,seed=11"));
    CHECK(rep2 == rep);
}

TEST_CASE("artifacts are byte-identical across reruns and worker counts") {
    const std::string a = scratch_path("det_a.json");
    const std::string b = scratch_path("det_b.json");
    const std::string args =
        "estimate --gen er:n=2000,c=4,seed=2 --p 0.6 --K 50 --T 2000 --seed 42 "
        "--with-exact --out ";
    REQUIRE(run_cli(args + a).status == 0);
    REQUIRE(run_cli(args + b, "TWOCORE_THREADS=3 ").status == 0);
    CHECK(read_file(a) == read_file(b));
    const json meta = json::parse(read_file(a + ".meta.json"));
    CHECK(meta["seed"].get<std::uint64_t>() == 42);
    CHECK(meta["config"]["command"] == "estimate");
    CHECK(meta["config"]["K"].get<std::uint32_t>() == 50);
    CHECK(meta["config"]["generator"]["model"] == "erdos_renyi");
}

TEST_CASE("per-sample records round-trip through the CSV") {
    const std::string csv = scratch_path("samples.csv");
    const CliResult r = run_cli(
        "estimate --gen er:n=200,c=3,seed=5 --K 30 --T 20 --seed 7 --samples-out " + csv);
    const json rep = parse_line(r);
    std::stringstream ss(read_file(csv));
    std::string line;
    std::getline(ss, line);
    CHECK(line == "t,vertex,i2,i2inf");
    std::size_t rows = 0, i2_sum = 0, i2inf_sum = 0;
    while (std::getline(ss, line)) {
        std::stringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        CHECK(std::stoul(cell) == rows);
        std::getline(row, cell, ',');
        CHECK(std::stoul(cell) < 200);
        std::getline(row, cell, ',');
        i2_sum += std::stoul(cell);
        std::getline(row, cell, ',');
        i2inf_sum += std::stoul(cell);
        ++rows;
    }
    CHECK(rows == 20);
    CHECK(i2_sum == rep["i2_count"].get<std::size_t>());
    CHECK(i2inf_sum == rep["i2inf_count"].get<std::size_t>());
}

TEST_CASE("diagnose assembles the requested parts") {
    const std::string in = scratch_path("diag_path.txt");
    const std::string h = scratch_path("diag_h.txt");
    write_edge_list_file(in, path_graph(30));
    write_file(h, "# seed set\n0\n");
    const json rep =
        parse_line(run_cli("diagnose --in " + in + " --h-file " + h + " --ell 4"));
    CHECK(rep["coloring"]["red"].get<std::size_t>() == 4);
    CHECK(rep["coloring"]["purple"].get<std::size_t>() == 12);
    CHECK(rep["coloring"]["violations"].get<std::size_t>() == 0);
    CHECK(rep["coloring"]["complete_segments"].get<std::size_t>() == 4);

    const std::string a = scratch_path("diag_a.txt");
    const std::string b = scratch_path("diag_b.txt");
    const std::string cyc = scratch_path("diag_cycle.txt");
    write_edge_list_file(cyc, cycle_graph(30));
    write_file(a, "0\n");
    write_file(b, "10\n11\n");
    const json paths =
        parse_line(run_cli("diagnose --in " + cyc + " --paths " + a + " " + b));
    CHECK(paths["paths"]["count"].get<std::size_t>() == 2);

    const json seeded = parse_line(run_cli(
        "diagnose --gen er:n=3000,c=4,seed=11 --p-low 0.5 --p-high 0.7 --ell 3 --seed 5"));
    CHECK(seeded["seed_core"]["core_nonempty"].get<bool>() == true);
    CHECK(seeded["seed_core"]["c_max_high"].get<std::size_t>() >=
          seeded["seed_core"]["c_max_low"].get<std::size_t>());

    const json cut = parse_line(run_cli(
        "diagnose --gen er:n=120,c=4,seed=7 --cut-epsilon 0.3 --iters 4 --seed 3"));
    CHECK(cut["cut"]["size_a"].get<std::size_t>() +
              cut["cut"]["size_b"].get<std::size_t>() == 120);
    CHECK(cut["cut"]["size_a"].get<std::size_t>() >= 36);
}

TEST_CASE("config files drive a full run") {
    const std::string cfg = scratch_path("run.json");
    const std::string out = scratch_path("cfg_out.json");
    json j;
    j["command"] = "estimate";
    j["generator"] = "er:n=500,c=3,seed=8";
    j["p"] = 0.7;
    j["K"] = 30;
    j["T"] = 500;
    j["seed"] = 13;
    j["out"] = out;
    write_file(cfg, j.dump());
    REQUIRE(run_cli("--config " + cfg).status == 0);
    const json by_config = json::parse(read_file(out));
    const std::string out2 = scratch_path("cfg_out2.json");
    REQUIRE(run_cli("estimate --gen er:n=500,c=3,seed=8 --p 0.7 --K 30 --T 500 "
                    "--seed 13 --out " + out2).status == 0);
    CHECK(by_config == json::parse(read_file(out2)));
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("estimate --gen er:n=10,c=1 --K 5 --T 10 --epsilon 0.5").status == 2);
    CHECK(run_cli("estimate --gen er:n=10,c=1 --K 5").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("estimate --K 5 --T 10").status == 2);
    CHECK(run_cli("sweep --gen er:n=10,c=1 --p-grid 0.5 --K 5 --T 10").status == 2);
    CHECK(run_cli("oracle --lambda -1").status == 2);
    CHECK(run_cli("estimate --gen er:n=10,c=1 --in x.txt --K 5 --T 10").status == 2);
    CHECK(run_cli("estimate --gen 'er:n=10,c=1' --K 5 --T 10 --p 1.5").status == 2);
    const std::string cfg = scratch_path("bad_key.json");
    write_file(cfg, "{\"command\":\"oracle\",\"lambda\":2,\"bogus\":1}");
    CHECK(run_cli("--config " + cfg).status == 2);
    CHECK(run_cli("--config " + cfg + " oracle --lambda 1").status == 2);
    CHECK(run_cli("").status == 2);
}

TEST_CASE("runtime failures exit with status 1") {
    CHECK(run_cli("exact --in " + scratch_path("missing.txt")).status == 1);
    const std::string cyc = scratch_path("rt_cycle.txt");
    const std::string h = scratch_path("rt_h.txt");
    write_edge_list_file(cyc, cycle_graph(30));
    write_file(h, "0\n");
    // A cycle hangs off a single seed vertex at both ends.
    CHECK(run_cli("diagnose --in " + cyc + " --h-file " + h + " --ell 4").status == 1);
}

}
