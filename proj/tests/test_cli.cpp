#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nhkit/cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace nhkit;
namespace fs = std::filesystem;

namespace {

int entry(std::vector<const char*> argv) {
    return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

cli::RunConfig parse(std::vector<const char*> argv) {
    return cli::parse_config(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("nhkit_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

nlohmann::json meta_of(const fs::path& dir, const std::string& command) {
    return nlohmann::json::parse(slurp(dir / (command + ".meta.json")));
}

}  // namespace

TEST_CASE("parse_config: flags land in the right fields") {
    const auto cfg = parse(
        {"nhchain", "quench-scan", "--J", "2", "--delta-a", "1.5", "--delta-b",
         "0.5", "--mu", "0.25", "--N", "16", "--boundary", "open", "--scan",
         "ratio", "--values", "1.5,3,7", "--t-max", "40", "--t-steps", "100",
         "--threshold", "0.25", "--output", "/tmp/nowhere"});
    CHECK(cfg.command == "quench-scan");
    CHECK(cfg.params.J == 2.0);
    CHECK(cfg.params.delta_a == 1.5);
    CHECK(cfg.params.delta_b == 0.5);
    CHECK(cfg.params.mu == 0.25);
    CHECK(cfg.params.cells == 16);
    CHECK(cfg.params.boundary == model::Boundary::open);
    CHECK(cfg.scan_parameter == "ratio");
    CHECK(cfg.scan_values == std::vector<double>{1.5, 3.0, 7.0});
    CHECK(cfg.t_max == 40.0);
    CHECK(cfg.t_steps == 100);
    CHECK(cfg.threshold == 0.25);
    CHECK(cfg.output_dir == "/tmp/nowhere");
}

TEST_CASE("parse_config: constraint violations carry actionable messages") {
    CHECK_THROWS_WITH_AS(parse({"nhchain", "spectrum", "--N", "7"}),
                         "N must be even and at least 2",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse({"nhchain", "spectrum", "--N", "0"}),
                         "N must be even and at least 2",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse({"nhchain", "spin-check", "--sites", "7"}),
                         "sites must be even, between 2 and 12",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse({"nhchain", "fixed-line-drive", "--dt", "0"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse({"nhchain", "fixed-line-drive", "--T", "-1"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse({"nhchain", "quench-scan", "--t-steps", "0"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse({"nhchain", "quench-scan", "--threshold", "1.5"}),
                    std::invalid_argument);
}

TEST_CASE("parse_config: parser-level outcomes surface as exit requests") {
    int unknown_flag = -1;
    try {
        parse({"nhchain", "spectrum", "--bogus", "1"});
    } catch (const cli::ExitRequest& e) {
        unknown_flag = e.code;
    }
    CHECK(unknown_flag == 2);

    int help = -1;
    try {
        parse({"nhchain", "--help"});
    } catch (const cli::ExitRequest& e) {
        help = e.code;
    }
    CHECK(help == 0);

    CHECK(entry({"nhchain"}) == 2);
    CHECK(entry({"nhchain", "no-such-command"}) == 2);
}

TEST_CASE("parse_config: flags override the config file") {
    const fs::path dir = fresh_dir("config");
    const fs::path cfile = dir / "run.cfg";
    const std::string cpath = cfile.string();
    {
        std::ofstream out(cfile);
        out << "N = 8\ndelta-a = 1.7\n";
    }
    const auto from_file =
        parse({"nhchain", "spectrum", "--config", cpath.c_str()});
    CHECK(from_file.params.cells == 8);
    CHECK(from_file.params.delta_a == 1.7);

    const auto overridden = parse(
        {"nhchain", "spectrum", "--config", cpath.c_str(), "--N", "16"});
    CHECK(overridden.params.cells == 16);
    CHECK(overridden.params.delta_a == 1.7);

    {
        std::ofstream out(cfile, std::ios::trunc);
        out << "bogus = 1\n";
    }
    int code = -1;
    try {
        parse({"nhchain", "spectrum", "--config", cpath.c_str()});
    } catch (const cli::ExitRequest& e) {
        code = e.code;
    }
    CHECK(code == 2);
}

TEST_CASE("spectrum command writes a table and a metadata sidecar") {
    const fs::path dir = fresh_dir("spectrum");
    const std::string out = dir.string();
    CHECK(entry({"nhchain", "spectrum", "--N", "8", "--delta-a", "1.5",
                 "--delta-b", "0.5", "--output", out.c_str()}) == 0);
    REQUIRE(fs::exists(dir / "spectrum.csv"));
    REQUIRE(fs::exists(dir / "spectrum.meta.json"));

    const std::string csv = slurp(dir / "spectrum.csv");
    CHECK(csv.rfind("k,rho,sigma,re_closed,im_closed,re_eig,im_eig,abs_diff\n",
                    0) == 0);
    // three interior momentum pairs, four bands each, plus the header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);

    const auto meta = meta_of(dir, "spectrum");
    CHECK(meta["command"] == "spectrum");
    CHECK(meta["params"]["cells"] == 8);
    CHECK(meta["params"]["boundary"] == "periodic");
    CHECK(meta["max_abs_diff"].get<double>() <= 1e-10);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    const std::string sa = a.string(), sb = b.string();
    const std::vector<const char*> base = {"nhchain",   "ground-state", "--N",
                                           "4",         "--delta-a",    "1.8",
                                           "--delta-b", "0.2",          "--output"};
    auto run_into = [&](const std::string& dir) {
        auto argv = base;
        argv.push_back(dir.c_str());
        CHECK(entry(argv) == 0);
    };
    run_into(sa);
    run_into(sb);
    CHECK(slurp(a / "ground-state.csv") == slurp(b / "ground-state.csv"));
    CHECK(slurp(a / "ground-state.meta.json") ==
          slurp(b / "ground-state.meta.json"));
    CHECK_FALSE(slurp(a / "ground-state.csv").empty());
}

TEST_CASE("zero-modes command reports the impurity couplings and residuals") {
    const fs::path dir = fresh_dir("zero_modes");
    const std::string out = dir.string();
    CHECK(entry({"nhchain", "zero-modes", "--delta-a", "2", "--delta-b", "0",
                 "--N", "4", "--output", out.c_str()}) == 0);
    const auto meta = meta_of(dir, "zero-modes");
    CHECK(meta["branch"] == "minus");
    CHECK(meta["gamma"].get<double>() ==
          doctest::Approx(2.0 * std::sqrt(2.0) - 3.0).epsilon(1e-12));
    CHECK(meta["lambda"].get<double>() ==
          doctest::Approx(0.9991334).epsilon(1e-6));
    CHECK(meta["residual_left"].get<double>() <= 1e-10);
    CHECK(meta["residual_right"].get<double>() <= 1e-10);

    const std::string csv = slurp(dir / "zero-modes.csv");
    CHECK(csv.rfind("state,site,sublattice,re,im,abs\n", 0) == 0);
}

TEST_CASE("quench-scan: computed columns exit zero, total failure exits three") {
    const fs::path ok_dir = fresh_dir("scan_ok");
    const std::string ok_out = ok_dir.string();
    CHECK(entry({"nhchain", "quench-scan", "--N", "4", "--delta-a", "1.5",
                 "--delta-b", "0.5", "--values", "0,0.01", "--t-max", "5",
                 "--t-steps", "10", "--output", ok_out.c_str()}) == 0);
    const auto ok_meta = meta_of(ok_dir, "quench-scan");
    REQUIRE(ok_meta["drop_times"].size() == 2);
    CHECK(ok_meta["drop_times"][0].is_null());
    for (const auto& err : ok_meta["cell_errors"]) {
        CHECK(err.get<std::string>().empty());
    }

    // far beyond the overflow horizon every column dies, but each failure is
    // recorded rather than aborting the run
    const fs::path bad_dir = fresh_dir("scan_bad");
    const std::string bad_out = bad_dir.string();
    CHECK(entry({"nhchain", "quench-scan", "--N", "4", "--delta-a", "1.5",
                 "--delta-b", "0.5", "--values", "0.2,0.5", "--t-max",
                 "100000", "--t-steps", "4", "--output",
                 bad_out.c_str()}) == 3);
    const auto bad_meta = meta_of(bad_dir, "quench-scan");
    REQUIRE(bad_meta["cell_errors"].size() == 2);
    for (const auto& err : bad_meta["cell_errors"]) {
        CHECK_FALSE(err.get<std::string>().empty());
    }
}

TEST_CASE("quench-scan: ratio values must be positive") {
    const fs::path dir = fresh_dir("scan_ratio");
    const std::string out = dir.string();
    CHECK(entry({"nhchain", "quench-scan", "--scan", "ratio", "--values", "-1",
                 "--t-max", "1", "--t-steps", "2", "--output",
                 out.c_str()}) == 2);
}

TEST_CASE("fixed-line-drive command converges on a short horizon") {
    const fs::path dir = fresh_dir("drive");
    const std::string out = dir.string();
    CHECK(entry({"nhchain", "fixed-line-drive", "--N", "4", "--dt", "0.01",
                 "--T", "0.5", "--zeta", "0.3", "--output", out.c_str()}) == 0);
    const auto meta = meta_of(dir, "fixed-line-drive");
    CHECK(meta["converged"] == true);
    CHECK(meta["convergence_estimate"].get<double>() <= 1e-6);
    const std::string csv = slurp(dir / "fixed-line-drive.csv");
    CHECK(csv.rfind("t,fidelity,raw\n", 0) == 0);
}

TEST_CASE("identity-check commands succeed end to end") {
    const fs::path spin_dir = fresh_dir("spin");
    const std::string spin_out = spin_dir.string();
    CHECK(entry({"nhchain", "spin-check", "--sites", "6", "--imbalances",
                 "0,1", "--output", spin_out.c_str()}) == 0);
    const auto spin_meta = meta_of(spin_dir, "spin-check");
    CHECK(spin_meta["failures"] == 0);
    CHECK(spin_meta["checks"].get<int>() > 0);

    const fs::path heis_dir = fresh_dir("heisenberg");
    const std::string heis_out = heis_dir.string();
    CHECK(entry({"nhchain", "heisenberg-check", "--sites", "6", "--output",
                 heis_out.c_str()}) == 0);
    CHECK(meta_of(heis_dir, "heisenberg-check")["failures"] == 0);
}

TEST_CASE("oracle-verify passes every cross-representation check") {
    const fs::path dir = fresh_dir("oracle");
    const std::string out = dir.string();
    CHECK(entry({"nhchain", "oracle-verify", "--output", out.c_str()}) == 0);
    const auto meta = meta_of(dir, "oracle-verify");
    CHECK(meta["failures"] == 0);
    CHECK(meta["checks"].get<int>() == 9);

    const std::string csv = slurp(dir / "oracle-verify.csv");
    CHECK(csv.rfind("check,value,tolerance,pass\n", 0) == 0);
}

TEST_CASE("run rejects a command the parser never produced") {
    cli::RunConfig cfg;
    cfg.command = "bogus";
    CHECK_THROWS_AS(cli::run(cfg), std::invalid_argument);
}
