#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qzc/cli.hpp"

using namespace qzc;
namespace fs = std::filesystem;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::string cli_path = QZC_CLI_PATH;

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "qzc-cli-tests";
    fs::create_directories(dir);
    return dir;
}

fs::path scratch_file(const std::string& stem) { return work_dir() / stem; }

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    const fs::path out = work_dir() / ("stdout" + std::to_string(++seq));
    const fs::path err = work_dir() / ("stderr" + std::to_string(seq));
    const std::string cmd = env_prefix + cli_path + " " + args + " > " + out.string() + " 2> " +
                            err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<double> split_csv_row(const std::string& row) {
    std::vector<double> vals;
    std::istringstream in(row);
    std::string cell;
    while (std::getline(in, cell, ',')) vals.push_back(std::strtod(cell.c_str(), nullptr));
    return vals;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("help and subcommand requirements") {
    REQUIRE(run_cli("--help").code == 0);
    REQUIRE_THAT(run_cli("--help").out, ContainsSubstring("trajectory"));
    REQUIRE(run_cli("").code == 1);
    REQUIRE(run_cli("frobnicate").code == 1);
    REQUIRE(run_cli("trajectory --no-such-flag 1").code == 1);
}

TEST_CASE("trajectory run through the binary matches the in-process pipeline") {
    const fs::path out = scratch_file("traj.csv");
    const auto res = run_cli("trajectory --R 10 --r1 0.5 --s 0.25 --phi 0.5 --tau-max 2.5 "
                             "--samples 40 --out " + out.string());
    REQUIRE(res.code == 0);
    REQUIRE(res.err.empty());

    RunConfig cfg;
    cfg.mode = RunConfig::Mode::trajectory;
    cfg.R = 10.0;
    cfg.r1 = 0.5;
    cfg.s = 0.25;
    cfg.phi = 0.5;
    cfg.tau_max = 2.5;
    cfg.samples = 40;
    std::ostringstream expected, errs;
    REQUIRE(run(cfg, expected, errs) == 0);
    REQUIRE(slurp(out) == expected.str());

    const auto rows = lines_of(expected.str());
    REQUIRE(rows.size() == 41);
    REQUIRE(rows[0] == "tau,C,u1_re,u1_im,u2_re,u2_im,eps");
    const auto first = split_csv_row(rows[1]);
    REQUIRE(first.size() == 7);
    REQUIRE(first[0] == 0.0);  // tau starts at 0
    REQUIRE(first[6] == 1.0);  // eps(0) = 1
    const auto last = split_csv_row(rows.back());
    REQUIRE_THAT(last[0], Catch::Matchers::WithinAbs(2.5, 1e-12));
}

TEST_CASE("absolute rates are accepted and conflict with the ratio") {
    const fs::path out = scratch_file("traj_abs.csv");
    REQUIRE(run_cli("trajectory --kappa 2 --g-total 3 --tau-max 1 --samples 5 --out " +
                    out.string()).code == 0);
    REQUIRE(lines_of(slurp(out)).size() == 6);

    const auto conflict = run_cli("trajectory --R 10 --kappa 1 --g-total 2 --tau-max 1");
    REQUIRE(conflict.code == 1);
    REQUIRE_THAT(conflict.err, ContainsSubstring("error:"));
    REQUIRE_THAT(conflict.err, ContainsSubstring("--R"));

    const auto missing = run_cli("trajectory --tau-max 1");
    REQUIRE(missing.code == 1);
    REQUIRE_THAT(missing.err, ContainsSubstring("missing"));

    const auto lossless = run_cli("trajectory --kappa 0 --g-total 1");
    REQUIRE(lossless.code == 1);
}

TEST_CASE("invalid physics inputs exit with code 1 and a field-naming message") {
    const auto bad_r1 = run_cli("trajectory --R 1 --r1 1.5");
    REQUIRE(bad_r1.code == 1);
    REQUIRE_THAT(bad_r1.err, ContainsSubstring("r1"));

    REQUIRE(run_cli("trajectory --R 1 --s 2").code == 1);
    REQUIRE(run_cli("trajectory --R 1 --tau-max 0").code == 1);
    REQUIRE(run_cli("trajectory --R 1 --samples 1").code == 1);
    REQUIRE(run_cli("zeno --R 1 --kappa-T 0").code == 1);
    REQUIRE(run_cli("zeno --R 1 --n-measurements 0").code == 1);
}

TEST_CASE("numerical failures exit with code 2") {
    // a measurement interval that lands where the survival envelope has
    // underflowed to an exact node
    const auto res = run_cli("zeno --R 10 --kappa-T 5000 --n-measurements 2");
    REQUIRE(res.code == 2);
    REQUIRE_THAT(res.err, ContainsSubstring("numerical error:"));
}

TEST_CASE("stationary grid is csv with exact recomputable cells") {
    const fs::path out = scratch_file("grid.csv");
    REQUIRE(run_cli("stationary --phi 0 --grid 21x11 --out " + out.string()).code == 0);
    const auto rows = lines_of(slurp(out));
    REQUIRE(rows[0] == "r1,s,Cs");
    REQUIRE(rows.size() == 1 + 21 * 11);
    for (std::size_t idx : {std::size_t(1), std::size_t(57), std::size_t(231)}) {
        const auto v = split_csv_row(rows[idx]);
        REQUIRE(v.size() == 3);
        REQUIRE(v[0] >= 0.0);
        REQUIRE(v[0] <= 1.0);
        REQUIRE(v[1] >= -1.0);
        REQUIRE(v[1] <= 1.0);
        const double expect = stationary_concurrence(initial_state(v[1], 0.0, v[0]), v[0]);
        REQUIRE_THAT(v[2], Catch::Matchers::WithinAbs(expect, 1e-15));
    }
    REQUIRE(run_cli("stationary --grid 21x11 --output svg").code == 1);
    REQUIRE(run_cli("stationary --grid 21").code == 1);
    REQUIRE(run_cli("stationary --grid 1x5").code == 1);
}

TEST_CASE("zeno table has the documented schema and monotone survival") {
    const fs::path out = scratch_file("zeno.csv");
    REQUIRE(run_cli("zeno --R 10 --kappa-T 0.01 --n-measurements 100 --out " +
                    out.string()).code == 0);
    const auto rows = lines_of(slurp(out));
    REQUIRE(rows[0] == "tau,C,survival,lambda_z");
    REQUIRE(rows.size() == 102); // t = 0 row plus one per round
    const auto first = split_csv_row(rows[1]);
    REQUIRE(first[0] == 0.0);
    double prev_survival = 2.0;
    const double lz = split_csv_row(rows[1])[3];
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto v = split_csv_row(rows[i]);
        REQUIRE(v.size() == 4);
        REQUIRE(v[2] < prev_survival + 1e-15);
        prev_survival = v[2];
        REQUIRE(v[3] == lz); // the rate depends on T only, not on the round
    }
}

TEST_CASE("figure presets enumerate, render, and reject unknown ids") {
    const auto noid = run_cli("figures");
    REQUIRE(noid.code == 1);
    for (const char* id : {"fig1a", "fig2c", "fig3d", "fig4b"})
        REQUIRE_THAT(noid.err, ContainsSubstring(id));

    const auto bogus = run_cli("figures --id fig9z");
    REQUIRE(bogus.code == 1);
    REQUIRE_THAT(bogus.err, ContainsSubstring("error:"));

    const fs::path grid = scratch_file("fig1a.csv");
    REQUIRE(run_cli("figures --id fig1a --out " + grid.string()).code == 0);
    REQUIRE(lines_of(slurp(grid))[0] == "r1,s,Cs");
    REQUIRE(run_cli("figures --id fig1a --output svg").code == 1);

    const fs::path series = scratch_file("fig3a.csv");
    REQUIRE(run_cli("figures --id fig3a --out " + series.string()).code == 0);
    const auto rows = lines_of(slurp(series));
    REQUIRE(rows[0] == "series,tau,C");
    REQUIRE(rows.size() > 100);
}

TEST_CASE("svg output is a minimal well-formed plot") {
    const fs::path svg = scratch_file("fig4a.svg");
    REQUIRE(run_cli("figures --id fig4a --output svg --out " + svg.string()).code == 0);
    const auto text = slurp(svg);
    REQUIRE_THAT(text, ContainsSubstring("<?xml"));
    REQUIRE_THAT(text, ContainsSubstring("<svg"));
    REQUIRE_THAT(text, ContainsSubstring("</svg>"));
    REQUIRE_THAT(text, ContainsSubstring(">tau</text>"));
    REQUIRE_THAT(text, ContainsSubstring(">C</text>"));
    // one polyline per series: the free decay plus three measurement spacings
    REQUIRE(count_occurrences(text, "<polyline") == 4);

    const fs::path traj = scratch_file("traj.svg");
    REQUIRE(run_cli("trajectory --R 10 --tau-max 3 --samples 100 --output svg --out " +
                    traj.string()).code == 0);
    REQUIRE(count_occurrences(slurp(traj), "<polyline") == 1);
}

TEST_CASE("output bytes are deterministic across runs, workers, and the env knob") {
    const std::string args = "stationary --phi 3.14159 --grid 31x17 --out ";
    const fs::path a = scratch_file("det_a.csv");
    const fs::path b = scratch_file("det_b.csv");
    const fs::path c = scratch_file("det_c.csv");
    const fs::path d = scratch_file("det_d.csv");
    REQUIRE(run_cli(args + a.string()).code == 0);
    REQUIRE(run_cli(args + b.string()).code == 0);
    REQUIRE(run_cli(args + c.string() + " --workers 3").code == 0);
    REQUIRE(run_cli(args + d.string(), "QZC_WORKERS=2 ").code == 0);
    const auto ref = slurp(a);
    REQUIRE(!ref.empty());
    REQUIRE(slurp(b) == ref);
    REQUIRE(slurp(c) == ref);
    REQUIRE(slurp(d) == ref);
}

TEST_CASE("stdout and '-' are equivalent sinks") {
    const auto direct = run_cli("trajectory --R 2 --tau-max 1 --samples 5");
    const auto dashed = run_cli("trajectory --R 2 --tau-max 1 --samples 5 --out -");
    REQUIRE(direct.code == 0);
    REQUIRE(dashed.code == 0);
    REQUIRE(direct.out == dashed.out);
    REQUIRE(lines_of(direct.out).size() == 6);
}
