#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "qlaem/io.hpp"
#include "qlaem/runner.hpp"
#include "test_common.hpp"

using namespace qlaem;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / tag) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::map<std::string, std::string> slurp_dir(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        out[entry.path().filename().string()] = slurp(entry.path());
    }
    return out;
}

long count_lines(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE_BEGIN("runner_io");

TEST_CASE("format_double: shortest round-trip form") {
    CHECK(io::format_double(0.05) == "0.05");
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(-2.5) == "-2.5");
    for (const double x : {1.0 / 3.0, 1e-300, 9.342000681155354e-12, 175882001077.2163}) {
        CHECK(std::stod(io::format_double(x)) == x);
    }
}

TEST_CASE("snapshot files round-trip bit-exactly and reject corruption") {
    TempDir tmp("qlaem-io-snapshot");
    auto r = testing::rng(97);
    const Lattice2D g = testing::random_grid(6, 5, 1.0, r);
    const fs::path file = tmp.path / "state.bin";
    io::write_snapshot(file, g);

    const Lattice2D back = io::read_snapshot(file);
    CHECK(back.nx() == 6);
    CHECK(back.ny() == 5);
    CHECK(testing::bit_equal(back, g));

    std::string bytes = slurp(file);
    SUBCASE("corrupt magic") {
        bytes[0] = 'X';
        const fs::path bad = tmp.path / "bad_magic.bin";
        std::ofstream(bad, std::ios::binary) << bytes;
        CHECK_THROWS_AS(io::read_snapshot(bad), std::runtime_error);
    }
    SUBCASE("unsupported component count") {
        bytes[16] = 3;
        const fs::path bad = tmp.path / "bad_ncomp.bin";
        std::ofstream(bad, std::ios::binary) << bytes;
        CHECK_THROWS_AS(io::read_snapshot(bad), std::runtime_error);
    }
    SUBCASE("truncated payload") {
        const fs::path bad = tmp.path / "truncated.bin";
        std::ofstream(bad, std::ios::binary) << bytes.substr(0, bytes.size() - 7);
        CHECK_THROWS_AS(io::read_snapshot(bad), std::runtime_error);
    }
    SUBCASE("trailing garbage") {
        const fs::path bad = tmp.path / "padded.bin";
        std::ofstream(bad, std::ios::binary) << (bytes + "!");
        CHECK_THROWS_AS(io::read_snapshot(bad), std::runtime_error);
    }
    CHECK_THROWS_AS(io::read_snapshot(tmp.path / "does_not_exist.bin"), std::runtime_error);
}

TEST_CASE("DiagnosticsWriter emits the documented byte-exact layout") {
    TempDir tmp("qlaem-io-diag");
    const fs::path file = tmp.path / "diagnostics.csv";

    SUBCASE("without the oracle column") {
        {
            io::DiagnosticsWriter w(file, "test run", false);
            io::DiagnosticsRow row;
            row.step = 3;
            row.time = 0.5;
            row.norm_sq = 2.0;
            row.energy = 1.0;
            row.gauss_algebraic = 0.25;
            row.gauss_differential = 0.125;
            w.write(row);
        }
        CHECK(slurp(file) ==
              "# test run\n"
              "step,time,norm_sq,energy,gauss_algebraic,gauss_differential\n"
              "3,0.5,2,1,0.25,0.125\n");
    }
    SUBCASE("with the oracle column") {
        {
            io::DiagnosticsWriter w(file, "test run", true);
            io::DiagnosticsRow row;
            row.oracle_max_err = 0.0625;
            w.write(row);
            io::DiagnosticsRow bare;
            w.write(bare);
        }
        CHECK(slurp(file) ==
              "# test run\n"
              "step,time,norm_sq,energy,gauss_algebraic,gauss_differential,oracle_max_abs_err\n"
              "0,0,0,0,0,0,0.0625\n"
              "0,0,0,0,0,0,0\n");
    }
}

TEST_CASE("canonical_command: frozen default line and gaussian default resolution") {
    CHECK(canonical_command(RunConfig{}) ==
          "qlaem simulate --nx=64 --ny=64 --theta=0.05 --dx=1 --steps=100 --snap-every=0"
          " --init=planewave --kx=1 --ky=0 --pol=ez --amplitude=1 --eps-rel=1 --out=qlaem-out");

    RunConfig g;
    g.nx = 32;
    g.ny = 32;
    g.dx = 0.5;
    g.init = InitialCondition::gaussian;
    const std::string cmd = canonical_command(g);
    // Box side 16: center defaults to the box center, width to side / 8.
    CHECK(cmd.find("--init=gaussian") != std::string::npos);
    CHECK(cmd.find("--cx=8") != std::string::npos);
    CHECK(cmd.find("--cy=8") != std::string::npos);
    CHECK(cmd.find("--width=2") != std::string::npos);

    g.center_x = 3.0;
    CHECK(canonical_command(g).find("--cx=3") != std::string::npos);
}

TEST_CASE("run_simulate: zero steps still writes one row and one snapshot") {
    TempDir tmp("qlaem-run-zero");
    RunConfig cfg;
    cfg.nx = 16;
    cfg.ny = 16;
    cfg.steps = 0;
    cfg.out_dir = (tmp.path / "out").string();
    std::ostringstream log;
    CHECK(run_simulate(cfg, 1, log) == 0);

    const std::string csv = slurp(fs::path(cfg.out_dir) / "diagnostics.csv");
    CHECK(count_lines(csv) == 3);
    CHECK(fs::exists(fs::path(cfg.out_dir) / "snapshot_000000.bin"));
    CHECK(slurp_dir(cfg.out_dir).size() == 2);
}

TEST_CASE("run_simulate: row per step, snapshot schedule, final state decodes") {
    TempDir tmp("qlaem-run-rows");
    RunConfig cfg;
    cfg.nx = 16;
    cfg.ny = 16;
    cfg.steps = 4;
    cfg.snap_every = 2;
    cfg.out_dir = (tmp.path / "out").string();
    std::ostringstream log;
    CHECK(run_simulate(cfg, 2, log) == 0);

    const std::string csv = slurp(fs::path(cfg.out_dir) / "diagnostics.csv");
    CHECK(count_lines(csv) == 2 + cfg.steps + 1);
    CHECK(fs::exists(fs::path(cfg.out_dir) / "snapshot_000000.bin"));
    CHECK(fs::exists(fs::path(cfg.out_dir) / "snapshot_000002.bin"));
    CHECK(fs::exists(fs::path(cfg.out_dir) / "snapshot_000004.bin"));
    CHECK_FALSE(fs::exists(fs::path(cfg.out_dir) / "snapshot_000001.bin"));

    const Lattice2D last = io::read_snapshot(fs::path(cfg.out_dir) / "snapshot_000004.bin");
    CHECK(last.nx() == 16);
    CHECK(energy_and_norm(last).norm_sq > 0.0);
    CHECK(log.str().find("snapshots") != std::string::npos);
}

TEST_CASE("run_simulate validates its configuration") {
    std::ostringstream log;
    RunConfig cfg;
    cfg.steps = -1;
    CHECK_THROWS_AS(run_simulate(cfg, 1, log), std::invalid_argument);
    cfg.steps = 2;
    cfg.snap_every = 3;
    CHECK_THROWS_AS(run_simulate(cfg, 1, log), std::invalid_argument);
    cfg.snap_every = 0;
    cfg.eps_rel = 0.0;
    CHECK_THROWS_AS(run_simulate(cfg, 1, log), std::invalid_argument);
    cfg.eps_rel = 1.0;
    cfg.theta = 0.9;
    CHECK_THROWS_AS(run_simulate(cfg, 1, log), std::invalid_argument);
}

TEST_CASE("run_simulate output bytes are identical across reruns and threads") {
    TempDir tmp("qlaem-run-deterministic");
    RunConfig cfg;
    cfg.nx = 16;
    cfg.ny = 16;
    cfg.steps = 5;
    cfg.snap_every = 0;
    cfg.init = InitialCondition::gaussian;
    cfg.pol = Polarization::in_plane;
    cfg.oracle = true;
    cfg.out_dir = (tmp.path / "out").string();

    std::ostringstream log1;
    CHECK(run_simulate(cfg, 1, log1) == 0);
    const auto first = slurp_dir(cfg.out_dir);
    CHECK(first.size() == 3);  // diagnostics.csv + snapshots at steps 0 and 5

    std::ostringstream log4;
    CHECK(run_simulate(cfg, 4, log4) == 0);
    const auto second = slurp_dir(cfg.out_dir);
    CHECK(first == second);
    CHECK(log1.str() == log4.str());
}

TEST_CASE("run_simulate: slower medium advances less physical time per step") {
    TempDir tmp("qlaem-run-epsrel");
    RunConfig cfg;
    cfg.nx = 16;
    cfg.ny = 16;
    cfg.steps = 1;
    cfg.out_dir = (tmp.path / "a").string();
    std::ostringstream log;
    CHECK(run_simulate(cfg, 1, log) == 0);
    const std::string vac = slurp(fs::path(cfg.out_dir) / "diagnostics.csv");

    cfg.eps_rel = 4.0;
    cfg.out_dir = (tmp.path / "b").string();
    CHECK(run_simulate(cfg, 1, log) == 0);
    const std::string med = slurp(fs::path(cfg.out_dir) / "diagnostics.csv");

    // Final row time column: dt_eff in vacuum, 2 dt_eff at eps_rel = 4.
    auto last_time = [](const std::string& csv) {
        const std::size_t line = csv.rfind('\n', csv.size() - 2);
        const std::size_t comma = csv.find(',', line);
        return std::stod(csv.substr(comma + 1));
    };
    CHECK(last_time(vac) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(last_time(med) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("run_convergence exit codes reflect the fitted order band") {
    ConvergeOptions opts;
    opts.study.eps = {0.2, 0.1, 0.05};
    opts.study.domain = 3.2;
    opts.study.time = 0.16;
    opts.study.threads = 2;
    opts.min_order = 1.5;
    opts.max_order = 2.5;
    std::ostringstream log;
    CHECK(run_convergence(opts, log) == 0);
    CHECK(log.str().find("PASS") != std::string::npos);

    opts.study.ablate_symmetrization = true;
    opts.min_order = 1.8;
    opts.max_order = 2.2;
    std::ostringstream log2;
    CHECK(run_convergence(opts, log2) == 2);
    CHECK(log2.str().find("FAIL") != std::string::npos);
}

TEST_CASE("static self-check runners succeed") {
    std::ostringstream log;
    CHECK(run_checks(log) == 0);
    CHECK(log.str().find("PASS") != std::string::npos);
    CHECK(log.str().find("FAIL (") == std::string::npos);

    std::ostringstream cov;
    CHECK(run_covariant_check(cov) == 0);
    CHECK(cov.str().find("FAIL (") == std::string::npos);

    std::ostringstream gates;
    CHECK(run_gates(gates) == 0);
    CHECK(gates.str().find("cnot |10> = ") != std::string::npos);

    std::ostringstream scales;
    CHECK(run_scales(1e19, 1e4, scales) == 0);
    CHECK(scales.str().find("debye length") != std::string::npos);
}

TEST_CASE("run_permittivity prints the tensor and propagates the resonance guard") {
    PermittivityOptions opts;
    opts.omega = 2.5e10;
    opts.b0 = 0.5;
    opts.electron_density = 1e19;
    opts.ions = {{1.0, 2.0 * constants::atomic_mass_unit, 1e19}};
    std::ostringstream log;
    CHECK(run_permittivity(opts, log) == 0);
    CHECK(log.str().find("chi11") != std::string::npos);
    CHECK(log.str().find("permittivity tensor") != std::string::npos);

    PermittivityOptions res;
    res.b0 = 0.5;
    res.electron_density = 1e19;
    res.omega = PlasmaState(0.5, 1e19).omega_ce();
    std::ostringstream log2;
    CHECK_THROWS_AS(run_permittivity(res, log2), std::domain_error);
}

TEST_SUITE_END();
