// End-to-end checks of the installed command-line binary. Each case spawns
// the real executable (path injected by the build as PRANDTL_MODES_BINARY),
// captures stdout and the exit code, and inspects any files it wrote.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef PRANDTL_MODES_BINARY
#error "PRANDTL_MODES_BINARY must point at the built executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + PRANDTL_MODES_BINARY + " " + args + " 2>/dev/null";
    RunResult r;
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) r.out += buf;
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Parse "re im" from an eval stdout line.
std::pair<double, double> parse_pair(const std::string& line) {
    std::istringstream in(line);
    double re = 0.0, im = 0.0;
    in >> re >> im;
    REQUIRE(!in.fail());
    return {re, im};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

std::string temp_path(const std::string& stem) {
    return "cli_test_" + stem;
}

}  // namespace

TEST_CASE("eval prints the transition profile midpoint") {
    const RunResult r = run_cli("eval w_criterion 0");
    CHECK(r.exit_code == 0);
    const auto [re, im] = parse_pair(r.out);
    CHECK(re == 0.5);
    CHECK(im == 0.0);
}

TEST_CASE("eval kummer_m with a zero numerator parameter is one") {
    const RunResult r = run_cli("eval kummer_m 5 0 --a 0 --c 0.5");
    CHECK(r.exit_code == 0);
    const auto [re, im] = parse_pair(r.out);
    CHECK(re == 1.0);
    CHECK(im == 0.0);
}

TEST_CASE("eval erf matches the library value") {
    const RunResult r = run_cli("eval erf 1");
    CHECK(r.exit_code == 0);
    const auto [re, im] = parse_pair(r.out);
    CHECK(std::abs(re - std::erf(1.0)) < 1e-13);
    CHECK(std::abs(im) < 1e-15);
}

TEST_CASE("eval tau_criterion reports the spectral point") {
    const RunResult r = run_cli("eval tau_criterion 0");
    CHECK(r.exit_code == 0);
    const auto [re, im] = parse_pair(r.out);
    CHECK(std::abs(re + 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(im + 1.0 / std::numbers::sqrt2) < 1e-15);
}

TEST_CASE("eval rejects unknown function names") {
    const RunResult r = run_cli("eval not_a_function 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("eval maps evaluation errors to exit three") {
    // y_mu1 at eta = i with the default mu = -1 sits on the double pole.
    const RunResult r = run_cli("eval y_mu1 0 1");
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty());
}

TEST_CASE("mode writes the worked example profile deterministically") {
    const std::string out1 = temp_path("mode1.csv");
    const std::string out2 = temp_path("mode2.csv");
    const RunResult r1 = run_cli("mode --grid 0 2 21 --out " + out1);
    CHECK(r1.exit_code == 0);
    const std::string text1 = slurp(out1);
    const std::vector<std::string> rows = lines_of(text1);
    REQUIRE(rows.size() == 22);  // header + 21 samples
    CHECK(rows[0] == "y,re,im");
    // First sample row is y = 0 with phi = -sqrt(pi/2).
    std::istringstream first(rows[1]);
    std::string y_field, re_field;
    std::getline(first, y_field, ',');
    std::getline(first, re_field, ',');
    CHECK(std::stod(y_field) == 0.0);
    CHECK(std::abs(std::stod(re_field) + std::sqrt(std::numbers::pi / 2.0)) < 1e-12);

    const RunResult r2 = run_cli("mode --grid 0 2 21 --out " + out2);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out2) == text1);

    // Forcing a single worker thread must not change a byte.
    const std::string out3 = temp_path("mode3.csv");
    const RunResult r3 =
        run_cli("mode --grid 0 2 21 --out " + out3, "PRANDTL_MODES_THREADS=1 ");
    CHECK(r3.exit_code == 0);
    CHECK(slurp(out3) == text1);

    // Metadata sidecar parses and echoes the frame constants and coefficients.
    const nlohmann::json meta = nlohmann::json::parse(slurp(out1 + ".meta.json"));
    CHECK(meta.contains("tau_re"));
    CHECK(meta.contains("mu_re"));
    CHECK(meta.contains("c0_re"));
    CHECK(meta["samples"].get<int>() == 21);

    for (const std::string& p : {out1, out2, out3}) {
        std::remove(p.c_str());
        std::remove((p + ".meta.json").c_str());
    }
}

TEST_CASE("mode solves the no-slip system when asked") {
    const std::string out = temp_path("mode_ns.csv");
    const RunResult r = run_cli("mode --no-slip --grid 0 2 11 --out " + out);
    CHECK(r.exit_code == 0);
    // mu = -1, eta* = 0: the solved nullspace triple is (-1/2, 0, 1) and the
    // sidecar echoes it.
    const nlohmann::json meta = nlohmann::json::parse(slurp(out + ".meta.json"));
    CHECK(std::abs(meta["c0_re"].get<double>() + 0.5) < 1e-12);
    CHECK(std::abs(meta["c0_im"].get<double>()) < 1e-12);
    CHECK(std::abs(meta["c1_re"].get<double>()) < 1e-12);
    CHECK(std::abs(meta["c1_im"].get<double>()) < 1e-12);
    CHECK(std::abs(meta["c2_re"].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(meta["c2_im"].get<double>()) < 1e-12);
    // The sampled stream function obeys the wall condition yet is not the
    // zero mode: it has grown by y = 2.
    const std::vector<std::string> rows = lines_of(slurp(out));
    REQUIRE(rows.size() == 12);
    std::istringstream first(rows[1]);
    std::string y_field, re_field, im_field;
    std::getline(first, y_field, ',');
    std::getline(first, re_field, ',');
    std::getline(first, im_field, ',');
    CHECK(std::abs(std::stod(re_field)) < 1e-10);
    CHECK(std::abs(std::stod(im_field)) < 1e-10);
    std::istringstream last(rows[11]);
    std::getline(last, y_field, ',');
    std::getline(last, re_field, ',');
    std::getline(last, im_field, ',');
    CHECK(std::hypot(std::stod(re_field), std::stod(im_field)) > 1.0);
    std::remove(out.c_str());
    std::remove((out + ".meta.json").c_str());
}

TEST_CASE("mode rejects a bad shear profile") {
    const RunResult r = run_cli("mode --beta 1 --out " + temp_path("mode_bad.csv"));
    CHECK(r.exit_code == 3);
}

TEST_CASE("shearlayer requires a curvature source") {
    CHECK(run_cli("shearlayer --out " + temp_path("sl_none.csv")).exit_code == 2);
    CHECK(run_cli("shearlayer --upp 0.5 --out " + temp_path("sl_pos.csv")).exit_code == 2);
}

TEST_CASE("shearlayer example dataset is well formed and deterministic") {
    const std::string out1 = temp_path("sl1.csv");
    const std::string out2 = temp_path("sl2.csv");
    const RunResult r1 = run_cli("shearlayer --example --out " + out1);
    CHECK(r1.exit_code == 0);
    const std::string text1 = slurp(out1);
    const std::vector<std::string> rows = lines_of(text1);
    REQUIRE(rows.size() == 602);  // header + 601 samples
    CHECK(rows[0] == "z,re,im");
    // Grid is strictly increasing from -6 to 6 and hits 0 in the middle.
    double prev = -1e300;
    for (size_t i = 1; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string z_field;
        std::getline(in, z_field, ',');
        const double z = std::stod(z_field);
        CHECK(z > prev);
        prev = z;
    }
    std::istringstream mid(rows[301]);
    std::string z_field, re_field, im_field;
    std::getline(mid, z_field, ',');
    std::getline(mid, re_field, ',');
    std::getline(mid, im_field, ',');
    CHECK(std::stod(z_field) == 0.0);
    CHECK(std::stod(re_field) == 0.0);
    CHECK(std::stod(im_field) == 0.0);

    const RunResult r2 = run_cli("shearlayer --example --out " + out2);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out2) == text1);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("verify recurrences passes") {
    CHECK(run_cli("verify recurrences").exit_code == 0);
}

TEST_CASE("verify criterion passes and is sensitive to a spectral shift") {
    CHECK(run_cli("verify criterion").exit_code == 0);
    CHECK(run_cli("verify criterion --perturb-tau-re 1e-3").exit_code == 1);
}

TEST_CASE("verify rejects unknown suites") {
    CHECK(run_cli("verify not_a_suite").exit_code == 2);
}

TEST_CASE("verify writes a parseable JSON report") {
    const std::string out = temp_path("verify.json");
    const RunResult r = run_cli("verify recurrences --out " + out);
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp(out));
    CHECK(j["suite"] == "recurrences");
    CHECK(j["failures"].get<int>() == 0);
    CHECK(j["checks"].is_array());
    CHECK(!j["checks"].empty());
    std::remove(out.c_str());
}
