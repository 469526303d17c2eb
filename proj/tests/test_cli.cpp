// Exercises the installed CLI binary end to end: subcommands, exit codes and
// output files. The binary path comes from the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef APRXLIK_CLI_PATH
#error "APRXLIK_CLI_PATH must be defined"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const fs::path tmp = fs::temp_directory_path();
    const fs::path out = tmp / "aprxlik_cli_stdout.txt";
    const fs::path err = tmp / "aprxlik_cli_stderr.txt";
    const std::string cmd =
        std::string(APRXLIK_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ostringstream so, se;
    so << std::ifstream(out).rdbuf();
    se << std::ifstream(err).rdbuf();
    r.out = so.str();
    r.err = se.str();
    return r;
}

}  // namespace

TEST_CASE("logz subcommand matches brute force") {
    const RunResult t = run_cli("logz --rows 4 --cols 4 --beta 0.3 --alpha 0 --boundary free --method transfer");
    REQUIRE(t.exit_code == 0);
    const RunResult b = run_cli("logz --rows 4 --cols 4 --beta 0.3 --alpha 0 --boundary free --method brute");
    REQUIRE(b.exit_code == 0);
    const double zt = std::strtod(t.out.c_str(), nullptr);
    const double zb = std::strtod(b.out.c_str(), nullptr);
    CHECK(std::fabs(zt - zb) / std::fabs(zb) < 1e-10);
}

TEST_CASE("usage and configuration errors exit with code 1") {
    CHECK(run_cli("logz --rows 4").exit_code == 1);               // missing required flag
    CHECK(run_cli("logz --bogus-flag 3 --rows 1 --cols 1").exit_code == 1);
    const RunResult missing = run_cli("twolevel-figure --config /nonexistent/config.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("/nonexistent/config.json") != std::string::npos);
    CHECK(run_cli("").exit_code == 1);  // no subcommand
    // Domain/size errors from the numeric layer are configuration errors too.
    CHECK(run_cli("logz --rows 5 --cols 5 --beta 0.2 --boundary free --method brute").exit_code == 1);
    CHECK(run_cli("logz --rows 4 --cols 4 --beta 0.2 --boundary free --method kaufman").exit_code == 1);
}

TEST_CASE("experiment subcommand writes CSV output") {
    const fs::path dir = fs::temp_directory_path() / "aprxlik_cli_exp";
    fs::remove_all(dir);
    const RunResult r = run_cli("ising-bbeta --out-dir " + dir.string());
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "bbeta_curve.csv"));
}

TEST_CASE("config file plumbs through") {
    const fs::path dir = fs::temp_directory_path() / "aprxlik_cli_cfg";
    fs::remove_all(dir);
    const fs::path cfg = fs::temp_directory_path() / "aprxlik_cli_cfg.json";
    std::ofstream(cfg) << R"({"experiment":"ising-trapezium","beta_list":[0.3],"trap_n_list":[4,6,8,10,12]})";
    const RunResult r = run_cli("ising-trapezium --config " + cfg.string() + " --out-dir " + dir.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream fits(dir / "trapezium_fits.csv");
    std::string header, row;
    REQUIRE(std::getline(fits, header));
    REQUIRE(std::getline(fits, row));
    CHECK(std::strtod(row.c_str(), nullptr) == 0.3);
    CHECK_FALSE(std::getline(fits, row));  // exactly the one configured beta

}
