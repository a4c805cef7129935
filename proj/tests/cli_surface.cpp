// End-to-end checks against the built binary: exit-code contract
// (0 success, 1 domain error, 2 usage error), report shapes, --out and
// LACUNA_OUT_DIR handling.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    auto capture = std::filesystem::temp_directory_path() / "lacuna_cli_capture.txt";
    std::string cmd = std::string(LACUNA_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream file(capture);
    std::stringstream buffer;
    buffer << file.rdbuf();
    result.output = buffer.str();
    std::filesystem::remove(capture);
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

} // namespace

TEST_CASE("gen-seq") {
    RunResult r = run_cli("gen-seq --depth 4 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"1681\"") != std::string::npos);
}

TEST_CASE("omega with theta table passes everywhere") {
    RunResult r = run_cli("omega --depth 6 --seed 3 --theta-table");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
    CHECK(r.output.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("target verdict") {
    RunResult r = run_cli("target --mu 3 --nu 2 --depth 8 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"contained\": true") != std::string::npos);
}

TEST_CASE("sieve with CSV output") {
    auto path = write_temp("lacuna_cli_sizes.csv", "2\n1\n3/5\n2/5\n3/10\n1/5\n");
    RunResult r = run_cli("sieve --input " + path.string() + " --levels 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.starts_with("level,delta,deleted"));
    CHECK(r.output.find("2,1/2,2;3,3,") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("sieve with empty input exits 0") {
    auto path = write_temp("lacuna_cli_empty.csv", "");
    RunResult r = run_cli("sieve --input " + path.string() + " --levels 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"survivors\": []") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("polar") {
    RunResult r = run_cli("polar --a 3 --b 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"rho\": 5.0") != std::string::npos);
}

TEST_CASE("resonance with explicit s-range") {
    RunResult r = run_cli("resonance --depth 8 --seed 3 --s-range 2..6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": false") == std::string::npos);
    CHECK(r.output.find("pi * Omega") != std::string::npos);
}

TEST_CASE("decay-check") {
    auto path = write_temp("lacuna_cli_series.csv", "n,a,b\n1,1.0,0\n2,0.5,0\n4,0.25,0\n");
    RunResult r = run_cli("decay-check --series " + path.string() +
                          " --alpha 0.1 --beta 3.0 --grid 256");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"flagged\": []") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("domain errors exit 1 with a machine-readable object") {
    RunResult r = run_cli("omega --depth 1 --seed 3");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("\"id\": \"insufficient-depth\"") != std::string::npos);

    RunResult missing = run_cli("sieve --input /nonexistent/file.csv");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("\"id\": \"io-error\"") != std::string::npos);

    RunResult badtarget = run_cli("target --mu 9 --nu 2 --depth 8 --seed 3");
    CHECK(badtarget.exit_code == 1);
    CHECK(badtarget.output.find("\"id\": \"bad-target\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("omega").exit_code == 2);                       // missing --depth
    CHECK(run_cli("omega --depth 6 --bogus").exit_code == 2);     // unknown flag
    CHECK(run_cli("omega --depth 6 --format csv").exit_code == 2);// csv without --theta-table
    CHECK(run_cli("resonance --depth 8 --s-range nope").exit_code == 2);
    CHECK(run_cli("gen-seq --depth 4 --seed abc").exit_code == 2);
    CHECK(run_cli("").exit_code == 2); // a subcommand is required
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("omega --help").exit_code == 0);
}

TEST_CASE("--out writes the report to a file") {
    auto out = std::filesystem::temp_directory_path() / "lacuna_out_report.json";
    std::filesystem::remove(out);
    RunResult r = run_cli("gen-seq --depth 3 --seed 1 --out " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream file(out);
    std::stringstream buffer;
    buffer << file.rdbuf();
    CHECK(buffer.str().find("\"41\"") != std::string::npos);
    std::filesystem::remove(out);
}

TEST_CASE("LACUNA_OUT_DIR resolves relative --out paths") {
    auto dir = std::filesystem::temp_directory_path() / "lacuna_out_dir";
    std::filesystem::create_directories(dir);
    std::filesystem::remove(dir / "report.json");
    std::string cmd = "LACUNA_OUT_DIR=" + dir.string() +
                      " " + std::string(LACUNA_CLI_PATH) + " gen-seq --depth 2 --seed 5 --out report.json";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(std::filesystem::exists(dir / "report.json"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("identical invocations are byte-identical") {
    RunResult a = run_cli("omega --depth 8 --seed 3 --theta-table");
    RunResult b = run_cli("omega --depth 8 --seed 3 --theta-table");
    CHECK(a.output == b.output);
}
