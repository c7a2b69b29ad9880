#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the mht binary.  The binary path and the data
// directory come from the environment (set by ctest).

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("MHT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MHT_CLI must point at the mht binary");
    return p;
}

std::string data_dir() {
    const char* p = std::getenv("MHT_DATA");
    REQUIRE_MESSAGE(p != nullptr, "MHT_DATA must point at the data directory");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("example-sweep emits a deterministic CSV with the exact peaks") {
    RunResult a = run("example-sweep");
    RunResult b = run("example-sweep");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical
    CHECK(a.out.find("gamma,exact,spectrum_qstar,verdu_han_py,poor_verdu_py,"
                     "tight_pv\n") != std::string::npos);
    CHECK(a.out.find("\r") == std::string::npos);

    // peak rows are exact jump points, present independent of the grid
    RunResult coarse = run("example-sweep --gamma-grid 7");
    CHECK(coarse.exit_code == 0);
    CHECK(coarse.out.find("\n0.4,") != std::string::npos);
}

TEST_CASE("bsc-sweep: tight metaconverse column and frozen n=4 relaxation") {
    RunResult r = run("bsc-sweep --n-max 4");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    bool saw_n4 = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n')
            continue;
        double n, best, meta, relax;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &n, &best, &meta,
                            &relax) == 4);
        CHECK(std::abs(meta - best) <= 1e-9);
        CHECK(relax <= best + 1e-9);
        if (n == 4) {
            saw_n4 = true;
            CHECK(std::abs(relax - 0.1252) <= 1e-9);
        }
    }
    CHECK(saw_n4);

    RunResult again = run("bsc-sweep --n-max 4");
    CHECK(again.out == r.out);
    RunResult threaded = run("bsc-sweep --n-max 4 --workers 3");
    CHECK(threaded.out == r.out);
}

TEST_CASE("bsc-sweep single-use binary row: all three columns coincide") {
    RunResult r = run("bsc-sweep --n-max 1 -M 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\n1,0.1,0.1,0.1\n") != std::string::npos);
}

TEST_CASE("solve reports the ternary identities") {
    RunResult r = run("solve " + data_dir() + "/ternary.json --qy py");
    REQUIRE(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(std::abs(report["exact"].get<double>() - 0.6) <= 1e-9);
    CHECK(std::abs(report["np"]["gamma"].get<double>() - 1.2) <= 1e-9);
    CHECK(report["np"]["p"].get<double>() == 1.0);
    CHECK(std::abs(report["bounds"]["verdu_han"]["best_value"].get<double>() -
                   27.0 / 47.0) <= 1e-9);
    for (const auto& [name, ok] : report["checks"].items()) {
        INFO(name);
        CHECK(ok.get<bool>());
    }
}

TEST_CASE("solve accepts a Q_Y from file") {
    {
        std::ofstream qy("cli_qy.json");
        qy << "{\"qy\": [0.2, 0.4, 0.4]}";
    }
    RunResult r =
        run("solve " + data_dir() + "/ternary.json --qy file --qy-file cli_qy.json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report["qy"]["choice"] == "file");
    CHECK(report["alpha_qy"].get<double>() <= 0.6 + 1e-9);
}

TEST_CASE("solve evaluates a metric block when the instance carries one") {
    RunResult r = run("solve " + data_dir() + "/ternary_two_obs.json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(std::abs(report["exact"].get<double>() - 0.592) <= 5e-4);
    CHECK(std::abs(report["decoder_metric"]["decoder_error"].get<double>() -
                   0.6) <= 1e-9);
    CHECK(std::abs(report["decoder_metric"]["alpha_bound"].get<double>() -
                   0.6) <= 1e-9);
}

TEST_CASE("lossy demo instance") {
    RunResult r = run("lossy " + data_dir() + "/lossy4.json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(std::abs(report["excess_distortion"].get<double>() - 0.3) <= 1e-9);
    CHECK(std::abs(report["test_form"].get<double>() - 0.3) <= 1e-9);
    CHECK(std::abs(report["kostina"]["value"].get<double>() - 0.3) <= 1e-9);
    CHECK(report["flags"]["test_form_equal"].get<bool>());
    CHECK(report["flags"]["kostina_le_excess"].get<bool>());
}

TEST_CASE("selfcheck runs clean with a fixed seed") {
    RunResult r = run("selfcheck --seed 7 --trials 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all identities hold") != std::string::npos);
}

TEST_CASE("error paths map to the documented exit codes") {
    SUBCASE("malformed JSON: validation exit code") {
        std::ofstream bad("cli_bad_instance.json");
        bad << "{\"pvy\": [[0.5, 0.5]";
        bad.close();
        CHECK(run("solve cli_bad_instance.json").exit_code == 1);
    }
    SUBCASE("missing file") {
        CHECK(run("solve does_not_exist.json").exit_code == 1);
    }
    SUBCASE("guard exceeded") {
        // M = 64 makes the n = 7 candidate space astronomically large while
        // keeping the preceding n = 6 row trivial
        CHECK(run("bsc-sweep --n-max 12 --messages 64").exit_code == 2);
    }
    SUBCASE("unknown flag") {
        CHECK(run("example-sweep --bogus").exit_code == 1);
    }
}
