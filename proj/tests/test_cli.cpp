#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

using json = nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path()
{
    const char* path = std::getenv("QGEOM_CLI");
    REQUIRE_MESSAGE(path != nullptr,
                    "QGEOM_CLI must point at the qgeom binary");
    return path;
}

RunResult run(const std::string& args)
{
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        out.append(buffer, got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json strip_elapsed(const std::string& text)
{
    json parsed = json::parse(text);
    parsed.erase("elapsed_ms");
    return parsed;
}

} // namespace

TEST_CASE("exact volumes through the CLI")
{
    const RunResult bures = run("exact --metric bures --N 2 --format json");
    CHECK(bures.exit_code == 0);
    const json bures_out = json::parse(bures.out);
    CHECK(bures_out["volume"].get<double>() ==
          doctest::Approx(1.2337006).epsilon(1e-6));

    const RunResult hs = run("exact --metric hs --N 2 --format json");
    CHECK(hs.exit_code == 0);
    CHECK(json::parse(hs.out)["volume"].get<double>() ==
          doctest::Approx(1.4809587).epsilon(1e-6));
}

TEST_CASE("domain rejection exits with code 2")
{
    CHECK(run("exact --metric bures --N 1").exit_code == 2);
}

TEST_CASE("unknown flags are rejected")
{
    CHECK(run("exact --metric hs --N 2 --frobnicate").exit_code == 2);
    CHECK(run("nonsense-command").exit_code == 2);
}

TEST_CASE("constants table marks small N as unsupported in the envelope")
{
    const RunResult result = run("constants --N 2 --N 4 --format json");
    CHECK(result.exit_code == 0);
    const json rows = json::parse(result.out)["rows"];
    CHECK(rows[0]["N"] == 2);
    CHECK(rows[0]["upper_env_max"].is_null());
    CHECK(rows[0]["lower_const"].get<double>() ==
          doctest::Approx(0.69935).epsilon(1e-4));
    CHECK(rows[1]["lower_const"].get<double>() ==
          doctest::Approx(0.7572).epsilon(1e-3));
    CHECK(rows[1]["upper_env_max"].get<double>() ==
          doctest::Approx(2.0746).epsilon(1e-3));

    const RunResult text = run("constants --N 2");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("n/a") != std::string::npos);
}

TEST_CASE("estimate on the full set is exact")
{
    const RunResult result = run(
        "estimate --set full --metric bures --N 2 --samples 1000 --seed 7");
    CHECK(result.exit_code == 0);
    const json out = json::parse(result.out);
    CHECK(out["command"] == "estimate");
    CHECK(out["estimate"].get<double>() == 1.0);
    CHECK(out["std_error"].get<double>() == 0.0);
    CHECK(out["seed"].get<std::uint64_t>() == 7);
    CHECK(out["n_samples"].get<long long>() +
              out["n_rejected_singular"].get<long long>() ==
          1000);
}

TEST_CASE("estimate of the shrunken body matches the homogeneity value")
{
    const RunResult result =
        run("estimate --set ktube --t 0.5 --metric hs --N 2"
            " --samples 1000000 --seed 7");
    CHECK(result.exit_code == 0);
    const json out = json::parse(result.out);
    const double estimate = out["estimate"].get<double>();
    const double std_error = out["std_error"].get<double>();
    CHECK(std::abs(estimate - 0.125) <= 3.0 * std_error);

    // rerun is byte-identical apart from elapsed_ms
    const RunResult again =
        run("estimate --set ktube --t 0.5 --metric hs --N 2"
            " --samples 1000000 --seed 7");
    CHECK(strip_elapsed(result.out).dump() ==
          strip_elapsed(again.out).dump());
}

TEST_CASE("thread count does not change pinned-chunk output")
{
    const std::string base = "estimate --set kface --t 0.5 --metric bures"
                             " --N 2 --samples 50000 --seed 3 --chunks 8";
    const RunResult one = run(base + " --threads 1");
    const RunResult two = run(base + " --threads 2");
    CHECK(one.exit_code == 0);
    CHECK(two.exit_code == 0);
    CHECK(strip_elapsed(one.out).dump() == strip_elapsed(two.out).dump());

    // the default chunk layout depends on the sample count alone, so even an
    // unpinned run is thread-invariant
    const std::string unpinned = "estimate --set ktube --t 0.5 --metric hs"
                                 " --N 2 --samples 50000 --seed 3";
    CHECK(strip_elapsed(run(unpinned + " --threads 1").out).dump() ==
          strip_elapsed(run(unpinned + " --threads 2").out).dump());
}

TEST_CASE("ppt estimation requires a bipartite factorization")
{
    CHECK(run("estimate --set ppt --N 4 --samples 1000 --seed 1").exit_code ==
          2);
    CHECK(run("estimate --set ppt --H 2x2x2 --samples 1000 --seed 1")
              .exit_code == 2);

    const RunResult good =
        run("estimate --set ppt --H 2x2 --metric hs --samples 20000 --seed 1");
    CHECK(good.exit_code == 0);
    const json out = json::parse(good.out);
    CHECK(out["N"] == 4);
    CHECK(out["estimate"].get<double>() > 0.0);
    CHECK(out["estimate"].get<double>() < 1.0);
}

TEST_CASE("ktube estimation requires t")
{
    CHECK(run("estimate --set ktube --metric hs --N 2 --samples 1000 --seed 1")
              .exit_code == 2);
}

TEST_CASE("volume quantity matches the closed form at N = 2")
{
    const RunResult result =
        run("estimate --set full --metric bures --quantity volume --N 2"
            " --samples 200000 --seed 5");
    CHECK(result.exit_code == 0);
    const json out = json::parse(result.out);
    const double estimate = out["estimate"].get<double>();
    const double std_error = out["std_error"].get<double>();
    CHECK(std::abs(estimate - 1.2337005501) <= 4.0 * std_error);
}

TEST_CASE("sample dump emits well-formed CSV")
{
    const RunResult result = run("sample --N 3 --samples 1000 --seed 11");
    CHECK(result.exit_code == 0);
    CHECK(result.out.rfind("lambda_1,lambda_2,lambda_3,weight,accepted\n",
                           0) == 0);
    int newlines = 0;
    for (char c : result.out) {
        newlines += (c == '\n');
    }
    CHECK(newlines == 1001); // header + one row per draw
}

TEST_CASE("bound evaluators through the CLI")
{
    const RunResult sandwich =
        run("bounds sandwich --N 2 --p 2 --format json");
    CHECK(sandwich.exit_code == 0);
    const json s = json::parse(sandwich.out);
    CHECK(s["lower_log"].get<double>() ==
          doctest::Approx(std::log(std::numbers::pi / 6.0)).epsilon(1e-9));

    const RunResult comparison =
        run("bounds vr-comparison --N 4 --alpha 0.25 --format json");
    CHECK(comparison.exit_code == 0);
    const json t = json::parse(comparison.out);
    CHECK(t["lower"].get<double>() ==
          doctest::Approx(0.7572 * 0.25).epsilon(1e-3));
    CHECK(t["upper"].get<double>() > t["lower"].get<double>());

    const RunResult scaling = run("bounds ppt-scaling --D 16 --format json");
    CHECK(scaling.exit_code == 0);
    const json sc = json::parse(scaling.out);
    CHECK(sc["lower"].get<double>() == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(sc["upper"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));

    // below the envelope hypothesis N >= 4, only the lower side exists
    const RunResult small = run("bounds vr-comparison --N 3 --alpha 0.5 --format json");
    CHECK(small.exit_code == 0);
    CHECK(json::parse(small.out)["upper"].is_null());
}
