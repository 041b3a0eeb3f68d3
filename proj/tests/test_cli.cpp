#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qkernel/cli.hpp"

using namespace qkernel;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("bernstein-matrix quadratic case, csv") {
        auto r = run({"bernstein-matrix", "--n", "2", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "1,0,0\n-2,2,0\n1,-2,1\n");
    }

    TEST_CASE("bernstein-matrix cubic case, csv") {
        auto r = run({"bernstein-matrix", "--n", "3", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "1,0,0,0\n-3,3,0,0\n3,-6,3,0\n-1,3,-3,1\n");
    }

    TEST_CASE("bernstein-matrix latex wraps an array") {
        auto r = run({"bernstein-matrix", "--n", "2", "--format", "latex"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\\begin{array}{rrr}") != std::string::npos);
        CHECK(r.out.find("-2 & 2 & 0") != std::string::npos);
    }

    TEST_CASE("bernstein-matrix json") {
        auto r = run({"bernstein-matrix", "--n", "2", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"n\": 2") != std::string::npos);
        CHECK(r.out.find("\"-2\"") != std::string::npos);
    }

    TEST_CASE("beta with classical limit") {
        auto r = run({"beta", "--n", "1", "--limit-q1", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"value\": \"(-1)/(1 + q)\"") != std::string::npos);
        CHECK(r.out.find("\"limit_q1\": \"-1/2\"") != std::string::npos);
    }

    TEST_CASE("beta evaluation at rational q") {
        auto r = run({"beta", "--n", "2", "--eval-q", "4", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.find("4/105") != std::string::npos);
    }

    TEST_CASE("beta inverse family") {
        auto r = run({"beta", "--n", "1", "--order", "1", "--inverse", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"value\": \"-1/2\"") != std::string::npos);
    }

    TEST_CASE("table emits stirling rows") {
        auto r = run({"table", "--kind", "stirling", "--variant", "S2_EXPLICIT", "--n-max", "2",
                      "--k-max", "2", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.find("variant,n,k,value") == 0);
        CHECK(r.out.find("S2_EXPLICIT,2,1,1") != std::string::npos);
    }

    TEST_CASE("table qint json") {
        auto r = run({"table", "--kind", "qint", "--n-max", "3", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"value\": \"1 + q + q^2\"") != std::string::npos);
    }

    TEST_CASE("padic-probe csv") {
        auto r = run({"padic-probe", "--p", "3", "--q", "4", "--moment", "1", "--levels", "3",
                      "--precision", "12", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("N,valuation\n", 0) == 0);
        CHECK(r.out.find("1,1") != std::string::npos);
    }

    TEST_CASE("padic-probe rejects a bad seed") {
        auto r = run({"padic-probe", "--p", "3", "--q", "5", "--moment", "1", "--levels", "2",
                      "--precision", "8"});
        CHECK(r.code == 1);
        CHECK(r.err.find("q = 1 (mod p)") != std::string::npos);
    }

    TEST_CASE("bernstein-eval real and exact modes") {
        auto samples = write_temp("qk_samples.txt", "0\n1/2\n1\n");
        auto r = run({"bernstein-eval", "--n", "2", "--q", "1/2", "--x", "1/2", "--samples",
                      samples.string()});
        CHECK(r.code == 0);
        // linear samples: value equals [x]_q = (1-2^(-1/2))/(1/2)
        double got = std::stod(r.out);
        CHECK(std::abs(got - 2.0 * (1.0 - std::sqrt(0.5))) < 1e-12);

        auto r0 = run({"bernstein-eval", "--n", "2", "--q", "1/2", "--x", "0", "--samples",
                       samples.string(), "--mode", "exact"});
        CHECK(r0.code == 0);
        CHECK(r0.out == "0\n");

        auto ru = run({"bernstein-eval", "--n", "2", "--q", "1/2", "--x", "1/2", "--samples",
                       samples.string(), "--mode", "exact", "--u", "2/3"});
        CHECK(ru.code == 0);
        CHECK(ru.out == "2/3\n");

        auto rbad = run({"bernstein-eval", "--n", "2", "--q", "1/2", "--x", "1/2", "--samples",
                         samples.string(), "--mode", "exact"});
        CHECK(rbad.code == 1);
    }

    TEST_CASE("usage errors exit 1 with a synopsis") {
        auto r = run({"no-such-command"});
        CHECK(r.code == 1);
        CHECK(!r.err.empty());
        auto r2 = run({});
        CHECK(r2.code == 1);
        auto r3 = run({"beta"});
        CHECK(r3.code == 1); // --n required
    }

    TEST_CASE("help exits 0") {
        auto r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("audit") != std::string::npos);
    }

    TEST_CASE("audit single identity json") {
        auto r = run({"audit", "--identities", "EQ14", "--n-max", "6", "--format", "json"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"id\": \"EQ14\"") != std::string::npos);
        CHECK(r.out.find("\"status\": \"HOLDS\"") != std::string::npos);
    }

    TEST_CASE("audit config file mirrors the flags") {
        auto cfgfile = write_temp("qk_audit.cfg", "n-max=4\nidentities=EQ14,EQ12\nformat=csv\n");
        auto r = run({"audit", "--config", cfgfile.string()});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("id,binding,status", 0) == 0);
        CHECK(r.out.find("EQ14") != std::string::npos);
        CHECK(r.out.find("EQ12") != std::string::npos);
        CHECK(r.out.find("EQ13") == std::string::npos);
        // explicit flag wins over the file
        auto r2 = run({"audit", "--config", cfgfile.string(), "--identities", "EQ13", "--format",
                       "json"});
        CHECK(r2.code == 0);
        CHECK(r2.out.find("EQ13") != std::string::npos);
        CHECK(r2.out.find("EQ14") == std::string::npos);
    }

    TEST_CASE("audit --expect flags drift with exit 2") {
        auto bogus = write_temp("qk_bogus_golden.json", "{\"not\": \"the report\"}\n");
        auto r = run({"audit", "--identities", "EQ14", "--expect", bogus.string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("drift") != std::string::npos);
    }

    TEST_CASE("audit --expect accepts a faithful golden") {
        auto first = run({"audit", "--identities", "EQ12", "--format", "json"});
        REQUIRE(first.code == 0);
        auto golden = write_temp("qk_good_golden.json", first.out);
        auto r = run({"audit", "--identities", "EQ12", "--expect", golden.string()});
        CHECK(r.code == 0);
    }
}
