#include "sdlab/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace sdlab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("semigroup command") {
    Run r = run({"semigroup", "--pair", "3,5"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("genus: 4") != std::string::npos);
    CHECK(r.out.find("frobenius: 7") != std::string::npos);
    CHECK(r.out.find("gaps: 1,2,4,7") != std::string::npos);

    r = run({"semigroup", "--gens", "1"});
    CHECK(r.out.find("genus: 0") != std::string::npos);

    r = run({"semigroup", "--gens", "4,7,9", "--apery", "4", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["apery"]["elements"] == nlohmann::json::array({0, 9, 14, 7}));
    CHECK(j["frobenius"] == 10);
    CHECK(j["genus"] == 6);
    CHECK(j["gaps"] == nlohmann::json::array({1, 2, 3, 5, 6, 10}));

    r = run({"semigroup", "--pair", "3,5", "--poly", "--quotient", "2", "--hilbert", "8", "--format", "csv"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("quotient_genus,2") != std::string::npos);
}

TEST_CASE("semigroup usage errors") {
    CHECK(run({"semigroup", "--gens", "4,6"}).code == exit_usage);
    CHECK(run({"semigroup"}).code == exit_usage);
    CHECK(run({"semigroup", "--gens", "3,5", "--pair", "3,5"}).code == exit_usage);
    CHECK(run({"semigroup", "--gens", "3,5", "--apery", "4"}).code == exit_usage);
    CHECK(run({"semigroup", "--gens", "3,5", "--unknown"}).code == exit_usage);
    CHECK(run({"semigroup", "--gens", "3,5", "--format", "xml"}).code == exit_usage);
    Run r = run({"semigroup", "--gens", "x"});
    CHECK(r.code == exit_usage);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("dedekind command") {
    Run r = run({"dedekind", "3", "5", "--sum", "--format", "json"});
    CHECK(r.code == exit_ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dedekind_sum"]["sawtooth"] == "0/1");
    CHECK(j["dedekind_sum"]["voronoi"] == "0/1");
    CHECK(std::abs(j["dedekind_sum"]["cotangent"].get<double>()) < 1e-9);

    r = run({"dedekind", "1", "3"});
    CHECK(r.out.find("1/18") != std::string::npos);

    r = run({"dedekind", "3", "5", "--voronoi", "1", "1", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["voronoi"]["value"] == 13);

    r = run({"dedekind", "3", "5", "--zolotarev", "--carlitz"});
    CHECK(r.out.find("[0,3,1,4,2]") != std::string::npos);

    CHECK(run({"dedekind", "2", "4"}).code == exit_usage);
    CHECK(run({"dedekind", "3"}).code == exit_usage);
}

TEST_CASE("verify command") {
    Run r = run({"verify", "--pairs-max", "0"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "[]\n");

    r = run({"verify", "--pairs-max", "6", "--seed", "3"});
    CHECK(r.code == exit_ok);
    Run again = run({"verify", "--pairs-max", "6", "--seed", "3", "--threads", "2"});
    CHECK(r.out == again.out);
    auto reports = nlohmann::json::parse(r.out);
    CHECK(reports.size() > 0);
    for (const auto& rep : reports)
        CHECK(rep["verdict"] != "fail");

    r = run({"verify", "--pairs-max", "6", "--format", "csv", "--identity", "prop6"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("id,params,mode,residual,verdict,elapsed_ms", 0) == 0);

    // An absurd tolerance turns float checks into failures.
    r = run({"verify", "--pairs-max", "6", "--identity", "prop6", "--tol-relative", "-1"});
    CHECK(r.code == exit_verification_failed);

    CHECK(run({"verify", "--format", "text"}).code == exit_usage);
    CHECK(run({"verify", "--pairs-max", "x"}).code == exit_usage);
}

TEST_CASE("table command and help") {
    Run r = run({"table", "dedekind", "--max", "5", "--format", "csv"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("3,5,0") != std::string::npos);
    r = run({"table", "voronoi", "--max", "5", "--m", "2", "--format", "csv"});
    CHECK(r.out.find("3,5,45") != std::string::npos);
    r = run({"table", "prop6", "--max", "5", "--format", "json"});
    CHECK(r.code == exit_ok);
    r = run({"table", "torus", "--max", "4"});
    CHECK(r.code == exit_ok);
    CHECK(run({"table", "bogus"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
    CHECK(run({}).code == exit_usage);
}
