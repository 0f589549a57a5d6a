#include <doctest.h>

#include <sstream>

#include "aybe/cli.hpp"

using namespace aybe;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("construct emits the expected JSON coefficients") {
    const auto r = run({"construct", "--n", "2", "--d", "1", "--v", "1", "--y1", "0", "--y2",
                        "1", "--format", "json"});
    CHECK(r.code == 0);
    // coefficient of e21 x e21 from the closed form
    CHECK(r.out.find(R"(["2","1","2","1","-1"])") != std::string::npos);
    CHECK(r.out.find(R"("n": 2)") != std::string::npos);
}

TEST_CASE("construct succeeds for (5,2) and the output is non-degenerate") {
    const auto r = run({"construct", "--n", "5", "--d", "2", "--v", "1", "--y1", "0", "--y2",
                        "1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coeffs") != std::string::npos);
}

TEST_CASE("construct rejects bad pairs and pole points with exit 2") {
    const auto bad_pair = run({"construct", "--n", "4", "--d", "2"});
    CHECK(bad_pair.code == 2);
    CHECK(bad_pair.err.find("coprime") != std::string::npos);

    const auto pole_v = run({"construct", "--n", "2", "--d", "1", "--v", "0"});
    CHECK(pole_v.code == 2);
    CHECK(pole_v.err.find("For v != 0") != std::string::npos);

    const auto pole_y = run({"construct", "--n", "2", "--d", "1", "--y1", "1", "--y2", "1"});
    CHECK(pole_y.code == 2);
    CHECK(pole_y.err.find("y1 != y2") != std::string::npos);

    const auto decimal = run({"construct", "--n", "2", "--d", "1", "--v", "0.5"});
    CHECK(decimal.code == 2);
}

TEST_CASE("verify runs the laws and reports exit 0 on success") {
    const auto aybe_ok =
        run({"verify", "--n", "3", "--d", "2", "--law", "aybe", "--samples", "3", "--seed", "7"});
    CHECK(aybe_ok.code == 0);
    CHECK(aybe_ok.out.find(R"("residual_zero": true)") != std::string::npos);
    CHECK(aybe_ok.out.find(R"("solution": "r(3,2)")") != std::string::npos);

    const auto qybe_ok = run({"verify", "--n", "2", "--d", "1", "--law", "qybe", "--v0", "1",
                              "--samples", "3", "--seed", "7"});
    CHECK(qybe_ok.code == 0);

    const auto unknown = run({"verify", "--n", "2", "--d", "1", "--law", "nope"});
    CHECK(unknown.code == 2);
}

TEST_CASE("verify conds on yang2 reports the symmetry dimension") {
    const auto r = run({"verify", "--builtin", "yang2", "--law", "conds", "--v0", "1",
                        "--samples", "3", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find(R"("symmetry_dim": 3)") != std::string::npos);
    CHECK(r.out.find(R"("a": true)") != std::string::npos);
    CHECK(r.out.find(R"("b": true)") != std::string::npos);
}

TEST_CASE("expand reports Laurent coefficients with trailing zeros as empty lists") {
    const auto r = run({"expand", "--n", "2", "--d", "1", "--y1", "0", "--y2", "1", "--kmax",
                        "5", "--format", "json"});
    CHECK(r.code == 0);
    // r_{-1} = (1/2) 1x1: four coefficients of value 1/2
    CHECK(r.out.find(R"(["1","1","1","1","1/2"])") != std::string::npos);
    CHECK(r.out.find(R"("order": 5)") != std::string::npos);
    // orders beyond the top degree (3 here) serialize as empty lists
    CHECK(r.out.find(R"("coeffs": [])") != std::string::npos);
}

TEST_CASE("oracle r21 and c21 agree with the construction") {
    const auto r21 = run({"oracle", "--which", "r21", "--samples", "5", "--seed", "3"});
    CHECK(r21.code == 0);
    CHECK(r21.out.find(R"("all_equal": true)") != std::string::npos);

    const auto c21 = run({"oracle", "--which", "c21", "--samples", "3", "--seed", "3"});
    CHECK(c21.code == 0);
}

TEST_CASE("oracle r31 reports the documented single-term mismatch with exit 1") {
    const auto r31 = run({"oracle", "--which", "r31", "--samples", "3", "--seed", "3"});
    CHECK(r31.code == 1);
    CHECK(r31.out.find(R"("all_equal": false)") != std::string::npos);
    // the difference tensor is reported and sits on e31 x e32
    CHECK(r31.out.find(R"("difference")") != std::string::npos);
    CHECK(r31.out.find(R"(["3","1","3","2")") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"verify", "--n",   "2", "--d",    "1", "--law",
                                        "dual",   "--samples", "3", "--seed", "5"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto t1 = run({"construct", "--n", "3", "--d", "1", "--format", "text"});
    const auto t2 = run({"construct", "--n", "3", "--d", "1", "--format", "text"});
    CHECK(t1.out == t2.out);
    CHECK_FALSE(t1.out.empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"construct", "--n", "2"}).code == 2);       // missing --d
    CHECK(run({"oracle", "--which", "nope"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
