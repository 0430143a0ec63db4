#include "ncalg/cli.hpp"
#include "ncalg/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using ncalg::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ncalg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Mul) {
    const Outcome r = run({"mul", "--algebra", "quaternion", "i", "j"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["command"], "mul");
    EXPECT_EQ(r.doc()["result"], json::parse("[0,0,0,1]"));
}

TEST(Cli, GlobalOptionBeforeSubcommand) {
    const Outcome r = run({"--algebra", "complex", "mul", "i", "i"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"], json::parse("[-1,0]"));
}

TEST(Cli, SolveSqrtSphere) {
    const Outcome r = run({"solve-sqrt", "--algebra", "quaternion", "--a", "-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"], json::parse(R"({"variant":"sphere","center":[0,0,0,0],"radius":1})"));
}

TEST(Cli, SolveSqrtConjugationMethod) {
    const Outcome r = run({"solve-sqrt", "--algebra", "complex", "--a", "-4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"]["variant"], "finite");
    EXPECT_EQ(r.doc()["result"]["roots"].size(), 2u);
}

TEST(Cli, SylvesterEmpty) {
    const Outcome r = run({"solve-sylvester", "--algebra", "quaternion", "--a", "j", "--b", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"], json::parse(R"({"variant":"empty"})"));
}

TEST(Cli, ShiftedSquare) {
    const Outcome r = run({"solve-shifted", "--a", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"]["roots"].size(), 2u);
}

TEST(Cli, EvalAndExpand) {
    Outcome r = run({"eval", "--poly", "x^2 + i*x + x*i", "--at", "j - i"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"], json::parse("[0,0,0,0]"));
    r = run({"expand", "--prod", "i", "j"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"]["degree"], 2);
    EXPECT_EQ(r.doc()["result"]["text"], "x*x + x*j + i*x + k");
}

TEST(Cli, Divide) {
    const Outcome r = run({"divide", "--poly", "x^2 - i*x - x*j + k", "--divisor", "x - i"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"]["remainder"], json::parse("[0,0,0,0]"));
    EXPECT_EQ(r.doc()["result"]["recomposes"], true);
}

TEST(Cli, ScanRoots) {
    const Outcome r = run({"scan-roots", "--poly", "x^2 + 2*x", "--starts", "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"]["clusters"], 2);
}

TEST(Cli, CheckConjugation) {
    const Outcome r = run({"check-conjugation"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"]["is_conjugation_algebra"], true);
}

TEST(Cli, VerifyIdentitiesReportsLamCheck) {
    const Outcome r = run({"verify-identities", "--samples", "5", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json checks = r.doc()["result"]["checks"];
    EXPECT_EQ(checks[0]["name"], "expand_square");
    EXPECT_EQ(checks[0]["passed"], 5);
    EXPECT_EQ(checks.back()["name"], "noncentral_eval_not_multiplicative");
}

TEST(Cli, AlgebraFromFile) {
    const std::string path = ::testing::TempDir() + "ncalg_cli_complex.json";
    {
        std::ofstream f(path);
        f << ncalg::algebra_to_json(*ncalg::builtin_complex()).dump();
    }
    const Outcome r = run({"mul", "--algebra", path, "1+i", "1-i"});
    std::remove(path.c_str());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["result"], json::parse("[2,0]"));
}

TEST(Cli, DomainErrorExitsOneWithJson) {
    const Outcome r = run({"solve-sqrt", "--algebra", "complex", "--method", "quaternion", "--a", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.doc()["error"]["kind"], "domain");
}

TEST(Cli, ParseErrorExitsTwoWithPosition) {
    const Outcome r = run({"eval", "--poly", "x + q", "--at", "1"});
    EXPECT_EQ(r.code, 2);
    const std::string msg = r.doc()["error"]["message"];
    EXPECT_NE(msg.find("line 1, column 5"), std::string::npos) << msg;
}

TEST(Cli, MalformedAlgebraFileIsParseError) {
    const std::string path = ::testing::TempDir() + "ncalg_cli_bad.json";
    {
        std::ofstream f(path);
        f << "{\"dim\": 2,";
    }
    const Outcome r = run({"check-conjugation", "--algebra", path});
    std::remove(path.c_str());
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.doc()["error"]["kind"], "parse");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"mul", "i"}).code, 2);
    EXPECT_EQ(run({"eval", "--poly", "x"}).code, 2);
    EXPECT_EQ(run({"solve-sqrt", "--a", "1", "--method", "magic"}).code, 2);
}

TEST(Cli, SeededOutputIsByteIdentical) {
    const std::vector<std::string> scan{"scan-roots", "--poly", "x^2 + 1", "--starts", "200", "--seed", "5"};
    EXPECT_EQ(run(scan).out, run(scan).out);
    const std::vector<std::string> sphere{"solve-sqrt", "--a", "-4", "--samples", "6", "--seed", "3"};
    const Outcome a = run(sphere);
    EXPECT_EQ(a.out, run(sphere).out);
    EXPECT_EQ(a.doc()["result"]["samples"].size(), 6u);
    const std::vector<std::string> ident{"verify-identities", "--samples", "20", "--seed", "9"};
    EXPECT_EQ(run(ident).out, run(ident).out);
}
