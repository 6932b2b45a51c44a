#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"

using namespace syscodes;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("syscodes_test_" + name);
}

}  // namespace

TEST(CliCode, Torus) {
    CliRun r = run({"code", "torus:2", "--i", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "[[8,2,2]]"));
    EXPECT_TRUE(contains(r.out, "d2_over_n=1/2"));
}

TEST(CliCode, ProjectivePlane) {
    CliRun r = run({"code", "rp2", "--i", "1", "--witness"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "n=15 k=1"));
    EXPECT_TRUE(contains(r.out, "csys_primal=3"));
    EXPECT_TRUE(contains(r.out, "csys_dual="));
    EXPECT_TRUE(contains(r.out, "witness_primal="));
}

TEST(CliCode, FileInputAndErrors) {
    auto good = temp_path("good.json");
    std::ofstream(good) << R"({"n": 4, "v1": [[0, 1, 2, 3]], "v2": [[0, 1, 2, 3]]})";
    CliRun ok = run({"code", good.string()});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(contains(ok.out, "[[4,2,2]]"));

    auto bad = temp_path("bad.json");
    std::ofstream(bad) << R"({"dims": [2, 1], "boundary": [[[0, 7]]]})";
    CliRun parse = run({"code", bad.string()});
    EXPECT_EQ(parse.code, 2);
    EXPECT_TRUE(contains(parse.err, "boundary[0][0][1]"));

    CliRun trivial = run({"code", "sphere"});
    EXPECT_EQ(trivial.code, 3);
    EXPECT_TRUE(contains(trivial.err, "TrivialHomology"));
    EXPECT_EQ(std::count(trivial.err.begin(), trivial.err.end(), '\n'), 1);

    EXPECT_EQ(run({"code", "nonsense:3"}).code, 2);
    EXPECT_EQ(run({"code", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"code", "torus:2", "--i", "5"}).code, 3);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST(CliCode, MaxWeightLeavesDistanceUnknown) {
    CliRun r = run({"code", "torus:4", "--max-weight", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "[[32,2,?]]"));
}

TEST(CliScan, TwoTori) {
    CliRun r = run({"scan", "torus:2", "torus:3"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header.rfind("descriptor,n,k,d,d2_over_n,R_delta2_n2,bound36", 0), 0u);
    std::string row;
    std::getline(lines, row);
    EXPECT_EQ(row, "torus:2,8,2,2,0.5,1,true,2,2,false");
    std::getline(lines, row);
    EXPECT_EQ(row, "torus:3,18,2,3,0.5,1,true,3,3,false");
}

TEST(CliScan, SubdivisionRow) {
    CliRun r = run({"scan", "subdiv:torus:2:rounds=3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "subdiv:torus:2:rounds=3,64,2,2,0.0625,0.125,true,16,2,false"));
}

TEST(CliScan, OutputFileIsByteStable) {
    auto path = temp_path("scan.csv");
    std::vector<std::string> args = {"scan", "rp2", "torus:3", "tritorus:3", "genus:2", "-o", path.string()};
    ASSERT_EQ(run(args).code, 0);
    std::stringstream first;
    first << std::ifstream(path).rdbuf();
    ASSERT_EQ(run(args).code, 0);
    std::stringstream second;
    second << std::ifstream(path).rdbuf();
    std::string text = first.str();
    EXPECT_EQ(text, second.str());
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
    std::filesystem::remove(path);
}

TEST(CliScan, Errors) {
    CliRun empty = run({"scan"});
    EXPECT_EQ(empty.code, 2);
    EXPECT_TRUE(contains(empty.err, "Usage"));
    EXPECT_EQ(run({"scan", "torus:2", "-o", "/nonexistent/dir/out.csv"}).code, 2);
    EXPECT_EQ(run({"scan", "sphere"}).code, 3);
}

TEST(CliVerify, Fuchsian) {
    CliRun r = run({"verify", "fuchsian", "--p", "3", "--N", "2", "--B", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "PASS trace bound p=3 N=2 B=4"));
    EXPECT_TRUE(contains(r.out, "min_trace=6 >= 2"));
    EXPECT_FALSE(contains(r.out, "FAIL"));
    EXPECT_EQ(run({"verify", "fuchsian", "--p", "5"}).code, 2);
    CliRun csv = run({"verify", "fuchsian", "--p", "3", "--N", "2", "--B", "4", "--csv"});
    EXPECT_TRUE(contains(csv.out, "p,N,B,count,min_trace,bound,satisfied\n3,2,4,"));
}

TEST(CliVerify, Metric) {
    CliRun r = run({"verify", "metric", "--eta", "0.5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    EXPECT_FALSE(contains(r.out, "FAIL"));
    EXPECT_TRUE(contains(r.out, "< 1/77"));
    EXPECT_TRUE(contains(r.out, "< 1/150"));
    EXPECT_TRUE(contains(r.out, "< 1/2"));
    EXPECT_EQ(run({"verify", "metric", "--eta", "0.4"}).code, 2);
    EXPECT_EQ(run({"verify", "metric", "--eta", "abc"}).code, 2);
}

TEST(CliVerify, Oracle) {
    CliRun r = run({"verify", "oracle", "--n", "4", "--trials", "100", "--css-trials", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "PASS fixed-space dimension"));
    EXPECT_EQ(run({"verify", "oracle", "--n", "9"}).code, 2);
}

TEST(CliVerify, UnknownSuiteAndUsage) {
    EXPECT_EQ(run({"verify", "bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
