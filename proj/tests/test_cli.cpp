#include "lucas_atlas/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using lucas::cli::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lucas::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

std::string without_wall_time(const std::string& text) {
    auto doc = Json::parse(text);
    doc["meta"].erase("wall_time_ms");
    return doc.dump();
}

}  // namespace

TEST(Cli, TermJson) {
    const auto doc = run_json({"term", "--A", "1", "--B", "-1", "--n", "10", "--emit", "json"});
    EXPECT_EQ(doc["command"], "term");
    EXPECT_EQ(doc["results"]["value"], "55");
    EXPECT_EQ(doc["meta"]["precision_bits"], 256);
    EXPECT_TRUE(doc["meta"].contains("version"));
    EXPECT_TRUE(doc["meta"].contains("wall_time_ms"));
}

TEST(Cli, LargeValuesAreStrings) {
    const auto doc = run_json({"term", "--A", "3", "--B", "-7", "--n", "200"});
    ASSERT_TRUE(doc["results"]["value"].is_string());
    EXPECT_EQ(doc["results"]["value"].get<std::string>(), lucas::term({3, -7}, 200).str());
}

TEST(Cli, CensusCsv) {
    const auto r = run({"census", "--t", "2", "--emit", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "t,exact_count,lower_formula,upper_formula,sandwich_holds\n2,16,-66,42,true\n");
}

TEST(Cli, CensusOracleAndRationalInput) {
    const auto doc = run_json({"census", "--t", "2.5", "--oracle"});
    EXPECT_EQ(doc["results"]["t"], "5/2");
    EXPECT_EQ(doc["results"]["exact_count"], "36");
    EXPECT_EQ(doc["results"]["oracle_matches"], true);
    EXPECT_EQ(doc["results"]["lower_formula"], "-72.5");
}

TEST(Cli, Classify) {
    const auto doc = run_json({"classify", "--A", "4", "--B", "8"});
    EXPECT_EQ(doc["results"]["kind"], "degenerate");
    EXPECT_EQ(doc["results"]["discriminant"], "-16");
    const auto fib = run_json({"classify", "--A", "1", "--B", "-1"});
    EXPECT_EQ(fib["results"]["kind"], "real");
    EXPECT_EQ(fib["results"]["dominant_root_abs"].get<std::string>().substr(0, 12), "1.6180339887");
}

TEST(Cli, LnSetMembersAndWitnesses) {
    const auto doc = run_json({"ln-set", "--n", "2", "--N", "10", "--members"});
    EXPECT_EQ(doc["results"]["count"], "10");
    ASSERT_EQ(doc["results"]["members"].size(), 10u);
    EXPECT_EQ(doc["results"]["members"][9], "10");

    const auto w = run_json({"ln-set", "--n", "5", "--N", "100", "--witnesses"});
    EXPECT_EQ(w["results"]["count"], "25");
    for (const auto& item : w["results"]["witnesses"]) {
        const lucas::LucasParams p{std::stoll(item["A"].get<std::string>()), std::stoll(item["B"].get<std::string>())};
        EXPECT_EQ(lucas::BigInt(abs(lucas::term(p, 5))).str(), item["value"].get<std::string>());
    }
    const auto csv = run({"ln-set", "--n", "5", "--N", "100", "--witnesses", "--emit", "csv"});
    EXPECT_EQ(csv.out.substr(0, 8), "value,A,");
}

TEST(Cli, LnGeSet) {
    const auto doc = run_json({"ln-ge-set", "--n", "5", "--N", "1000"});
    EXPECT_TRUE(doc["results"].contains("upper_bound"));
    EXPECT_TRUE(doc["results"].contains("max_index"));
}

TEST(Cli, GrowthCheck) {
    const auto doc = run_json({"growth-check", "--Amax", "5", "--Bmax", "5", "--nmax", "40"});
    EXPECT_EQ(doc["results"]["violations"], "0");
    EXPECT_EQ(doc["results"]["remark_violations"], "0");
}

TEST(Cli, Laurent) {
    const auto doc = run_json({"laurent", "--A", "2", "--B", "600", "--ell", "5"});
    EXPECT_EQ(doc["results"]["log_A_delta_branch"], "log(B)/2");
    EXPECT_EQ(doc["results"]["holds"], true);
    EXPECT_EQ(run({"laurent", "--A", "3", "--B", "2", "--ell", "5"}).code, 2);
}

TEST(Cli, Pell) {
    const auto doc = run_json({"pell", "--t", "4", "--ymax", "5"});
    ASSERT_EQ(doc["results"]["solutions"].size(), 2u);
    EXPECT_EQ(doc["results"]["solutions"][1]["x"], "7");
    EXPECT_EQ(doc["results"]["families"].size(), 3u);
    const auto csv = run({"pell", "--t", "4", "--ymax", "5", "--emit", "csv"});
    EXPECT_EQ(csv.out, "x,y\n3,1\n7,3\n");
}

TEST(Cli, DensityAndRegress) {
    const auto d = run_json({"density", "--n", "3", "--N", "1000"});
    EXPECT_EQ(d["results"]["ratio"], "1");
    const auto r = run_json({"regress", "--n", "7", "--Ns", "1000,10000,100000"});
    EXPECT_NEAR(std::stod(r["results"]["slope"].get<std::string>()), 0.5, 0.15);
    EXPECT_EQ(run({"regress", "--n", "7", "--Ns", "1000,1000"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"term", "--A", "1"}).code, 2);
    EXPECT_EQ(run({"term", "--A", "x", "--B", "1", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"term", "--A", "1", "--B", "1", "--n", "3", "--emit", "xml"}).code, 2);
    EXPECT_EQ(run({"term", "--A", "1", "--B", "1", "--n", "3", "--prec", "8"}).code, 2);
    EXPECT_EQ(run({"census", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"census", "--t", "abc"}).code, 2);
    EXPECT_EQ(run({"ln-set", "--n", "5", "--N", "0"}).code, 2);
    EXPECT_EQ(run({"ln-set", "--n", "1", "--N", "10"}).code, 2);
    EXPECT_EQ(run({"pell", "--t", "0", "--ymax", "10"}).code, 2);
    EXPECT_EQ(run({"density", "--n", "5", "--N", "10"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyPasses) {
    const auto r = run({"verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["results"]["passed"], true);
    EXPECT_GE(doc["results"]["checks"].size(), 10u);
}

TEST(Cli, JsonRoundTrip) {
    const auto r = run({"ln-set", "--n", "6", "--N", "500", "--witnesses"});
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(Json::parse(doc.dump(2)), doc);
    EXPECT_EQ(doc.dump(2) + "\n", r.out);
}

TEST(Cli, DeterministicOutput) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"census", "--t", "17/3"},
          std::vector<std::string>{"ln-ge-set", "--n", "5", "--N", "300", "--witnesses"},
          std::vector<std::string>{"classify", "--A", "5", "--B", "7"}}) {
        EXPECT_EQ(without_wall_time(run(args).out), without_wall_time(run(args).out));
    }
    const std::vector<std::string> csv{"ln-set", "--n", "5", "--N", "2000", "--members", "--emit", "csv"};
    EXPECT_EQ(run(csv).out, run(csv).out);
}

TEST(Cli, JobsInvariant) {
    auto a = Json::parse(run({"ln-set", "--n", "5", "--N", "2000", "--witnesses", "--jobs", "1"}).out);
    auto b = Json::parse(run({"ln-set", "--n", "5", "--N", "2000", "--witnesses", "--jobs", "4"}).out);
    EXPECT_EQ(a["results"], b["results"]);
    auto c = Json::parse(run({"census", "--t", "40", "--jobs", "1"}).out);
    auto d = Json::parse(run({"census", "--t", "40", "--jobs", "5"}).out);
    EXPECT_EQ(c["results"], d["results"]);
}

TEST(Cli, PrecisionSources) {
    ::setenv("LUCAS_ATLAS_PREC", "128", 1);
    const auto env = run_json({"classify", "--A", "1", "--B", "2"});
    EXPECT_EQ(env["meta"]["precision_bits"], 128);
    const auto flag = run_json({"classify", "--A", "1", "--B", "2", "--prec", "512"});
    EXPECT_EQ(flag["meta"]["precision_bits"], 512);
    ::setenv("LUCAS_ATLAS_PREC", "junk", 1);
    EXPECT_EQ(run({"classify", "--A", "1", "--B", "2"}).code, 2);
    ::unsetenv("LUCAS_ATLAS_PREC");
    const auto dflt = run_json({"classify", "--A", "1", "--B", "2"});
    EXPECT_EQ(dflt["meta"]["precision_bits"], 256);
}
