#include "cli.hpp"
#include "ratdist/rational.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using ratdist::Rational;
using ratdist::cli::cli_run;
using json = nlohmann::json;

namespace {

struct Invocation {
    int code;
    std::string out, err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

// Every string leaf that looks numeric must round-trip through the parser.
void check_fractions(const json& j, int& count) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (!s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos) {
            EXPECT_EQ(Rational::parse(s).str(), s);
            ++count;
        }
    } else if (j.is_structured()) {
        for (const auto& v : j) check_fractions(v, count);
    }
}

} // namespace

TEST(Cli, VerifyTable3Json) {
    Invocation r = run({"verify", "table", "3", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["rows"].size(), 2u);
    EXPECT_EQ(j["rows"][0]["printed"][0], "71/36");
    EXPECT_EQ(j["rows"][1]["printed"][4], "409/300");
    EXPECT_TRUE(j["rows"][1]["printed_match"].get<bool>());
    int n = 0;
    check_fractions(j, n);
    EXPECT_GT(n, 20);
}

TEST(Cli, VerifyTables) {
    for (const char* id : {"1", "2", "3"}) EXPECT_EQ(run({"verify", "table", id}).code, 0) << id;
    EXPECT_EQ(run({"verify", "table", "4"}).code, 1);
}

TEST(Cli, VerifyPoint) {
    EXPECT_EQ(run({"verify", "point", "--xyz", "1/2,1/2,1/3", "--target", "square3d"}).code, 2);
    EXPECT_EQ(run({"verify", "point", "--xyz", "1/2,1/2,1/4", "--target", "square3d"}).code, 0);
    EXPECT_EQ(run({"verify", "point", "--xyz", "88/399,55/133,0", "--target", "rect:13/12"}).code, 0);
    EXPECT_EQ(run({"verify", "point", "--xyz", "31/108,31/108,1519/1080", "--target", "cube-six-diag"}).code, 0);
    EXPECT_EQ(run({"verify", "point", "--xyz", "31/108,31/108,1519/1080", "--target", "cube"}).code, 2);
    EXPECT_EQ(run({"verify", "point", "--xyz", "1/2,1/2", "--target", "square3d"}).code, 1);
    EXPECT_EQ(run({"verify", "point", "--xyz", "1/0,1,1", "--target", "square3d"}).code, 1);
    EXPECT_EQ(run({"verify", "point", "--xyz", "1,1,1", "--target", "hexagon"}).code, 1);
}

TEST(Cli, VerifyPointTetraFile) {
    std::string path = ::testing::TempDir() + "rathbun.json";
    {
        std::ofstream f(path);
        f << R"({"vertices": [["0","0","0"], [1,0,0], ["11/200","117/800","0"], ["7/25","63/325","21/260"]]})";
    }
    Invocation r = run({"verify", "point", "--xyz", "617/4900,2553/63700,3/25480", "--target", "tetra:" + path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run({"verify", "point", "--xyz", "1,1,1", "--target", "tetra:/nonexistent.json"}).code, 1);
    std::remove(path.c_str());
}

TEST(Cli, SearchCsv) {
    Invocation r = run({"search", "rect", "--sum", "400", "--threads", "2", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 6), "a,x,y\n");
    EXPECT_NE(r.out.find("12/11,24/77,32/77"), std::string::npos);
    // Progress goes to stderr only.
    EXPECT_NE(r.err.find("hit(s)"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);

    Invocation c = run({"search", "cube-surface", "--format", "csv"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "m,t,U\n-24,360,313\n24,360,313\n");
}

TEST(Cli, SearchJsonMirrorsHit) {
    Invocation r = run({"search", "square3d", "--den", "108", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_EQ(j["hits"].size(), 1u);
    const json& h = j["hits"][0];
    EXPECT_EQ(h["kind"], "square3d");
    EXPECT_EQ(h["point"], json::array({"5/54", "35/108", "7/54"}));
    EXPECT_TRUE(h["report"]["all_rational"].get<bool>());
    EXPECT_EQ(run({"search", "rect", "--sum", "0"}).code, 1);
    EXPECT_EQ(run({"search", "hexagon"}).code, 1);
}

TEST(Cli, SearchThreadsDoNotChangeOutput) {
    Invocation a = run({"search", "rect", "--sum", "300", "--threads", "1", "--format", "json"});
    Invocation b = run({"search", "rect", "--sum", "300", "--threads", "3", "--seed", "42", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Families) {
    EXPECT_EQ(run({"family", "square3d", "--t", "30"}).code, 0);
    EXPECT_EQ(run({"family", "rect", "--t", "2/3", "--u", "1", "--v", "2"}).code, 0);
    EXPECT_EQ(run({"family", "sqrt2", "--u", "2", "--w", "1/3"}).code, 0);
    EXPECT_EQ(run({"family", "line", "--u", "1/2"}).code, 0);
    EXPECT_EQ(run({"family", "half-plane", "--u", "2", "--v", "3"}).code, 0);
    EXPECT_EQ(run({"family", "diag", "--k", "2"}).code, 0);
    EXPECT_EQ(run({"family", "cube-six", "--t", "2"}).code, 0);
    EXPECT_EQ(run({"family", "rect", "--t", "2/3"}).code, 1);
    EXPECT_EQ(run({"family", "rect", "--t", "1", "--u", "1", "--v", "2"}).code, 1);
    EXPECT_EQ(run({"family", "torus", "--t", "1"}).code, 1);
    Invocation j = run({"family", "line", "--u", "1/2", "--format", "json"});
    EXPECT_EQ(json::parse(j.out)["point"], json::array({"1/2", "1/2", "1/4"}));
}

TEST(Cli, Generate) {
    for (auto args : std::vector<std::vector<std::string>>{{"generate", "interior-rect", "--t", "1/3", "--n", "2"},
                                                           {"generate", "diag", "--k", "2", "--n", "2"},
                                                           {"generate", "cube-six", "--t", "2", "--n", "2"}}) {
        args.insert(args.end(), {"--format", "json"});
        Invocation r = run(args);
        EXPECT_EQ(r.code, 0) << args[1] << r.err;
        EXPECT_FALSE(json::parse(r.out)["points"].empty()) << args[1];
    }
    EXPECT_EQ(run({"generate", "diag", "--n", "2"}).code, 1);
    EXPECT_EQ(run({"generate", "diag", "--k", "2", "--n", "0"}).code, 1);
}

TEST(Cli, Tetra) {
    const std::string rathbun = "0,0,0;1,0,0;11/200,117/800,0;7/25,63/325,21/260";
    Invocation c = run({"tetra", "construct", "--vertices", rathbun, "--samples", "5", "--seed", "3", "--format", "json"});
    EXPECT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(json::parse(c.out)["samples"].size(), 5u);
    Invocation c2 = run({"tetra", "construct", "--vertices", rathbun, "--samples", "5", "--seed", "3", "--format", "json"});
    EXPECT_EQ(c.out, c2.out);

    Invocation s = run({"tetra", "singular", "--vertices", rathbun, "--format", "csv"});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 41);

    EXPECT_EQ(run({"tetra", "construct", "--vertices", "0,0,0;1,2,3;2,4,6;0,1,5"}).code, 1);
    EXPECT_EQ(run({"tetra", "construct"}).code, 1);
    // The displayed volume formula does not hold, so heron reports a failure.
    Invocation h = run({"tetra", "heron", "--m", "2", "--format", "json"});
    EXPECT_EQ(h.code, 2);
    json j = json::parse(h.out);
    EXPECT_TRUE(j["edges_match"].get<bool>());
    EXPECT_FALSE(j["volume_match"].get<bool>());
    EXPECT_EQ(run({"tetra", "heron", "--m", "1"}).code, 1);
}

TEST(Cli, Audit) {
    Invocation r = run({"audit", "prop31", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["printed"]["passed"], 0);
    EXPECT_EQ(j["corrected"]["passed"], 4);
}

TEST(Cli, Usage) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"verify"}).code, 1);
    EXPECT_EQ(run({"verify", "table", "1", "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"verify", "table", "1", "--frobnicate"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}
