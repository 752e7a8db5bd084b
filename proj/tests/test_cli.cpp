#include "cli.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

using namespace frieze;
using namespace frieze::testing;
using io::json;

struct Outcome {
    int code;
    std::string out;
    std::string err;

    json parsed() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "")
{
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(input);
    int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

TEST(Cli, ValidatePrintedExampleFails)
{
    Outcome r = invoke({"validate", data_path("exm_as_printed.json")});
    EXPECT_EQ(r.code, cli::kExitCheckFailed);
    json j = r.parsed();
    EXPECT_FALSE(j["ok"].get<bool>());
    EXPECT_EQ(j["violations"][0]["rule"], "Diamond");
    EXPECT_EQ(j["violations"][0]["indices"], json::array({3, 5}));
    EXPECT_NE(r.err.find("Diamond at (3,5)"), std::string::npos);
}

TEST(Cli, DetOfCorrectedExample)
{
    Outcome r = invoke({"det", data_path("exm_corrected.json"), "--method", "both"});
    EXPECT_EQ(r.code, cli::kExitOk);
    json j = r.parsed();
    EXPECT_EQ(j["closed"], "-384 - 192*sqrt(5)");
    EXPECT_EQ(j["elimination"], "-384 - 192*sqrt(5)");
    EXPECT_TRUE(j["agree"].get<bool>());
}

TEST(Cli, DetClosedFormRefusesInvalidMatrix)
{
    EXPECT_EQ(invoke({"det", data_path("exm_as_printed.json"), "--method", "closed"}).code, cli::kExitCheckFailed);
    EXPECT_EQ(invoke({"det", data_path("exm_as_printed.json"), "--method", "eliminate"}).code, cli::kExitOk);
}

TEST(Cli, TriangulateWithTrace)
{
    Outcome r = invoke({"triangulate", data_path("exm_corrected.json"), "--trace"});
    EXPECT_EQ(r.code, cli::kExitOk);
    json j = r.parsed();
    EXPECT_TRUE(j["closed_form_match"].get<bool>());
    EXPECT_TRUE(j["trace_check"]["ok"].get<bool>());
    EXPECT_EQ(j["trace"].size(), 6u);
    EXPECT_EQ(j["t"]["entries"][5][5], "-2 - sqrt(5)");
}

TEST(Cli, Reconstruct)
{
    Outcome r = invoke({"reconstruct", data_path("exm_corrected.json"), "--i", "3", "--j", "6"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.parsed()["value"], "-3 - 1/2*sqrt(5)");
    EXPECT_EQ(invoke({"reconstruct", data_path("exm_corrected.json"), "--i", "2", "--j", "6"}).code, cli::kExitUsage);
}

TEST(Cli, ConwayCoxeterCheck)
{
    Outcome r = invoke({"cc", "check", "--quiddity", "1,2,1,2"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.parsed()["det"], "-4");
    EXPECT_EQ(invoke({"cc", "check", "--quiddity", "1,2,2,2"}).code, cli::kExitCheckFailed);
    EXPECT_EQ(invoke({"cc", "check", "--triangulation", data_path("hexagon_triangulation.json")}).parsed()["det"],
              "-16");
}

TEST(Cli, RandomCommandsEchoSeed)
{
    Outcome cc = invoke({"-q", "cc", "random", "--k", "7", "--count", "5", "--seed", "9"});
    EXPECT_EQ(cc.code, cli::kExitOk);
    EXPECT_EQ(cc.parsed()["seed"], 9);
    EXPECT_EQ(cc.parsed()["samples"].size(), 5u);
    EXPECT_EQ(cc.out, invoke({"-q", "cc", "random", "--k", "7", "--count", "5", "--seed", "9"}).out);

    Outcome bm = invoke({"bm", "random", "--n", "5", "--count", "4"});
    EXPECT_EQ(bm.code, cli::kExitOk);
    EXPECT_TRUE(bm.parsed()["seed"].is_number());
    EXPECT_EQ(invoke({"bm", "check", "--matrix", data_path("two_row_example.json")}).parsed()["det"], "-108");
}

TEST(Cli, ExtractPipesIntoDet)
{
    Rng rng(91);
    int done = 0;
    while (done < 20) {
        const FieldDescriptor& fd = done % 2 ? q5() : FieldDescriptor::rational();
        json seeds{{"field", io::to_json(fd)},
                   {"x", {{"cycle", io::to_json(std::vector<FieldElement>{random_element(rng, fd), random_element(rng, fd)})}}},
                   {"y", {{"cycle", io::to_json(std::vector<FieldElement>{random_element(rng, fd)})}}}};
        const std::string n = std::to_string(2 + done % 6);
        const std::string k = std::to_string(done % 5 - 2);
        Outcome extracted = invoke({"-q", "frieze", "extract", "--seeds", "-", "--k", k, "--n", n, "--sign",
                                    done % 3 ? "plus" : "minus"},
                                   seeds.dump());
        if (extracted.code != cli::kExitOk) {
            ASSERT_EQ(extracted.parsed()["error"]["kind"], "ZeroEntry");
            continue;
        }
        Outcome det = invoke({"det", "-"}, extracted.out);
        EXPECT_EQ(det.code, cli::kExitOk) << det.out;
        EXPECT_TRUE(det.parsed()["agree"].get<bool>());
        ++done;
    }
}

TEST(Cli, FriezeAndZeroFriezeCommands)
{
    Outcome gen = invoke({"frieze", "gen", "--seeds", data_path("x2y3_seeds.json"), "--rows", "6", "--cols", "3"});
    EXPECT_EQ(gen.code, cli::kExitOk);
    EXPECT_EQ(gen.parsed()["rows"][5]["values"][0], "-11/8");

    Outcome cone = invoke({"frieze", "cone", "--seeds", data_path("x2y3_seeds.json"), "--i", "0", "--j", "2"});
    EXPECT_EQ(cone.parsed()["entries"].size(), 6u);

    EXPECT_EQ(invoke({"frieze", "period", "--seeds", data_path("x2y3_seeds.json")}).parsed()["period"], 1);

    Outcome zgen = invoke({"zerofrieze", "gen", "--seeds", data_path("tkf_example.json"), "--rows", "5", "--cols", "3",
                           "--start", "-1"});
    ASSERT_EQ(zgen.code, cli::kExitOk) << zgen.out;
    EXPECT_EQ(zgen.parsed()["rows"][4]["values"][2], "15/32");
    Outcome zcheck = invoke({"zerofrieze", "check", "-"}, zgen.out);
    EXPECT_EQ(zcheck.code, cli::kExitOk);

    json broken = zgen.parsed();
    broken["rows"][2]["values"][1] = "7";
    EXPECT_EQ(invoke({"zerofrieze", "check", "-"}, broken.dump()).code, cli::kExitCheckFailed);

    Outcome from = invoke({"zerofrieze", "from-frieze", "--seeds", data_path("x2y3_seeds.json"), "--k", "2", "--rows",
                           "4", "--cols", "4", "--start", "1"});
    ASSERT_EQ(from.code, cli::kExitOk);
    EXPECT_EQ(from.parsed()["rows"][1]["values"][1], "2");

    Outcome factor = invoke({"zerofrieze", "check", data_path("tkf_example.json"), "--rows", "5", "--cols", "3",
                             "--start", "-1", "--block", "-1,0,1,1"});
    EXPECT_EQ(factor.code, cli::kExitOk) << factor.out;
    EXPECT_TRUE(factor.parsed().contains("factorization"));
}

TEST(Cli, UsageAndInputErrors)
{
    EXPECT_EQ(invoke({}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"nonsense"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"det", "/no/such/file.json"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"det", "-"}, "{not json").code, cli::kExitUsage);
    EXPECT_EQ(invoke({"det", "-", "--method", "magic"}, "0 1\n1 0").code, cli::kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

}  // namespace
