#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"
#include "schurlab/errors.hpp"

using namespace schurlab;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "schurlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

} // namespace

TEST(Cli, MultiplierJson) {
    const auto doc = run_json({"multiplier", "--name", "L5_7"});
    EXPECT_EQ(doc.at("schema_version"), "1");
    EXPECT_EQ(doc.at("command"), "multiplier");
    EXPECT_EQ(doc.at("algebra").at("name"), "L5_7");
    EXPECT_EQ(doc.at("report").at("dim_M"), 3);
    EXPECT_EQ(doc.at("report").at("dim_exterior_square"), 6);
}

TEST(Cli, BoundsJson) {
    const auto r = run_json({"bounds", "--name", "L5_8"}).at("report");
    EXPECT_EQ(r.at("dim_M"), 6);
    EXPECT_EQ(r.at("bound_e2"), 6);
    EXPECT_EQ(r.at("bound_e1"), 6);
    EXPECT_EQ(r.at("attains_e2"), true);
    const auto a = run_json({"bounds", "--name", "A3"}).at("report");
    EXPECT_TRUE(a.at("bound_e2").is_null());
}

TEST(Cli, CapableJson) {
    EXPECT_EQ(run_json({"capable", "--name", "A1"}).at("report").at("capable"), false);
    EXPECT_EQ(run_json({"capable", "--name", "H1"}).at("report").at("capable"), true);
    EXPECT_EQ(run_json({"capable", "--name", "H2"}).at("report").at("dim_exterior_center"), 1);
}

TEST(Cli, ParameterIdentity) {
    const auto doc = run_json({"multiplier", "--name", "L6_22", "--param", "eps=1/2"});
    EXPECT_EQ(doc.at("algebra").at("parameters").at("eps"), "1/2");
    EXPECT_EQ(doc.at("report").at("dim_M"), 8);
}

TEST(Cli, InfoJson) {
    const auto r = run_json({"info", "--name", "L5_9"}).at("report");
    EXPECT_EQ(r.at("n"), 5);
    EXPECT_EQ(r.at("c"), 3);
}

TEST(Cli, FileInputCarriesDigest) {
    const auto path = std::filesystem::temp_directory_path() / "schurlab_cli_test.lie";
    {
        std::ofstream f(path);
        f << "algebra heis dim 3\n[x1,x2] = x3\n";
    }
    const auto doc = run_json({"multiplier", "--file", path.string()});
    EXPECT_EQ(doc.at("algebra").at("source"), "file");
    EXPECT_EQ(doc.at("algebra").at("name"), "heis");
    EXPECT_EQ(doc.at("algebra").at("digest"), cli::fnv1a64("algebra heis dim 3\n[x1,x2] = x3\n"));
    EXPECT_EQ(doc.at("report").at("dim_M"), 2);
    std::filesystem::remove(path);
}

TEST(Cli, OutputIsDeterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"sweep", "--max-dim", "6", "--format", "json"},
                                                                  {"multiplier", "--name", "L6_26"},
                                                                  {"check", "--theorem", "2.1", "--max-dim", "5"}}) {
        const auto a = run_cli(args), b = run_cli(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
    EXPECT_EQ(run_cli({"sweep", "--max-dim", "7", "--format", "json"}).out,
              run_cli({"sweep", "--max-dim", "7", "--parallel", "--format", "json"}).out);
}

TEST(Cli, SweepJson) {
    const auto r = run_json({"sweep", "--max-dim", "6"}).at("report");
    EXPECT_EQ(r.at("ok"), true);
    EXPECT_EQ(r.at("instances"), 28);
    EXPECT_EQ(r.at("attainers"), json({"H1", "H1+A1", "H1+A2", "H1+A3", "L5_8", "L6_26"}));
}

TEST(Cli, CheckJson) {
    const auto doc = run_json({"check", "--max-dim", "6"});
    EXPECT_EQ(doc.at("all_hold"), true);
    EXPECT_EQ(doc.at("theorems").size(), cli::kTheoremIds.size());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"multiplier", "--name", "L9_1"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"multiplier", "--name", "L6_22"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"multiplier"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"bogus"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"sweep", "--max-dim", "9"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"multiplier", "--name", "L5_7", "--word-cap", "10"}).code, cli::kResourceLimit);
    EXPECT_EQ(run_cli({"sweep", "--max-dim", "5"}).code, cli::kOk);
    EXPECT_EQ(run_cli({"list", "--max-dim", "4"}).code, cli::kOk);
    const auto err = run_cli({"multiplier", "--name", "L9_1"}).err;
    EXPECT_NE(err.find("L9_1"), std::string::npos);
}

TEST(Cli, TableFormat) {
    const auto r = run_cli({"multiplier", "--name", "H1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dim_M"), std::string::npos);
}

TEST(Cli, RunTheoremRejectsUnknownId) { EXPECT_THROW(cli::run_theorem("9.9", {}), InputError); }
