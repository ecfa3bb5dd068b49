#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using rootlace::cli::run;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("rootlace_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Cli, PolyCheckExitCodes) {
  EXPECT_EQ(invoke({"poly", "check", "3", "4", "1"}).code, 0);
  EXPECT_EQ(invoke({"poly", "check", "2", "4", "4", "1"}).code, 1);
  EXPECT_EQ(invoke({"poly", "check", "3", "4", "one"}).code, 2);
  EXPECT_EQ(invoke({"poly", "check", "0"}).code, 2);
  EXPECT_EQ(invoke({"poly", "check", "-2", "0", "1"}).code, 0);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, CertificateSchema) {
  const auto j = invoke_json({"poly", "check", "2", "4", "4", "1"}, 1);
  EXPECT_EQ(j["schema"], 1);
  const auto& cert = j["certificate"];
  EXPECT_EQ(cert["real_rooted"], false);
  EXPECT_EQ(cert["degree"], 3);
  ASSERT_EQ(cert["roots"].size(), 1U);
  EXPECT_TRUE(cert["roots"][0].contains("lo"));
  EXPECT_TRUE(cert["roots"][0].contains("hi"));
  EXPECT_EQ(cert["roots"][0]["mult"], 1);
}

TEST(Cli, JsonIsDeterministicAndSorted) {
  const auto a = invoke({"poly", "check", "3", "4", "1", "--format", "json"});
  const auto b = invoke({"poly", "check", "3", "4", "1", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_LT(a.out.find("\"certificate\""), a.out.find("\"polynomial\""));
  EXPECT_LT(a.out.find("\"polynomial\""), a.out.find("\"schema\""));
}

TEST(Cli, FormatFromEnvironment) {
  ::setenv("ROOTLACE_FORMAT", "json", 1);
  const auto r = invoke({"poly", "check", "3", "4", "1"});
  ::unsetenv("ROOTLACE_FORMAT");
  EXPECT_EQ(json::parse(r.out)["schema"], 1);
  EXPECT_EQ(invoke({"poly", "check", "1", "--format", "xml"}).code, 2);
}

TEST(Cli, TransformSchemaAndForce) {
  const std::vector<std::string> base{"transform", "--f", "3,4,1", "--g", "2,1", "--a", "0",
                                      "--b",       "1",   "--c",   "1",   "--d", "0"};
  EXPECT_EQ(invoke(base).code, 1);
  auto forced = base;
  forced.push_back("--force");
  const auto j = invoke_json(forced);
  EXPECT_EQ(j["hypothesis_ok"], false);
  EXPECT_EQ(j["violations"], json::array({"gate"}));
  EXPECT_EQ(j["output"], json::array({"2", "4", "4", "1"}));
  EXPECT_EQ(j["certificate"]["real_rooted"], false);
}

TEST(Cli, InterlaceAndSum) {
  EXPECT_EQ(invoke_json({"interlace", "--g", "2,1", "--f", "3,4,1"})["kind"], "Interlaces");
  EXPECT_EQ(invoke_json({"interlace", "--g", "8,6,1", "--f", "3,4,1"})["kind"], "AlternatesLeft");
  EXPECT_EQ(invoke({"interlace", "--g", "5,1", "--f", "3,4,1"}).code, 1);
  EXPECT_EQ(invoke_json({"sum", "--f", "3,4,1", "--g", "8,6,1"})["output"], json::array({"11", "10", "2"}));
}

TEST(Cli, SeqCertify) {
  const auto j = invoke_json({"seq", "certify", "1", "1", "1", "--max-order", "3", "--truncation", "6"}, 1);
  EXPECT_EQ(j["verdict"], "NotPF");
  EXPECT_EQ(j["minors"]["first_negative"]["rows"], json::array({1, 2, 3}));
  EXPECT_EQ(j["minors"]["first_negative"]["value"], "-1");
  EXPECT_EQ(invoke({"seq", "certify", "[1,3,3,1]"}).code, 0);
  const auto csv = invoke({"seq", "certify", "1,3,3,1", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("1 3 3 1,PF"), std::string::npos);
  EXPECT_EQ(invoke({"seq", "certify", "1", "-1"}).code, 2);
}

TEST(Cli, ArrayGenCsvAndParams) {
  const auto r = invoke({"array", "gen", "eulerian", "--n", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3,2,4\n"), std::string::npos);
  const auto path = temp_file("params.json", R"({"r":"1","s":"-1","t":"1","a":"0","b":"1","c":"0"})");
  const auto j = invoke_json({"array", "gen", "--params", path, "--n", "3"});
  EXPECT_EQ(j["rows"][3], json::array({"0", "1", "4", "1"}));
  EXPECT_EQ(j["gate"]["ok"], true);
  EXPECT_EQ(invoke({"array", "certify", "lah", "--m", "2", "--n", "6"}).code, 0);
  EXPECT_EQ(invoke({"array", "gen", "lah", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"array", "gen", "nope"}).code, 2);
}

TEST(Cli, FuzzAndReproducer) {
  const auto j = invoke_json({"fuzz", "theorem", "--count", "20", "--seed", "4"});
  EXPECT_EQ(j["passed"], 20);
  EXPECT_EQ(invoke({"fuzz", "theorem", "--count", "0"}).code, 2);
  EXPECT_EQ(invoke({"fuzz", "lemma"}).code, 2);

  // A reproducer with the counterexample runs through transform.
  const auto path = temp_file(
      "repro.json", R"({"kind":"theorem","a":"0","b":"1","c":"1","d":"0","f":["3","4","1"],"g":["2","1"]})");
  EXPECT_EQ(invoke({"transform", "--input", path}).code, 1);
  const auto forced = invoke_json({"transform", "--input", path, "--force"});
  EXPECT_EQ(forced["output"], json::array({"2", "4", "4", "1"}));
  const auto seq_path =
      temp_file("repro32.json", R"({"kind":"corollary32","a":"1","b":"1","c":"0","d":"0","xs":["1","2","1"]})");
  EXPECT_EQ(invoke_json({"transform", "--input", seq_path})["output"], json::array({"1", "3", "3", "1"}));
}

TEST(Cli, OrthogonalAndSimion) {
  const auto j = invoke_json({"orthogonal", "--family", "hermite", "--n", "3"});
  EXPECT_EQ(j["polynomials"][3], json::array({"0", "-12", "0", "8"}));
  const auto s = invoke_json({"simion", "1", "1"});
  EXPECT_EQ(s["polynomial"], json::array({"0", "1", "2"}));
  EXPECT_EQ(invoke_json({"simion", "3"})["multiplicity_of_minus_one"], 2);
}

TEST(Cli, ErrorsInJson) {
  const auto r = invoke({"pfmap", "1,1,1", "--a", "1", "--b", "1", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["error"]["type"], "NotPF");
}

}  // namespace
