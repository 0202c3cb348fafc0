#include "focal_sieve/cli.hpp"
#include "svg_check.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using focal_sieve::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("focal_sieve_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(CliSieve, BothMethodsMatch) {
  const auto r = invoke({"sieve", "--p", "3", "--method", "both"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5 7\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verdict: MATCH"), std::string::npos);

  const auto big = invoke({"sieve", "--p", "101", "--method", "both", "--format", "json"});
  EXPECT_EQ(big.code, 0);
  const auto j = nlohmann::json::parse(big.out);
  EXPECT_EQ(j["verdict"], "MATCH");
  EXPECT_EQ(j["p"], 101);
  EXPECT_EQ(j["method"], "both");
  EXPECT_EQ(j["primeCount"], j["primes"].size());
}

TEST(CliSieve, Formats) {
  const auto json = invoke({"sieve", "--p", "3", "--format", "json"});
  EXPECT_EQ(json.out, "{\"method\":\"geometric\",\"p\":3,\"primeCount\":2,\"primes\":[5,7]}\n");
  const auto csv = invoke({"sieve", "--p", "3", "--method", "classic", "--format", "csv"});
  EXPECT_EQ(csv.out, "5\n7\n");
}

TEST(CliSieve, CompositeIsUsageError) {
  const auto r = invoke({"sieve", "--p", "12"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("factor 2"), std::string::npos);
  EXPECT_EQ(invoke({"sieve", "--p", "1"}).code, 2);
  EXPECT_EQ(invoke({"sieve", "--p", "7", "--method", "magic"}).code, 2);
  EXPECT_EQ(invoke({"sieve"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(CliVerify, Thm3UpTo101) {
  const auto r = invoke({"verify", "--p-max", "101", "--properties", "thm3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pRange"], nlohmann::json::array({2, 101}));
  ASSERT_EQ(j["properties"].size(), 1u);
  EXPECT_EQ(j["properties"][0]["name"], "thm3");
  EXPECT_GT(j["properties"][0]["checkedCases"].get<long>(), 0);
  EXPECT_TRUE(j["properties"][0]["failures"].empty());
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(CliVerify, RemainderIdentitiesUpTo10000) {
  const auto r = invoke({"verify", "--p-max", "10000", "--properties", "prop15,eq14,eq15"});
  ASSERT_EQ(r.code, 0) << r.out.substr(0, 2000);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["properties"].size(), 3u);
  for (const auto& prop : j["properties"]) EXPECT_TRUE(prop["failures"].empty()) << prop["name"];
}

TEST(CliVerify, AllPropertiesSmallRange) {
  const auto r = invoke({"verify", "--p-max", "31"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["properties"].size(), 13u);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--p-max", "1"}).code, 2);
  const auto r = invoke({"verify", "--p-max", "10", "--properties", "thm3,bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
}

TEST(CliVerify, ReportOrderIndependentOfThreads) {
  using namespace focal_sieve;
  const auto props = all_properties();
  const auto one = run_verify(60, props, 1);
  const auto many = run_verify(60, props, 4);
  ASSERT_EQ(one.properties.size(), many.properties.size());
  for (std::size_t i = 0; i < one.properties.size(); ++i) {
    EXPECT_EQ(one.properties[i].name, many.properties[i].name);
    EXPECT_EQ(one.properties[i].checked_cases, many.properties[i].checked_cases);
    EXPECT_EQ(one.properties[i].failures, many.properties[i].failures);
  }
}

TEST(CliFigure, WritesSvgFiles) {
  const auto fig1 = temp_file("fig1.svg");
  const auto r1 = invoke({"figure", "--p", "101", "--which", "sieve", "--out", fig1.string()});
  ASSERT_EQ(r1.code, 0) << r1.err;
  EXPECT_NE(r1.out.find("10201 points"), std::string::npos);
  EXPECT_TRUE(svg_check::parse(slurp(fig1)).ok);

  const auto fig3 = temp_file("fig3.svg");
  const auto r3 = invoke({"figure", "--p", "11", "--which", "quotients", "--out", fig3.string()});
  ASSERT_EQ(r3.code, 0);
  EXPECT_NE(r3.out.find("9 points, 3 extremes"), std::string::npos) << r3.out;

  const auto fig4 = temp_file("fig4.svg");
  const auto r4 = invoke({"figure", "--p", "101", "--which", "qr", "--out", fig4.string()});
  ASSERT_EQ(r4.code, 0);
  EXPECT_NE(r4.out.find("99 points"), std::string::npos);

  const auto fig2 = temp_file("fig2.svg");
  const auto r2 = invoke({"figure", "--p", "11", "--which", "detail", "--window", "0,-2,12,0", "--out", fig2.string()});
  ASSERT_EQ(r2.code, 0) << r2.err;
  EXPECT_NE(r2.out.find("33 points"), std::string::npos) << r2.out;  // rows y = 0, -1, -2
  for (const auto& f : {fig1, fig2, fig3, fig4}) std::filesystem::remove(f);
}

TEST(CliFigure, Palette) {
  const auto palette = temp_file("palette.json");
  std::ofstream(palette) << R"({"uncrossed": "#123456"})";
  const auto out = temp_file("pal.svg");
  const auto r = invoke({"figure", "--p", "3", "--which", "sieve", "--palette", palette.string(), "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(out).find("#123456"), std::string::npos);
  std::ofstream(palette) << "not json";
  EXPECT_EQ(invoke({"figure", "--p", "3", "--which", "sieve", "--palette", palette.string(), "--out", out.string()}).code, 2);
  EXPECT_EQ(invoke({"figure", "--p", "3", "--which", "sieve", "--palette", "/nonexistent/p.json", "--out", out.string()}).code, 3);
  std::filesystem::remove(palette);
  std::filesystem::remove(out);
}

TEST(CliFigure, Errors) {
  EXPECT_EQ(invoke({"figure", "--p", "11", "--which", "sieve", "--out", "/nonexistent-dir/x.svg"}).code, 3);
  EXPECT_EQ(invoke({"figure", "--p", "15", "--which", "sieve", "--out", "x.svg"}).code, 2);
  EXPECT_EQ(invoke({"figure", "--p", "11", "--which", "nope", "--out", "x.svg"}).code, 2);
  EXPECT_EQ(invoke({"figure", "--p", "11", "--which", "sieve", "--width", "0", "--out", "x.svg"}).code, 2);
  EXPECT_EQ(invoke({"figure", "--p", "11", "--which", "detail", "--window", "1,0,1,0", "--out", "x.svg"}).code, 2);
  EXPECT_EQ(invoke({"figure", "--p", "11", "--which", "detail", "--window", "1,2", "--out", "x.svg"}).code, 2);
  EXPECT_FALSE(std::filesystem::exists("x.svg"));
}

TEST(CliBench, Rows) {
  const auto one = invoke({"bench", "--p-max", "2", "--format", "json"});
  ASSERT_EQ(one.code, 0);
  const auto j = nlohmann::json::parse(one.out);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["p"], 2);
  EXPECT_TRUE(j["rows"][0]["geomMs"].is_number());
  EXPECT_TRUE(j["rows"][0]["classicMs"].is_number());

  const auto table = invoke({"bench", "--p-max", "101"});
  ASSERT_EQ(table.code, 0);
  EXPECT_EQ(std::count(table.out.begin(), table.out.end(), '\n'), 1 + 26);  // header + primes <= 101
  EXPECT_EQ(invoke({"bench", "--p-max", "1"}).code, 2);
}
