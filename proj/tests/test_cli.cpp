#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "bmw/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = bmw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DimsE8) {
  Result r = run({"dims", "--type", "E8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("41803776000"), std::string::npos);
}

TEST(Cli, VerifyA2AllPasses) {
  Result r = run({"verify", "--type", "A2", "--suite", "all"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  Result r = run({"roots", "--type", "X9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("--help"), std::string::npos);
  EXPECT_EQ(run({"dims", "--type", "A3", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"roots", "dims"}).code, 2);
  EXPECT_EQ(run({"reduce", "--type", "A2", "--word", "g1 x2"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "E6", "--suite", "braid"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A2", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"tcoeff", "--type", "A3", "--node", "7", "--root", "1,1,0"}).code, 2);
  EXPECT_EQ(run({"tcoeff", "--type", "A3", "--node", "1", "--root", "1,0,1"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A3", "--specialize", "l=5/7"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A3", "--specialize", "l=5/7,r=1"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, SpecializedVerifyE6) {
  Result r = run({"verify", "--type", "E6", "--suite", "braid", "--specialize", "l=5/7,r=3/2"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, JsonRoundTripsAndIsDeterministic) {
  const std::vector<std::vector<std::string>> cmds = {
      {"roots", "--type", "D4", "--json"},
      {"reduce", "--type", "A3", "--word", "g1 g2 G1 e2 e1 g3 g3", "--json"},
      {"tcoeff", "--type", "D4", "--node", "2", "--root", "1,2,1,1", "--json"},
      {"tcoeff", "--type", "E7", "--node", "4", "--root", "1,2,2,3,2,1,1", "--specialize",
       "l=5/7,r=3/2", "--json"},
      {"hbeta", "--type", "E6", "--root", "1,2,2,3,2,1", "--node", "1", "--json"},
      {"matrices", "--type", "A3", "--json"},
      {"matrices", "--type", "E6", "--theta", "lk", "--r", "3/2", "--json"},
      {"verify", "--type", "D4", "--suite", "table1", "--json"},
      {"dims", "--type", "A5", "--json"},
  };
  for (const auto& c : cmds) {
    Result a = run(c);
    ASSERT_EQ(a.code, 0) << c[0] << " " << a.err;
    EXPECT_EQ(bmw::Json::parse(a.out).dump(2) + "\n", a.out) << c[0];
    EXPECT_EQ(run(c).out, a.out) << c[0];
  }
}

TEST(Cli, MatricesToFile) {
  auto path = std::filesystem::temp_directory_path() / "bmw_cli_matrices.json";
  Result r = run({"matrices", "--type", "A2", "--json", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  bmw::Json j = bmw::Json::parse(in);
  ASSERT_EQ(j["sigma"].size(), 2u);
  EXPECT_EQ(j["sigma"][0].size(), 3u);
  EXPECT_EQ(j["sigma"][0][0].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, CacheDirRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "bmw_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::vector<std::string> c = {"--cache-dir", dir.string(), "tcoeff", "--type", "D5",
                                "--node",      "3",          "--root", "1,1,1,1,1"};
  Result first = run(c);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "tcoeff-D5-generic.json"));
  Result second = run(c);
  EXPECT_EQ(second.out, first.out);
  c.erase(c.begin(), c.begin() + 2);
  EXPECT_EQ(run(c).out, first.out);
  std::filesystem::remove_all(dir);
}
