#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "lzero/cli.hpp"
#include "lzero/errors.hpp"
#include "lzero/version.hpp"

using namespace lzero;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_cache(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("lzero_cli_" + name + ".jsonl");
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Cli, ParseComplex) {
  EXPECT_EQ(parse_complex("0.5+14.1i"), std::complex<double>(0.5, 14.1));
  EXPECT_EQ(parse_complex("2"), std::complex<double>(2, 0));
  EXPECT_EQ(parse_complex("-3i"), std::complex<double>(0, -3));
  EXPECT_EQ(parse_complex("1-2.5e-3i"), std::complex<double>(1, -2.5e-3));
  EXPECT_EQ(parse_complex("1e-2+i"), std::complex<double>(0.01, 1));
  EXPECT_EQ(parse_complex("0.5 - 7 i"), std::complex<double>(0.5, -7));
  EXPECT_THROW(parse_complex("abc"), RejectedInput);
  EXPECT_THROW(parse_complex(""), RejectedInput);
}

TEST(Cli, Chars) {
  const auto r = run({"chars", "--modulus", "8", "--primitive-only"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["label"], "8.3");
  EXPECT_EQ(j[1]["label"], "8.5");
  for (const auto& rec : j)
    for (const char* key : {"label", "conductor", "order", "parity"}) EXPECT_TRUE(rec.contains(key));
  EXPECT_EQ(json::parse(run({"chars", "--modulus", "8"}).out).size(), 4u);
}

TEST(Cli, Eval) {
  const auto r = run({"eval", "--label", "4.3", "--s", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["value_re"].get<double>(), 0.78539816339744831, 1e-12);
  EXPECT_EQ(j["value_im"].get<double>(), 0.0);
  EXPECT_TRUE(j.contains("err_estimate"));
  EXPECT_EQ(j["version"], kCodeVersion);
  const auto e = json::parse(run({"eval", "--label", "5.2", "--s", "0.3+7.1i", "--precision", "extended"}).out);
  EXPECT_NEAR(e["value_re"].get<double>(), 0.86635402397840621972, 1e-12);
  EXPECT_NEAR(e["value_im"].get<double>(), 0.50694819220416456851, 1e-12);
  EXPECT_NE(e["fingerprint"], j["fingerprint"]);
  EXPECT_EQ(run({"eval", "--label", "1.1", "--s", "1"}).code, ExitCode::rejected_input);
}

TEST(Cli, VerifyThm2) {
  const auto r = run({"verify-thm2", "--label", "4.3", "--x", "3", "--t1", "1", "--t2", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_LE(j["ratio"].get<double>(), 5);
  EXPECT_TRUE(j["within_bound"].get<bool>());
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["zeros_used"], 50);
  for (const char* key : {"version", "fingerprint", "zero_sum", "main_term", "error_budget", "observed_error"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, DecimalXIsExact) {
  const auto r = run({"landau", "--label", "4.3", "--x", "2.5", "--t1", "1", "--t2", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["x"], "5/2");
  EXPECT_EQ(run({"landau", "--label", "4.3", "--x", "2.5.1", "--t1", "1", "--t2", "20"}).code, ExitCode::usage_error);
  EXPECT_EQ(run({"landau", "--label", "4.3", "--x", "3/2", "--t1", "1", "--t2", "20"}).code,
            ExitCode::rejected_input);
}

TEST(Cli, LandauCsv) {
  const auto r = run({"landau", "--label", "1.1", "--x", "2", "--x", "13/2", "--t1", "1", "--t2", "50", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, row1, row2, extra;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(header,
            "label,x,t1,t2,sum_re,sum_im,main_re,main_im,error_budget,observed_error,ratio,zeros_used,certified,version");
  EXPECT_EQ(row1.rfind("1.1,2,1,50,", 0), 0u);
  EXPECT_EQ(row2.rfind("1.1,13/2,1,50,", 0), 0u);
  EXPECT_EQ(std::count(row1.begin(), row1.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(Cli, ZerosWithCacheIsDeterministic) {
  const auto cache = temp_cache("zeros");
  const std::vector<std::string> args = {"zeros", "--label", "5.2", "--t1", "0", "--t2", "30", "--cache", cache.string()};
  const auto cold = run(args);
  ASSERT_EQ(cold.code, 0) << cold.err;
  ASSERT_TRUE(std::filesystem::exists(cache));
  const auto warm = run(args);
  EXPECT_EQ(cold.out, warm.out);
  const auto nocache = run({"zeros", "--label", "5.2", "--t1", "0", "--t2", "30"});
  EXPECT_EQ(cold.out, nocache.out);
  const auto j = json::parse(cold.out);
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["count"], j["zeros"].size());
  std::filesystem::remove(cache);
}

TEST(Cli, CacheFromEnvironment) {
  const auto cache = temp_cache("env");
  ::setenv("LZERO_CACHE", cache.c_str(), 1);
  const auto r = run({"zeros", "--label", "3.2", "--t1", "1", "--t2", "20"});
  ::unsetenv("LZERO_CACHE");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(cache));
  std::filesystem::remove(cache);
}

TEST(Cli, Burgess) {
  const auto r = run({"burgess", "--q-range", "3:20", "--theta", "0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["missing"], 0);
  EXPECT_EQ(j["rows"].size(), j["sums"].size());
  EXPECT_EQ(j["params"]["theta"], 0.4);
  const auto csv = run({"burgess", "--q-range", "3:10", "--csv", "--cubefree-only"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.rfind("label,order,p0,distance,scaled,H,sum_abs,burgess_rhs,ratio,version\n", 0), 0u);
  EXPECT_EQ(csv.out.find("\n8."), std::string::npos);
  const auto empty = json::parse(run({"burgess", "--q-range", "10:5"}).out);
  EXPECT_TRUE(empty["rows"].empty());
  EXPECT_EQ(run({"burgess", "--q-range", "10"}).code, ExitCode::rejected_input);
}

TEST(Cli, DistinctAndThm1) {
  const auto d = run({"distinct", "--label1", "5.2", "--label2", "5.3", "--T", "12"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(d.out)["verdict"], "distinct");
  const auto t = run({"verify-thm1", "--label1", "5.2", "--label2", "5.3", "--T", "30"});
  ASSERT_EQ(t.code, 0) << t.err;
  const auto j = json::parse(t.out);
  EXPECT_EQ(j["verdict"], "distinct");
  EXPECT_EQ(j["params"]["theta"], 0.4);
  EXPECT_NEAR(j["params"]["theta_prime"].get<double>(), 11.0 / 30, 1e-15);
  EXPECT_EQ(run({"verify-thm1", "--label1", "3.2", "--label2", "3.2", "--T", "30"}).code, ExitCode::rejected_input);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, ExitCode::usage_error);
  EXPECT_EQ(run({"chars"}).code, ExitCode::usage_error);
  EXPECT_EQ(run({"frobnicate"}).code, ExitCode::usage_error);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"eval", "--label", "6.3", "--s", "2"}).code, ExitCode::rejected_input);
}
