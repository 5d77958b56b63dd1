// Copyright 2026 The ffsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ffsi/cli/app.hpp"
#include "ffsi/cli/parse.hpp"
#include "ffsi/cli/suites.hpp"

namespace ffsi::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Invocation ffsi(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / ("ffsi_cli_" + std::string(info->name()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<std::string> counts_of(const nlohmann::json& report) {
  std::vector<std::string> out;
  for (const auto& row : report.at("counts")) out.push_back(row.at("count").get<std::string>());
  return out;
}

TEST(CliSum, DivisorScanPasses) {
  const Invocation r = ffsi({"sum", "--p", "2", "--e", "1", "--n", "3", "--m", "1", "--fn", "dk:2", "--mode", "all", "--out",
                      "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.json().at("verdict"), "PASS");
}

TEST(CliSum, PrimePolynomialCountHasNoError) {
  const Invocation r = ffsi({"sum", "--p", "2", "--e", "1", "--n", "3", "--m", "0", "--fn", "lambda", "--mode", "all",
                      "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.json().at("worst_error_num"), "0");
  EXPECT_EQ(r.json().at("main_term").at("num"), "8");
}

TEST(CliSum, MissingDegreeIsUsageError) {
  const Invocation r = ffsi({"sum", "--p", "2", "--m", "1", "--fn", "dk:2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--n"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(CliSum, RejectsBadInput) {
  EXPECT_EQ(ffsi({"sum", "--p", "4", "--n", "3", "--m", "1", "--fn", "dk:2"}).code, kExitUsage);
  EXPECT_EQ(ffsi({"sum", "--p", "2", "--n", "3", "--m", "1", "--fn", "bogus"}).code, kExitUsage);
  EXPECT_EQ(ffsi({"sum", "--p", "2", "--n", "3", "--m", "5", "--fn", "mobius"}).code, kExitUsage);
  EXPECT_EQ(ffsi({"sum", "--p", "2", "--n", "3", "--m", "1", "--fn", "mobius", "--out", "xml"}).code, kExitUsage);
  EXPECT_EQ(ffsi({}).code, kExitUsage);
}

TEST(CliSum, CsvHasOneRowPerInterval) {
  const Invocation r = ffsi({"sum", "--p", "3", "--n", "3", "--m", "1", "--fn", "mobius", "--out", "csv"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(CliSum, BudgetErrorExitsOne) {
  ::setenv("FFSI_BUDGET", "10", 1);
  const Invocation r = ffsi({"sum", "--p", "2", "--n", "6", "--m", "1", "--fn", "mobius"});
  ::unsetenv("FFSI_BUDGET");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(CliPoints, LinearVariety) {
  const Invocation r = ffsi({"points", "--p", "3", "--e", "1", "--n", "2", "--m", "1", "--c", "1", "--ext-max", "3",
                      "--target", "X", "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(counts_of(r.json()), (std::vector<std::string>{"3", "9", "27"}));
}

TEST(CliPoints, FullQuotientIsAffineSpace) {
  const Invocation r = ffsi({"points", "--p", "3", "--n", "4", "--m", "2", "--c", "1,2", "--ext-max", "2", "--target",
                      "quotient:full", "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(counts_of(r.json()), (std::vector<std::string>{"9", "81"}));
}

TEST(CliPoints, ConeAtOrigin) {
  const Invocation r = ffsi({"points", "--p", "2", "--e", "1", "--n", "2", "--m", "2", "--c", "0,0", "--target", "rcone",
                      "--ext-max", "1", "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(counts_of(r.json()), (std::vector<std::string>{"1"}));
}

TEST(CliPoints, ExtensionFieldCoordinates) {
  // c_1 = 1 + x in F_4; the count over F_4 matches the interval of size 16.
  const Invocation r = ffsi({"points", "--p", "2", "--e", "2", "--n", "2", "--m", "1", "--c", "1,1", "--ext-max", "1",
                      "--target", "X", "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.json().at("c"), nlohmann::json::parse("[[1,1]]"));
  EXPECT_EQ(counts_of(r.json()), (std::vector<std::string>{"4"}));
}

TEST(CliPoints, WrongCoefficientCount) {
  EXPECT_EQ(ffsi({"points", "--p", "3", "--n", "3", "--m", "2", "--c", "1"}).code, kExitUsage);
  EXPECT_EQ(ffsi({"points", "--p", "3", "--n", "3", "--m", "1", "--c", "1", "--target", "Y"}).code, kExitUsage);
}

TEST(CliMoments, DegenerateConductor) {
  const Invocation r = ffsi({"moments", "--p", "3", "--e", "1", "--m", "1", "--r", "2", "--alphas", "0,0;0,0", "--twist",
                      "0", "--out", "json"});
  ASSERT_NE(r.code, kExitUsage) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j.at("value"), nlohmann::json::parse("[1.0,0.0]"));
  EXPECT_NEAR(j.at("deviation").get<double>(), std::abs(1.0 - j.at("main_term")[0].get<double>()), 1e-12);
}

TEST(CliMoments, TwistedFirstMoment) {
  const Invocation r = ffsi({"moments", "--p", "5", "--e", "1", "--m", "2", "--r", "1", "--alphas", "0,0", "--twist", "1",
                      "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.json().at("family_size"), 20);
  EXPECT_EQ(r.json().at("verdict"), "PASS");
}

TEST(CliMoments, EmptyProductIsOne) {
  const Invocation r = ffsi({"moments", "--p", "3", "--m", "2", "--r", "0", "--twist", "0", "--out", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.json().at("value"), nlohmann::json::parse("[1.0,0.0]"));
}

TEST(CliMoments, ShiftCountMustAgree) {
  EXPECT_EQ(ffsi({"moments", "--p", "3", "--m", "2", "--r", "2", "--alphas", "0,0"}).code, kExitUsage);
  EXPECT_EQ(ffsi({"moments", "--p", "3", "--m", "2", "--alphas", "0,x"}).code, kExitUsage);
}

TEST(CliVerify, IdentitiesPass) {
  const Invocation r = ffsi({"verify", "--suite", "identities"});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, OraclePasses) {
  const Invocation r = ffsi({"verify", "--suite", "facfun-oracle", "--out", "json"});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_TRUE(r.json().at("pass").get<bool>());
}

TEST(CliVerify, UnknownSuite) { EXPECT_EQ(ffsi({"verify", "--suite", "nope"}).code, kExitUsage); }

TEST(CliVerify, ViolationsExitTwo) {
  // The variety suite carries the empty-cone degeneracy row, which fails.
  const Invocation r = ffsi({"verify", "--suite", "variety", "--out", "csv"});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_NE(r.out.find("r_cone_degeneracy_n_eq_p_m_eq_1,FAIL"), std::string::npos);
}

TEST(CliOutput, WritesPayloadAndManifest) {
  TempDir dir;
  const fs::path out = dir.path() / "scan.json";
  const Invocation r = ffsi({"sum", "--p", "3", "--n", "4", "--m", "2", "--fn", "dkr:2,2", "--out", "json", "--path",
                      out.string()});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto payload = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(payload.at("verdict"), "PASS");
  const auto manifest = nlohmann::json::parse(slurp(out.string() + ".manifest.json"));
  EXPECT_EQ(manifest.at("command"), "sum");
  EXPECT_EQ(manifest.at("params").at("fn"), "dkr:2,2");
  EXPECT_TRUE(manifest.contains("timestamp"));
  EXPECT_TRUE(manifest.contains("version"));
  for (const auto& entry : fs::directory_iterator(dir.path()))
    EXPECT_EQ(entry.path().string().find(".tmp."), std::string::npos) << entry.path();
}

TEST(CliOutput, ManifestReplayIsByteIdentical) {
  TempDir dir;
  const fs::path first = dir.path() / "a.csv";
  const fs::path second = dir.path() / "b.csv";
  ASSERT_EQ(ffsi({"sum", "--p", "5", "--n", "3", "--m", "1", "--fn", "lambda", "--mode", "sample:3:11", "--out", "csv",
                  "--path", first.string()})
                .code,
            kExitPass);
  const auto m = nlohmann::json::parse(slurp(first.string() + ".manifest.json"));
  const auto& p = m.at("params");
  ASSERT_EQ(m.at("command"), "sum");
  const Invocation replay = ffsi({"sum", "--p", std::to_string(p.at("p").get<int>()), "--e",
                           std::to_string(p.at("e").get<int>()), "--n", std::to_string(p.at("n").get<int>()), "--m",
                           std::to_string(p.at("m").get<int>()), "--fn", p.at("fn"), "--mode", p.at("mode"), "--out",
                           p.at("out"), "--path", second.string(), "--threads", "1"});
  ASSERT_EQ(replay.code, kExitPass) << replay.err;
  EXPECT_EQ(slurp(first), slurp(second));
  EXPECT_FALSE(slurp(first).empty());
}

TEST(CliOutput, FailedWriteLeavesNothing) {
  TempDir dir;
  const fs::path out = dir.path() / "missing" / "x.json";
  const Invocation r = ffsi({"points", "--p", "2", "--n", "2", "--m", "1", "--c", "1", "--path", out.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(out.parent_path()));
}

TEST(CliOutput, OverwriteReplacesWholeFile) {
  TempDir dir;
  const fs::path out = dir.path() / "r.json";
  std::ofstream(out) << std::string(10000, 'x');
  ASSERT_EQ(ffsi({"points", "--p", "2", "--n", "2", "--m", "1", "--c", "1", "--out", "json", "--path", out.string()})
                .code,
            kExitPass);
  EXPECT_TRUE(nlohmann::json::accept(slurp(out)));
}

TEST(CliParse, PrimeFieldElements) {
  const FieldSpec F = FieldSpec::make(5);
  const auto c = parse_elements("1,0, 4", F);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], F.from_int(1));
  EXPECT_EQ(c[1], F.zero());
  EXPECT_EQ(c[2], F.from_int(4));
  EXPECT_EQ(parse_elements("2;3", F), (std::vector<FieldElement>{F.from_int(2), F.from_int(3)}));
  EXPECT_TRUE(parse_elements("", F).empty());
  EXPECT_THROW(parse_elements("5", F), DomainError);
  EXPECT_THROW(parse_elements("1,a", F), DomainError);
  EXPECT_THROW(parse_elements("1,,2", F), DomainError);
}

TEST(CliParse, ExtensionFieldElements) {
  const FieldSpec F = FieldSpec::make(3, 2);
  const auto c = parse_elements("1,2;0,1;2", F);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(F.coeffs(c[0]), (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(F.coeffs(c[1]), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(c[2], F.from_int(2));
  // Without ';' a single element is read coordinate-wise.
  EXPECT_EQ(parse_elements("0,1", F).size(), 1u);
  EXPECT_THROW(parse_elements("1,1,1", F), DomainError);
}

TEST(CliParse, Shifts) {
  const auto a = parse_alphas("0.5,-1; 2");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], Complex(0.5, -1.0));
  EXPECT_EQ(a[1], Complex(2.0, 0.0));
  EXPECT_THROW(parse_alphas("1,2,3"), DomainError);
}

TEST(CliParse, Targets) {
  EXPECT_EQ(parse_target("X", 4).kind, VarietyTarget::kX);
  EXPECT_EQ(parse_target("rcone", 4).kind, VarietyTarget::kRCone);
  EXPECT_EQ(parse_target("quotient:full", 4).blocks, (std::vector<int>{4}));
  EXPECT_EQ(parse_target("quotient:1,3", 4).blocks, (std::vector<int>{1, 3}));
  EXPECT_THROW(parse_target("quotient:", 4), DomainError);
  EXPECT_THROW(parse_target("x", 4), DomainError);
}

TEST(CliSuites, VerdictAggregation) {
  const std::vector<CheckResult> rows{{"s", 1, "a", true, false, ""},
                                      {"s", 1, "b", false, true, ""},
                                      {"s", 2, "c", false, false, ""}};
  const auto v = criterion_verdicts(rows);
  EXPECT_TRUE(v.at(1));
  EXPECT_FALSE(v.at(2));
  EXPECT_FALSE(all_pass(rows));
  EXPECT_TRUE(all_pass({rows[0], rows[1]}));
  EXPECT_EQ(results_json("s", rows).at("criteria").at("2"), "FAIL");
}

}  // namespace
}  // namespace ffsi::cli
