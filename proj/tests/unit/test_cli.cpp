#include "bwrt/cli.hpp"
#include "bwrt/rational.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace bwrt;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_args(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Rational rational_of(const json& j) {
  return make_rational(std::stol(j.at("num").get<std::string>()), std::stol(j.at("den").get<std::string>()));
}

}  // namespace

TEST(CliParseTest, InvariantRoundTrip) {
  const auto cmd = cli::parse({"invariant", "--p", "2,3,7", "--N", "25", "--precision", "60", "--format", "json"});
  EXPECT_EQ(cmd.verb, "invariant");
  ASSERT_TRUE(cmd.p.has_value());
  EXPECT_EQ(*cmd.p, BrieskornTriple(2, 3, 7));
  EXPECT_EQ(cmd.N, 25);
  EXPECT_EQ(cmd.precision, 60);
  EXPECT_EQ(cmd.format, "json");
}

TEST(CliParseTest, VerifyRoundTrip) {
  const auto cmd = cli::parse({"verify", "--suite", "theorem51", "--pmax", "500"});
  EXPECT_EQ(cmd.verb, "verify");
  EXPECT_EQ(cmd.suite, "theorem51");
  EXPECT_EQ(cmd.pmax, 500);
}

TEST(CliParseTest, ValidationMessages) {
  try {
    cli::parse({"invariant", "--p", "2,4,5"});
    FAIL();
  } catch (const cli::UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("p must be pairwise coprime"), std::string::npos);
  }
  EXPECT_THROW(cli::parse({"invariant", "--p", "1,3,5"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"invariant", "--p", "2,3,7", "--N", "2"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"frobnicate"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"invariant", "--p", "2,3"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"cs", "--p", "2,3,7", "--format", "xml"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"cs", "--p", "2,3,7", "--precision", "10"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"verify", "--suite", "nonsense"}), cli::UsageError);
  EXPECT_THROW(cli::parse({"--help"}), cli::HelpRequested);
}

TEST(CliRunTest, UsageErrorExitCode) {
  const auto r = run_args({"invariant", "--p", "2,4,5"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("p must be pairwise coprime"), std::string::npos);
  EXPECT_EQ(run_args({}).code, cli::kExitUsage);
}

TEST(CliRunTest, ChernSimonsJson) {
  const auto r = run_args({"cs", "--p", "3,4,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) {
    keys.push_back(item.key());
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "results", "metadata", "status"}));
  EXPECT_EQ(doc["status"]["state"], "ok");
  std::multiset<Rational> cs;
  for (const auto& entry : doc["results"]["cs"]) {
    cs.insert(rational_of(entry["cs"]));
  }
  EXPECT_EQ(cs, (std::multiset<Rational>{make_rational(119, 240), make_rational(-49, 240), make_rational(-1, 60),
                                         make_rational(11, 60)}));
  EXPECT_EQ(doc["metadata"]["precision_digits"], 50);
  EXPECT_FALSE(doc["metadata"].contains("wall_time_seconds"));
}

TEST(CliRunTest, OhtsukiCsvRow) {
  const auto r = run_args({"ohtsuki", "--p", "2,3,5", "--order", "8", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2,3,5,1,-6,45,-464,6224,-102816,2015237,-45679349,1175123730"), std::string::npos);
}

TEST(CliRunTest, OhtsukiLargeValuesAreStrings) {
  const auto r = run_args({"ohtsuki", "--p", "2,11,21", "--order", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  const auto& last = doc["results"]["lambdas"].back();
  EXPECT_EQ(last["num"], "3962937841176563555");
  EXPECT_EQ(last["den"], "1");
}

TEST(CliRunTest, InvariantIsBitIdentical) {
  const std::vector<std::string> args = {"invariant", "--p", "2,3,7", "--N", "25", "--precision", "60",
                                         "--workers", "3"};
  const auto a = run_args(args);
  const auto b = run_args(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json doc = json::parse(a.out);
  EXPECT_EQ(doc["metadata"]["workers"], 3);
  EXPECT_TRUE(doc["results"]["tau"].contains("re"));
  EXPECT_TRUE(doc["results"]["tau"]["im"].is_string());
}

TEST(CliRunTest, TimingIsOptIn) {
  const auto r = run_args({"cs", "--p", "2,3,7", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["metadata"].contains("wall_time_seconds"));
}

TEST(CliRunTest, FlatAndAsymptoticAndTable) {
  const auto flat = run_args({"flat", "--p", "2,3,5", "--format", "text"});
  ASSERT_EQ(flat.code, 0) << flat.err;
  EXPECT_NE(flat.out.find("-1/120"), std::string::npos);
  const auto asym = run_args({"asymptotic", "--p", "2,3,5", "--N", "50", "--terms", "3"});
  ASSERT_EQ(asym.code, 0) << asym.err;
  EXPECT_TRUE(json::parse(asym.out)["results"].contains("abs_error"));
  const auto table = run_args({"table", "--format", "csv"});
  ASSERT_EQ(table.code, 0) << table.err;
  EXPECT_NE(table.out.find("2,11,21"), std::string::npos);
}

TEST(CliRunTest, Suites) {
  for (const std::string suite : {"table1", "modular", "torsion"}) {
    const auto r = run_args({"verify", "--suite", suite});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out << r.err;
    EXPECT_EQ(json::parse(r.out)["status"]["state"], "ok") << suite;
  }
  const auto gamma = run_args({"verify", "--suite", "gamma", "--pmax", "1000"});
  ASSERT_EQ(gamma.code, 0) << gamma.out;
  EXPECT_GT(json::parse(gamma.out)["results"]["summary"]["checked"].get<long>(), 0);
  const auto t51 = run_args({"verify", "--suite", "theorem51", "--pmax", "100", "--N", "6"});
  EXPECT_EQ(t51.code, 0) << t51.out;
}

TEST(CliRunTest, SuiteFailureExitCode) {
  const auto path = std::filesystem::temp_directory_path() / ("bwrt_cli_table_" + std::to_string(::getpid()));
  {
    std::ofstream f(path);
    f << "version 1\n2 3 5 : 1 -6 45 -464 6224 -102816 2015237 -45679349 1175123731\n";
  }
  ::setenv("BWRT_TABLE1_PATH", path.c_str(), 1);
  const auto r = run_args({"verify", "--suite", "table1"});
  ::unsetenv("BWRT_TABLE1_PATH");
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, cli::kExitSuiteFailure);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["status"]["state"], "fail");
  EXPECT_EQ(doc["status"]["exit_code"], 1);
  EXPECT_FALSE(doc["status"]["details"].empty());
}

TEST(CliRunTest, OutFileReceivesReport) {
  const auto path = std::filesystem::temp_directory_path() / ("bwrt_cli_out_" + std::to_string(::getpid()));
  const auto r = run_args({"cs", "--p", "2,3,7", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const std::string contents((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);
  EXPECT_EQ(json::parse(contents)["status"]["state"], "ok");
}

TEST(CliBinaryTest, ProcessExitCodes) {
  const std::string tool = BWRT_TOOL_PATH;
  const std::string quiet = " >/dev/null 2>&1";
  const int ok = std::system((tool + " cs --p 2,3,7" + quiet).c_str());
  EXPECT_EQ(WEXITSTATUS(ok), 0);
  const int usage = std::system((tool + " cs --p 2,4,5" + quiet).c_str());
  EXPECT_EQ(WEXITSTATUS(usage), 64);
}
