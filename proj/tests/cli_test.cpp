#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unistd.h>

#include "cegaraba/cli.hpp"
#include "support.hpp"

namespace cegaraba {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cegaraba_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    ex1_ = write("ex1.aba", testing::kExample1);
    f2_ = write("f2.aba", testing::kMutual);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
  std::string ex1_;
  std::string f2_;
};

TEST_F(CliTest, EnumeratesAdmissibleWithEmptyLine) {
  const CliRun r = run({"--task", "EE-ADM+", "--file", ex1_});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "\nc\nb c\n");
}

TEST_F(CliTest, SkepticalPreferred) {
  const CliRun r = run({"--task", "DS-PRF", "--file", f2_, "--query", "z"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "YES\n");
  EXPECT_EQ(run({"--task", "DS-PRF", "--file", f2_, "--query", "a"}).out, "NO\n");
}

TEST_F(CliTest, CredulousComplete) {
  EXPECT_EQ(run({"--task", "DC-COM+", "--file", ex1_, "--query", "a", "--abstraction", "strong"}).out, "NO\n");
  EXPECT_EQ(run({"--task", "DC-COM+", "--file", ex1_, "--query", "b", "--abstraction", "weak"}).out, "YES\nb c\n");
  EXPECT_EQ(run({"--task", "DC-ADM+", "--file", ex1_, "--query", "c"}).out, "YES\nc\n");
}

TEST_F(CliTest, SingleSetTasks) {
  EXPECT_EQ(run({"--task", "SE-COM+", "--file", ex1_}).out, "b c\n");
  EXPECT_EQ(run({"--task", "GR+", "--file", ex1_}).out, "b c\n");
  EXPECT_EQ(run({"--task", "EE-PRF", "--file", f2_}).out, "a\nb\n");
}

TEST_F(CliTest, PlainTasksDropPreferences) {
  const CliRun r = run({"--task", "EE-PRF", "--file", ex1_});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "a\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, OracleMatchesMainPath) {
  const std::vector<std::vector<std::string>> cases = {
      {"--task", "EE-ADM+"}, {"--task", "EE-COM+"}, {"--task", "SE-COM+"}, {"--task", "GR+"}, {"--task", "EE-PRF"},
  };
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::string file = write("g" + std::to_string(seed) + ".aba", serialize(testing::small_framework(seed, 0.4)));
    for (auto args : cases) {
      args.insert(args.end(), {"--file", file});
      const CliRun direct = run(args);
      args.push_back("--oracle");
      EXPECT_EQ(run(args).out, direct.out) << seed << ' ' << args[1];
    }
    const Framework f = parse_framework(serialize(testing::small_framework(seed, 0.4)));
    for (SentenceId s = 0; s < f.num_sentences(); ++s) {
      for (const char* task : {"DS-PRF", "DC-ADM+", "DC-COM+"}) {
        std::vector<std::string> args{"--task", task, "--file", file, "--query", f.name(s)};
        const CliRun direct = run(args);
        args.push_back("--oracle");
        EXPECT_EQ(run(args).out, direct.out) << seed << ' ' << task << ' ' << f.name(s);
      }
    }
  }
}

TEST_F(CliTest, StatsJson) {
  const std::string path = (dir_ / "stats.json").string();
  const CliRun r = run({"--task", "DC-COM+", "--file", ex1_, "--query", "a", "--abstraction", "weak", "--stats-json", path,
                        "--seed", "9"});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  const nlohmann::json j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("task"), "DC-COM+");
  EXPECT_EQ(j.at("seed"), 9);
  EXPECT_GE(j.at("candidates").get<int>(), 1);
  EXPECT_GE(j.at("engine_calls").get<int>(), 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"--task", "EE-ADM+"}).code, kExitUsage);
  EXPECT_EQ(run({"--file", ex1_}).code, kExitUsage);
  EXPECT_EQ(run({"--task", "DC-ADM+", "--file", ex1_}).code, kExitUsage);
  EXPECT_EQ(run({"--task", "EE-ADM+", "--file", ex1_, "--query", "a"}).code, kExitUsage);
  EXPECT_EQ(run({"--task", "XX", "--file", ex1_}).code, kExitUsage);
  EXPECT_EQ(run({"--task", "EE-COM+", "--file", ex1_, "--abstraction", "medium"}).code, kExitUsage);
  EXPECT_EQ(run({"--bogus"}).code, kExitUsage);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"--task", "EE-ADM+", "--file", (dir_ / "missing.aba").string()}).code, kExitInput);
  const std::string bad = write("bad.aba", "a a\nc a x\nr a x\n");
  const CliRun r = run({"--task", "EE-ADM+", "--file", bad});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"--task", "DC-ADM+", "--file", ex1_, "--query", "nope"}).code, kExitInput);
  std::string big;
  for (int i = 0; i < 17; ++i) big += "a q" + std::to_string(i) + "\nc q" + std::to_string(i) + " x\n";
  EXPECT_EQ(run({"--task", "EE-ADM+", "--oracle", "--file", write("big.aba", big)}).code, kExitInput);
}

TEST_F(CliTest, Generator) {
  const CliRun a = run({"gen", "--n", "40", "--ratio", "0.3", "--pref-prob", "0.15", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, run({"gen", "--n", "40", "--ratio", "0.3", "--pref-prob", "0.15", "--seed", "5"}).out);
  EXPECT_EQ(parse_framework(a.out).num_assumptions(), 12U);

  const std::string path = (dir_ / "gen.aba").string();
  EXPECT_EQ(run({"gen", "--n", "40", "--ratio", "0.3", "--pref-prob", "0.15", "--seed", "5", "--out", path}).code,
            kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), a.out);

  EXPECT_EQ(run({"gen", "--n", "10", "--ratio", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--ratio", "0.3"}).code, kExitUsage);
}

TEST_F(CliTest, Deterministic) {
  const std::string file = write("det.aba", serialize(gen_framework({.n_sentences = 40, .asm_ratio = 0.15,
                                                                     .pref_prob = 0.15, .seed = 11})));
  for (const char* task : {"EE-COM+", "GR+", "SE-COM+"}) {
    const CliRun a = run({"--task", task, "--file", file});
    const CliRun b = run({"--task", task, "--file", file});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace cegaraba
