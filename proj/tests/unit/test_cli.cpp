#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "support.hpp"

using kprime::cli::run_cli;
using testing_support::corpus;

namespace {

  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  class SeedEnv {
   public:
    explicit SeedEnv(char const* value) {
      ::setenv("KPRIME_SEED", value, 1);
    }
    ~SeedEnv() {
      ::unsetenv("KPRIME_SEED");
    }
  };

}  // namespace

TEST(Cli, K0OfNt3) {
  auto const r = run({"k0", corpus("ntr3.monoid"), "--flavor", "pc", "--bound", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rank: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("torsion: none\n"), std::string::npos);
}

TEST(Cli, K0JsonSchema) {
  auto const r = run({"k0", corpus("ntr3.monoid"), "--bound", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  for (char const* key : {"monoid", "flavor", "bound", "generators", "relations", "rank", "torsion",
                          "classmap", "checks"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (char const* key : {"devissage", "exactness", "additivity"}) {
    EXPECT_TRUE(j.at("checks").contains(key)) << key;
  }
  EXPECT_EQ(j.at("rank"), 1);
  EXPECT_EQ(j.at("checks").at("additivity"), true);
  EXPECT_EQ(j.at("checks").at("devissage"), true);
}

TEST(Cli, G0OfNSets) {
  auto const r = run({"g0", "--flavor", "fgnset", "--bound", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("rank"), 3);
}

TEST(Cli, BurnsideZ2) {
  auto const r = run({"burnside", corpus("z2.group"), "--json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rank"), 2);
  EXPECT_EQ(j.at("marks"), nlohmann::json::parse("[[2,0],[1,1]]"));
}

TEST(Cli, PcReportsWitness) {
  auto const r = run({"pc", corpus("idempotent.monoid")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pc false (witness"), std::string::npos);
  auto const a = run({"pc", corpus("s0_ntr3.aset"), "--monoid", corpus("ntr3.monoid")});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("pc true"), std::string::npos);
  auto const n = run({"pc", corpus("rho.nset")});
  EXPECT_NE(n.out.find("pc false"), std::string::npos);
}

TEST(Cli, ValidateMonoid) {
  auto const r = run({"validate", corpus("ntr3_z2plus.monoid"), "--json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("pc"), true);
  EXPECT_EQ(j.at("units"), 2);
  EXPECT_EQ(j.at("length"), 3);
}

TEST(Cli, Enumerate) {
  auto const r = run({"enumerate", corpus("ntr2.monoid"), "--bound", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("count"), 7);
}

TEST(Cli, VerificationExitCodes) {
  EXPECT_EQ(run({"devissage", corpus("ntr3.monoid"), "--bound", "3"}).code, 0);
  EXPECT_EQ(run({"localize", corpus("ntr2.monoid"), "--s", "2"}).code, 0);
  EXPECT_EQ(run({"localize", corpus("proto2.monoid"), "--s", "2", "--bound", "3"}).code, 1);
  EXPECT_EQ(run({"acgw", corpus("ntr3.monoid"), "--samples", "20"}).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"k0", "/nonexistent.monoid"}).code, 2);
  EXPECT_EQ(run({"k0", corpus("ntr3.monoid"), "--flavor", "bogus"}).code, 2);
  EXPECT_EQ(run({"devissage", corpus("proto2.monoid")}).code, 2);
  EXPECT_EQ(run({"localize", corpus("ntr2.monoid"), "--s", "9"}).code, 2);
  EXPECT_EQ(run({"k0", corpus("ntr3.monoid"), "--bound", "x"}).code, 2);
}

TEST(Cli, ParseErrorMentionsLine) {
  auto const dir  = std::filesystem::temp_directory_path() / "kprime_cli_parse";
  std::filesystem::create_directories(dir);
  auto const path = (dir / "bad.monoid").string();
  std::ofstream(path) << "monoid M 2\n0 0\n0 q\n";
  auto const r = run({"validate", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, CorruptedCorpusExitsTwo) {
  auto const dir = std::filesystem::temp_directory_path() / "kprime_cli_corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::copy(KPRIME_CORPUS_DIR, dir);
  std::ofstream((dir / "ntr2.monoid").string()) << "monoid N/t^2 3\n0 0 0\n0 1 2\n0 2 x\n";
  auto const r = run({"verify", "--corpus", dir.string(), "--criterion", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ntr2.monoid"), std::string::npos) << r.err;
}

TEST(Cli, VerifySingleCriterion) {
  auto const r = run({"verify", "--criterion", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS  5", 0), 0u);
}

TEST(Cli, SeedEnvironmentOverride) {
  std::vector<std::string> const args{"acgw", corpus("ntr2.monoid"), "--samples", "30", "--json"};
  std::string                    first, second;
  {
    SeedEnv env("777");
    first  = run(args).out;
    second = run(args).out;
  }
  EXPECT_EQ(first, second);
  auto const j = nlohmann::json::parse(first);
  EXPECT_EQ(j.at(0).at("seed"), 777);
  auto const flag = run({"acgw", corpus("ntr2.monoid"), "--samples", "30", "--json", "--seed", "777"});
  EXPECT_EQ(flag.out, first);
  EXPECT_NE(run(args).out, first);
}

TEST(Cli, OutWritesFile) {
  auto const path = (std::filesystem::temp_directory_path() / "kprime_cli_out.json").string();
  std::filesystem::remove(path);
  auto const r = run({"burnside", corpus("z3.group"), "--json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(nlohmann::json::parse(kprime::read_file(path)).at("rank"), 2);
}
