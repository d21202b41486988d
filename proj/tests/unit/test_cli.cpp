#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frobgrow/cli/commands.hpp"
#include "frobgrow/cli/ringfile.hpp"
#include "frobgrow/errors.hpp"

using namespace frobgrow;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "frobgrow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FROBGROW_FIXTURE_DIR) + "/" + name; }

std::string last_line(const std::string& s) {
  auto t = s.substr(0, s.find_last_not_of('\n') + 1);
  return t.substr(t.find_last_of('\n') + 1);
}

}  // namespace

TEST(Cli, PseqExamples) {
  auto a = invoke({"pseq", "--p", "2", "--r", "1,t,1", "--n", "6", "--format", "text"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(last_line(a.out), "P_6: t^6+t^4+1 = (t^3+t^2+1)^2");
  auto b = invoke({"pseq", "--p", "5", "--r", "1,t,1", "--n", "2", "--format", "text"});
  EXPECT_NE(last_line(b.out).find("t^2+4"), std::string::npos);
  auto c = invoke({"pseq", "--p", "4", "--r", "1,t,1"});
  EXPECT_EQ(c.code, cli::kInputError);
  EXPECT_NE(c.err.find("4 is not prime"), std::string::npos);
  auto d = invoke({"pseq", "--p", "5", "--r", "1,t"});
  EXPECT_EQ(d.code, cli::kInputError);
}

TEST(Cli, DecomposeExamples) {
  auto a = invoke({"decompose", "--family", "katzman", "--p", "2", "--q", "2", "--h", "minors"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = nlohmann::json::parse(a.out);
  ASSERT_EQ(j["reports"].size(), 1u);
  EXPECT_EQ(j["reports"][0]["components"].size(), 1u);
  EXPECT_TRUE(j["reports"][0]["verified"].get<bool>());

  auto b = invoke({"decompose", "--family", "ss5", "--p", "3", "--q", "3", "--h", "closed-form"});
  ASSERT_EQ(b.code, 0) << b.err;
  auto jb = nlohmann::json::parse(b.out);
  EXPECT_TRUE(jb["reports"][0]["growth_bound_checked"].get<bool>());
  EXPECT_GT(jb["reports"][0]["components"].size(), 1u);

  auto c = invoke({"decompose", "--family", "ss5", "--p", "3", "--q", "3", "--h", "0"});
  EXPECT_EQ(c.code, cli::kInputError);
  EXPECT_NE(c.err.find("nonzero"), std::string::npos);
}

TEST(Cli, CensusExamples) {
  auto a = invoke({"census", "--family", "ss5", "--p", "2", "--e", "1..3"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = nlohmann::json::parse(a.out);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["q"], 2);
  EXPECT_EQ(j["rows"][2]["q"], 8);
  EXPECT_LT(j["rows"][1]["cumulative_distinct"].get<int>(), j["rows"][2]["cumulative_distinct"].get<int>());

  auto b = invoke({"census", "--p", "2", "--r", "1,t,1", "--e", "2"});
  ASSERT_EQ(b.code, 0) << b.err;
  auto jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(jb["rows"][0]["new_irreducibles"], nlohmann::json::array({"t+1"}));
  EXPECT_EQ(jb["rows"][0]["cumulative_distinct"], 1);

  auto c = invoke({"census", "--family", "brenner_monsky", "--p", "3", "--e", "1"});
  EXPECT_EQ(c.code, cli::kInputError);
}

TEST(Cli, ExitCodesAreDistinct) {
  EXPECT_EQ(invoke({"witness", "--family", "ss5", "--p", "3", "--e", "1..2"}).code, cli::kSuccess);
  auto fail = invoke({"decompose", "--ring-file", fixture("quadric.yaml"), "--q", "3", "--h", "t"});
  EXPECT_EQ(fail.code, cli::kVerificationFailed);
  EXPECT_NE(fail.err.find("primary sanity"), std::string::npos);
  EXPECT_EQ(invoke({"hq", "--family", "ss5", "--p", "3", "--e", "1", "--minor-subsets", "1"}).code,
            cli::kBudgetExhausted);
  EXPECT_EQ(invoke({"decompose", "--family", "ss5", "--p", "3", "--e", "1", "--h", "closed-form", "--gb-pairs", "1"}).code,
            cli::kBudgetExhausted);
  EXPECT_EQ(invoke({"nosuchcommand"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"hq", "--family", "ss5", "--p", "3", "--e", "3..1"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"hq", "--family", "ss5", "--p", "3", "--budget", "0"}).code, cli::kInputError);
}

TEST(Cli, BudgetScaleEnvironment) {
  ::setenv("FROBGROW_BUDGET_SCALE", "zero", 1);
  EXPECT_EQ(invoke({"pseq", "--p", "2", "--r", "1,t,1"}).code, cli::kInputError);
  ::setenv("FROBGROW_BUDGET_SCALE", "0.5", 1);
  EXPECT_EQ(invoke({"pseq", "--p", "2", "--r", "1,t,1"}).code, cli::kSuccess);
  ::unsetenv("FROBGROW_BUDGET_SCALE");
}

TEST(Cli, DeterministicWithoutTimings) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"decompose", "--family", "katzman", "--p", "3", "--e", "1..2", "--no-timings"},
        std::vector<std::string>{"census", "--family", "ss5", "--p", "3", "--e", "1..2", "--no-timings"},
        std::vector<std::string>{"verify-lemmas", "--p", "3", "--n", "2", "--seed", "9", "--no-timings"}}) {
    auto a = invoke(args), b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("\"seconds\""), std::string::npos);
  }
}

TEST(Cli, CsvAndOutputFile) {
  auto a = invoke({"decompose", "--family", "ss5", "--p", "2", "--q", "2", "--h", "closed-form", "--format", "csv"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "family,p,q,h_source,role,tau,multiplicity,measured_exponent,growth_bound,sanity,intersection_verified,"
            "verified");
  auto path = std::filesystem::temp_directory_path() / "frobgrow_cli_test.json";
  auto b = invoke({"saturate", "--ring-file", fixture("quadric_cone.yaml"), "--z", "y", "--e", "1..3", "-o", path.string()});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_TRUE(b.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["N_q"], 1);
  std::filesystem::remove(path);
}

TEST(RingFile, NamedFixturesMatchFamilies) {
  struct Case {
    const char* file;
    FamilySpec fam;
  };
  std::vector<Case> cases{{"katzman.yaml", katzman_family(PrimeModulus(3))},
                          {"ss5.yaml", ss5_family(PrimeModulus(3))},
                          {"ss7.yaml", ss7_family(PrimeModulus(3))},
                          {"brenner_monsky.yaml", brenner_monsky_family(PrimeModulus(2))}};
  for (const auto& c : cases) {
    FamilySpec f = cli::load_ring_file(fixture(c.file));
    EXPECT_EQ(f.kind, c.fam.kind);
    ASSERT_EQ(f.ring->relations().size(), 1u);
    EXPECT_EQ(f.ring->relations()[0].to_string(), c.fam.ring->relations()[0].to_string()) << c.file;
    EXPECT_EQ(f.ideal.to_string(), c.fam.ideal.to_string());
  }
}

TEST(RingFile, ErrorsCarryLines) {
  auto message = [](const std::string& f) {
    try {
      cli::load_ring_file(fixture(f));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  auto nh = message("bad/nonhomogeneous.yaml");
  EXPECT_NE(nh.find("relation not homogeneous"), std::string::npos);
  EXPECT_NE(nh.find("line 6"), std::string::npos);
  auto dup = message("bad/duplicate_variable.yaml");
  EXPECT_NE(dup.find("schema error"), std::string::npos);
  EXPECT_NE(dup.find("line 5"), std::string::npos);
  auto unk = message("bad/unknown_variable.yaml");
  EXPECT_NE(unk.find("unknown variable"), std::string::npos);
  EXPECT_NE(unk.find("line 6"), std::string::npos);
  EXPECT_THROW(cli::parse_ring_text("prime: 3\nvariables: [{name: x, weight: 1}]\n"), InputError);
  EXPECT_THROW(cli::parse_ring_text("prime: 3\nvariables: [{name: x, weight: 1}]\nideal: [x]\nextra: 1\n"), InputError);
  EXPECT_THROW(cli::parse_ring_text("prime: [3\n"), ParseError);
  EXPECT_THROW(cli::load_ring_file(fixture("missing.yaml")), InputError);
}

TEST(Cli, ParseERange) {
  EXPECT_EQ(cli::parse_e_range("2"), std::vector<unsigned>{2});
  EXPECT_EQ(cli::parse_e_range("1..3"), (std::vector<unsigned>{1, 2, 3}));
  EXPECT_THROW(cli::parse_e_range("3..1"), InputError);
  EXPECT_THROW(cli::parse_e_range("a"), InputError);
  EXPECT_THROW(cli::parse_e_range("0"), InputError);
}
