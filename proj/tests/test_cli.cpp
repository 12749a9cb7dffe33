#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "abps/error.hpp"
#include "abpscli/expr.hpp"
#include "abpscli/render.hpp"
#include "support.hpp"

using abps::cli::parse_parameter;
using abps::cli::print_parameter;
using testing_support::catalogue;
using testing_support::run_cli;

namespace {

std::vector<std::string> corpus() {
  std::ifstream f(testing_support::fixture_dir() + "/corpus.txt");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::string canonical(const std::string& s) { return print_parameter(parse_parameter(s, catalogue()), catalogue()); }

std::size_t error_position(const std::string& s) {
  try {
    parse_parameter(s, catalogue());
  } catch (const abps::SyntaxError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(Parser, CorpusRoundTrip) {
  const auto lines = corpus();
  ASSERT_GE(lines.size(), 20u);
  for (const auto& s : lines) {
    const auto p = parse_parameter(s, catalogue());
    const std::string once = print_parameter(p, catalogue());
    EXPECT_EQ(parse_parameter(once, catalogue()), p) << s;
    EXPECT_EQ(canonical(once), once) << s;
  }
}

TEST(Parser, EquivalentSpellings) {
  EXPECT_EQ(canonical("zeta*(S[3]+S[1])+1"), canonical("zeta*S[3] + zeta + 1"));
  EXPECT_EQ(canonical("zeta*S[3] + zeta*S[1] + 1"), "1 + zeta*S[3] + zeta");
  EXPECT_EQ(canonical("(x + x^-1)*zeta*S[2] + 1"), "1 + zeta*S[2]*x^-1 + zeta*S[2]*x");
  EXPECT_EQ(canonical("q*1"), canonical("q^{1}"));
  EXPECT_EQ(canonical("q^{2/2}"), canonical("q^1"));
  EXPECT_EQ(canonical("e(1/2)*zeta"), "zeta*xi");
  EXPECT_EQ(canonical("nu^2"), "xi");
  EXPECT_EQ(canonical("nu^3*zeta"), "zeta*nu^3");
  EXPECT_EQ(canonical("e(1/3)"), "e(1/3)");
  EXPECT_EQ(canonical("chi^-1"), canonical("chi^{-1}"));
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(error_position("zeta + + 1"), 7u);
  EXPECT_EQ(error_position("zeta*((S[2]))"), 6u);
  EXPECT_EQ(error_position("zeta*zeta"), 5u);
  EXPECT_EQ(error_position("S[2]*S[3]"), 5u);
  EXPECT_EQ(error_position("S[0]"), 3u);
  EXPECT_EQ(error_position("zeta^2"), 4u);
  EXPECT_EQ(error_position("q^{1/3}"), 5u);
  EXPECT_EQ(error_position("zeta + 1)"), 8u);
}

TEST(Parser, UnknownCharacters) {
  try {
    parse_parameter("zeta + 1 + foo", catalogue());
    FAIL();
  } catch (const abps::Error& e) {
    EXPECT_EQ(e.kind(), abps::ErrorKind::UnknownCharacter);
    EXPECT_NE(std::string(e.what()).find("position 11"), std::string::npos) << e.what();
  }
}

TEST(Render, MarkdownEscapesPipes) {
  abps::cli::Table t;
  t.name = "t";
  t.title = "T";
  t.columns = {{"a", "a | b"}};
  t.add({"x|y"});
  const auto md = abps::cli::render_markdown(t);
  EXPECT_NE(md.find("a \\| b"), std::string::npos);
  EXPECT_NE(md.find("x\\|y"), std::string::npos);
  EXPECT_THROW(t.add({"1", "2"}), std::logic_error);
}

TEST(Render, Unicode) {
  EXPECT_EQ(abps::cli::unicode("zeta(x)1"), "ζ⊠1");
  EXPECT_EQ(abps::cli::unicode("Z/2 ~= <z1z3>"), "ℤ/2 ≃ <z1z3>");
  EXPECT_EQ(abps::cli::unicode("GL1^2xSp2"), "GL1²xSp2");
  EXPECT_EQ(abps::cli::unicode("S2\\|x{1}"), "𝔖2⋊{1}");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"springer", "--rank", "4"}).code, 0);
  EXPECT_EQ(run_cli({"springer", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  const auto bad = run_cli({"param", "--group", "Sp4", "--expr", "zeta + 1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("DimensionMismatch: ", 0), 0u) << bad.err;
  const auto syn = run_cli({"param", "--group", "Sp4", "--expr", "zeta +"});
  EXPECT_EQ(syn.code, 1);
  EXPECT_EQ(syn.err.rfind("SyntaxError: ", 0), 0u) << syn.err;
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const auto r = run_cli({"springer", "--group", "so", "--rank", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = abps::cli::Json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 5u);
}

TEST(Cli, ParamRecord) {
  const auto r = run_cli({"--format", "json", "--chars", testing_support::fixture_dir() + "/chars.txt", "param",
                          "--group", "Sp4", "--expr", "zeta*(S[3]+S[1])+1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = abps::cli::Json::parse(r.out);
  EXPECT_EQ(j["centralizer"], "S(O4xO1)");
  EXPECT_EQ(j["u"], "(3,1)x(1)");
  EXPECT_EQ(j["discrete"], true);
  EXPECT_EQ(j["cuspidal"], true);
}

TEST(Cli, FixturesAreDiffClean) {
  const auto r = run_cli({"fixtures", "--all", "--check", "--dir", testing_support::fixture_dir()});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, FixturesReportDifferences) {
  const auto dir = std::string(ABPS_BINARY_DIR) + "/fixture_scratch";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run_cli({"fixtures", "--table", "table4", "--dir", dir}).code, 1);
  EXPECT_EQ(run_cli({"fixtures", "--table", "table4", "--dir", dir, "--check"}).code, 0);
  EXPECT_EQ(run_cli({"fixtures", "--table", "nope", "--dir", dir}).code, 2);
}
