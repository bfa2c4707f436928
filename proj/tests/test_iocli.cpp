#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ydh/catalog.hpp"
#include "ydh/commalg.hpp"
#include "ydh/error.hpp"
#include "ydh/iocli.hpp"

using namespace ydh;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(YDH_FIXTURE_DIR) + "/" + name; }

std::vector<std::string> ydh_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(YDH_FIXTURE_DIR))
    if (e.path().extension() == ".ydh") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

struct Scratch {
  std::filesystem::path dir;
  Scratch() {
    dir = std::filesystem::temp_directory_path() /
          ("ydh_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

// Exit status of the command-line tool; output goes to `log`.
int run_tool(const std::string& args, const std::string& log, const std::string& env = "") {
  const std::string cmd = env + " \"" + std::string(YDH_TOOL_PATH) + "\" " + args + " > \"" + log + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::string kZ2Header = "ydh 1\norder 2\ngroup Z/2\nside left\ndim 2\n";

void expect_parse_error(const std::string& text, int line, int col) {
  try {
    parse_ydh(text);
    ADD_FAILURE() << "no ParseError for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), col) << e.what();
  }
}

}  // namespace

TEST(YdhFormat, FixturesRoundTripByteForByte) {
  const auto files = ydh_fixtures();
  ASSERT_GE(files.size(), 5u);
  for (const auto& f : files) {
    const std::string text = slurp(f);
    EXPECT_EQ(render_ydh(parse_ydh(text)), text) << f;
  }
}

TEST(YdhFormat, CatalogRoundTrips) {
  for (const auto& entry : standard_catalog()) {
    const std::string text = render_ydh(entry.algebra);
    YDHopfAlgebra back = parse_ydh(text);
    EXPECT_EQ(back.mult(), entry.algebra.mult()) << entry.name;
    EXPECT_EQ(back.comult(), entry.algebra.comult()) << entry.name;
    EXPECT_EQ(back.unit(), entry.algebra.unit()) << entry.name;
    EXPECT_EQ(back.counit(), entry.algebra.counit()) << entry.name;
    EXPECT_EQ(back.antipode(), entry.algebra.antipode()) << entry.name;
    EXPECT_EQ(back.module().phi_generators(), entry.algebra.module().phi_generators()) << entry.name;
    EXPECT_EQ(back.module().psi_generators(), entry.algebra.module().psi_generators()) << entry.name;
    EXPECT_EQ(render_ydh(back), text);
  }
}

TEST(YdhFormat, ShippedGroupAlgebraFixtures) {
  FinAbGroup z2({2});
  YDHopfAlgebra a = read_ydh_file(fixture("k_z2.ydh"));
  EXPECT_TRUE(verify_axioms(a).pass());
  EXPECT_TRUE(is_trivial(a).trivial);
  EXPECT_EQ(render_ydh(a), render_ydh(trivial_instance(z2, AlgebraKind::GroupAlgebra, z2)));
  YDHopfAlgebra b = read_ydh_file(fixture("k_z3.ydh"));
  EXPECT_EQ(render_ydh(b), render_ydh(trivial_instance(z2, AlgebraKind::GroupAlgebra, FinAbGroup({3}))));
}

TEST(YdhFormat, CommentsBlankLinesAndMatrixActions) {
  const std::string text = "# K[Z/2] with psi written as a matrix\n\n" + kZ2Header +
                           "phi 0 perm 0 1\n"
                           "psi 0 matrix\n0 0 1\n  1 1   1\nend\n"
                           "mult\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\nend\n"
                           "unit\n0 1\nend\n"
                           "comult\n0 0 0 1\n1 1 1 1\nend\n"
                           "counit\n0 1\n1 1\nend\n";
  YDHopfAlgebra a = parse_ydh(text);
  EXPECT_FALSE(a.has_antipode());
  EXPECT_TRUE(verify_axioms(a).pass());
  // psi is a permutation, so the canonical form writes it as one
  EXPECT_NE(render_ydh(a).find("psi 0 perm 0 1"), std::string::npos);
}

TEST(YdhFormat, ParseErrorsCarryPositions) {
  const std::string body = "mult\n0 0 0 1\nend\nunit\n0 1\nend\ncomult\n0 0 0 1\nend\ncounit\n0 1\nend\n";
  expect_parse_error("ydh 2\n", 1, 5);
  expect_parse_error("ydh 1\norder x\n", 2, 7);
  expect_parse_error("ydh 1\norder 2\ngroup Z/2 y Z/2\n", 3, 11);
  expect_parse_error("ydh 1\norder 2\ngroup Z/2\nside up\n", 4, 6);
  // scalar 1/0: the column points at the zero denominator
  expect_parse_error(kZ2Header + "mult\n0 0 0 1/0\nend\n", 7, 9);
  expect_parse_error(kZ2Header + "mult\n0 0 0 2 +\nend\n", 7, 10);
  expect_parse_error(kZ2Header + "mult\n0 0 0\nend\n", 7, 6);
  expect_parse_error(kZ2Header + "mult\n0 0 0 1\n", 8, 1);
  expect_parse_error(kZ2Header + "mult\n0 0 0 1\n0 0 0 1\nend\n", 8, 1);
  expect_parse_error(kZ2Header + "frobnicate\n", 6, 1);
  expect_parse_error(kZ2Header + "phi 0 perm 0 0\n", 6, 14);
  EXPECT_THROW(parse_ydh(kZ2Header + "mult\n0 0 0 1\nend\n"), ParseError);
  EXPECT_NO_THROW(parse_ydh("ydh 1\norder 2\ngroup Z/2\nside left\ndim 1\n" + body));
}

TEST(YdhFormat, DimensionMismatches) {
  EXPECT_THROW(parse_ydh(kZ2Header + "basis a b c\n"), DimensionMismatch);
  EXPECT_THROW(parse_ydh(kZ2Header + "mult\n0 2 0 1\nend\n"), DimensionMismatch);
  EXPECT_THROW(parse_ydh(kZ2Header + "phi 1 perm 0 1\n"), DimensionMismatch);
  EXPECT_THROW(parse_ydh(kZ2Header + "phi 0 perm 0 1 2\n"), DimensionMismatch);
}

TEST(Report, CanonicalReportsOfSearchFixturesAreStable) {
  for (int f = 0; f < 2; ++f) {
    const std::string base = fixture("search_z2_d4_nontrivial_" + std::to_string(f));
    YDHopfAlgebra a = read_ydh_file(base + ".ydh");
    ASSERT_TRUE(verify_axioms(a).pass());
    auto rep = analysis_report(a);
    EXPECT_EQ(rep.dump(2) + "\n", slurp(base + ".report.json"));
    EXPECT_FALSE(rep["triviality"]["trivial"].get<bool>());
    EXPECT_EQ(rep["consistency"]["gcd_dim_group"].get<int>(), 2);
    EXPECT_TRUE(report_status(rep).pass());
  }
}

TEST(Report, AxiomFailuresAreSeparatedFromTheoremFailures) {
  FinAbGroup z2({2});
  YDHopfAlgebra a = trivial_instance(z2, AlgebraKind::GroupAlgebra, z2);
  Tensor3 broken = a.comult();
  broken(1, 1, 1) = CycNum(a.order(), 2);
  YDHopfAlgebra bad(a.module(), a.mult(), a.unit(), broken, a.counit(), a.antipode());
  auto rep = analysis_report(bad);
  ReportStatus st = report_status(rep);
  EXPECT_GT(st.axiom_failures, 0);
  EXPECT_EQ(st.theorem_failures, 0);
  auto good = analysis_report(a);
  EXPECT_TRUE(report_status(good).pass());
  EXPECT_TRUE(good["commutative_analysis"]["applicable"].get<bool>());
  EXPECT_TRUE(good["cocommutative_analysis"]["applicable"].get<bool>());
}

TEST(Report, TimingLivesOutsideTheCanonicalSection) {
  auto rep = analysis_report(read_ydh_file(fixture("k_z2.ydh")));
  const std::string a = render_report(rep, 0.5), b = render_report(rep, 7.0);
  EXPECT_NE(a, b);
  auto pa = nlohmann::ordered_json::parse(a), pb = nlohmann::ordered_json::parse(b);
  EXPECT_EQ(pa["canonical"], pb["canonical"]);
  EXPECT_EQ(pa["canonical"]["schema"], "ydh-report/1");
}

TEST(Cli, VerifyAndExitCodes) {
  Scratch s;
  const std::string log = s.path("log");
  EXPECT_EQ(run_tool("verify \"" + fixture("k_z3.ydh") + "\"", log), 0);
  {
    std::ofstream out(s.path("broken.ydh"));
    out << slurp(fixture("k_z2.ydh")).replace(slurp(fixture("k_z2.ydh")).find("counit\n0 1\n"), 11, "counit\n0 2\n");
  }
  EXPECT_EQ(run_tool("verify \"" + s.path("broken.ydh") + "\"", log), 1);
  {
    std::ofstream out(s.path("bad.ydh"));
    out << kZ2Header << "mult\n0 0 0 1/0\nend\n";
  }
  EXPECT_EQ(run_tool("verify \"" + s.path("bad.ydh") + "\"", log), 2);
  EXPECT_NE(slurp(log).find("line 7, column 9"), std::string::npos) << slurp(log);
  EXPECT_EQ(run_tool("", log), 2);
  EXPECT_EQ(run_tool("verify", log), 2);
  EXPECT_EQ(run_tool("verify \"" + s.path("missing.ydh") + "\"", log), 2);
  EXPECT_EQ(run_tool("analyze \"" + fixture("k_z3_over_q.ydh") + "\"", log), 3);
  EXPECT_EQ(run_tool("verify \"" + fixture("k_z2.ydh") + "\"", log, "YDH_THREADS=zero"), 2);
  EXPECT_EQ(run_tool("verify \"" + fixture("k_z2.ydh") + "\"", log, "YDH_THREADS=4"), 0);
}

TEST(Cli, AnalyzeWritesTheJsonReport) {
  Scratch s;
  const std::string out = s.path("out.json");
  EXPECT_EQ(run_tool("analyze \"" + fixture("search_z2_d4_nontrivial_0.ydh") + "\" --json \"" + out + "\"", s.path("log")), 0);
  auto doc = nlohmann::ordered_json::parse(slurp(out));
  EXPECT_FALSE(doc["canonical"]["triviality"]["trivial"].get<bool>());
  EXPECT_EQ(doc["canonical"]["consistency"]["line"], "nontrivial with gcd(dim, |G|) = 2 > 1, consistent");
  EXPECT_TRUE(doc["timing"].contains("seconds"));
  EXPECT_EQ(doc["canonical"].dump(2) + "\n", slurp(fixture("search_z2_d4_nontrivial_0.report.json")));
}

TEST(Cli, CoreOfGroupAlgebra) {
  Scratch s;
  const std::string log = s.path("log");
  ASSERT_EQ(run_tool("core \"" + fixture("k_z3.ydh") + "\" --idempotent 0", log), 0);
  auto rec = nlohmann::ordered_json::parse(slurp(log));
  EXPECT_EQ(rec["m"].get<int>(), 1);
  // core = {eps}: the single omega is the counit
  YDHopfAlgebra a = read_ydh_file(fixture("k_z3.ydh"));
  ASSERT_EQ(rec["omega_rows"].size(), 1u);
  for (int i = 0; i < a.dim(); ++i) EXPECT_EQ(rec["omega_rows"][0][i].get<std::string>(), a.counit()[i].str());
  EXPECT_EQ(run_tool("core \"" + fixture("k_z3.ydh") + "\" --idempotent 9", log), 2);
}

TEST(Cli, DualizeThenVerify) {
  Scratch s;
  const std::string dual = s.path("dual.ydh");
  ASSERT_EQ(run_tool("dualize \"" + fixture("search_z2_d4_nontrivial_1.ydh") + "\" -o \"" + dual + "\"", s.path("log")), 0);
  EXPECT_EQ(run_tool("verify \"" + dual + "\"", s.path("log")), 0);
  YDHopfAlgebra d = read_ydh_file(dual);
  EXPECT_EQ(render_ydh(d), render_ydh(dualize(read_ydh_file(fixture("search_z2_d4_nontrivial_1.ydh")))));
}

TEST(Cli, SearchAndReport) {
  Scratch s;
  const std::string log = s.path("log");
  EXPECT_EQ(run_tool("search --group Z/2 --dim 3 --budget 4:4 --all --out \"" + s.path("hits") + "\"", log), 0);
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(s.path("hits"))) {
    if (e.path().extension() != ".ydh") continue;
    ++files;
    EXPECT_NE(e.path().filename().string().find("trivial"), std::string::npos);
    EXPECT_EQ(e.path().filename().string().find("nontrivial"), std::string::npos);
  }
  EXPECT_EQ(files, 3);
  EXPECT_EQ(run_tool("search --group Z/2 --dim 3 --budget four", log), 2);
  EXPECT_EQ(run_tool("report \"" + fixture("k_z2.ydh") + "\" \"" + fixture("fun_z2xz2.ydh") + "\"", log), 0);
  EXPECT_NE(slurp(log).find("trivial\tpass"), std::string::npos) << slurp(log);
}
