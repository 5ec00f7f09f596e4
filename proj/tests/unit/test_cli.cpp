#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "crysdef/errors.hpp"
#include "defectctl/app.hpp"
#include "defectctl/commands.hpp"
#include "defectctl/selftest.hpp"
#include "defectctl/spec_file.hpp"

using namespace defectctl;
using namespace crysdef;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EXAMPLES_DIR) + "/" + name; }

Json parse_out(const CliRun& r) { return Json::parse(r.out); }

std::string minimal(const std::string& system_body) {
  return R"({"version":"1.0","system":{)" + system_body + "}}";
}

} // namespace

TEST(SpecFile, ParsesFullDocument) {
  const ParsedSpec s = load_spec(data("hexagonal_point.json"));
  EXPECT_EQ(s.system.space.manifold.kind, ManifoldKind::Euclidean);
  EXPECT_EQ(s.system.space.defect.points, 1u);
  EXPECT_EQ(s.system.symmetry.planar->lattice(), Lattice::Hexagonal);
  EXPECT_EQ(s.options.window, 3);
  EXPECT_EQ(s.options.output, OutputFormat::Json);
}

TEST(SpecFile, Defaults) {
  const ParsedSpec s = parse_spec(minimal(
      R"("manifold":{"type":"sphere","dim":2},"symmetry":{"type":"spatial_crystal"})"));
  EXPECT_TRUE(s.system.space.defect.is_empty());
  EXPECT_EQ(s.system.vacua_count, 1u);
  EXPECT_EQ(s.options.window, 5);
  EXPECT_FALSE(s.options.compactify);
}

TEST(SpecFile, SyntaxErrorCarriesLineAndColumn) {
  try {
    load_spec(data("malformed.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where().rfind("line 5, column ", 0), 0u) << e.where();
  }
}

TEST(SpecFile, UnknownKeysNameTheirPath) {
  try {
    load_spec(data("unknown_key.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "$.system.symmetry.colour");
  }
  EXPECT_THROW(parse_spec(R"({"version":"1.0","system":{},"extra":1})"), ParseError);
}

TEST(SpecFile, VersionAndTypes) {
  EXPECT_THROW(parse_spec(R"({"version":"2.0","system":{}})"), ParseError);
  EXPECT_THROW(parse_spec(minimal(R"("manifold":{"type":"euclidean","dim":"2"},)"
                                  R"("symmetry":{"type":"spatial_crystal"})")),
               ParseError);
  EXPECT_THROW(parse_spec(minimal(R"("manifold":{"type":"euclidean","dim":-1},)"
                                  R"("symmetry":{"type":"spatial_crystal"})")),
               ParseError);
  EXPECT_THROW(parse_spec(minimal(R"("manifold":{"type":"klein_bottle"},)"
                                  R"("symmetry":{"type":"spatial_crystal"})")),
               ParseError);
  EXPECT_THROW(parse_spec(minimal(R"("manifold":{"type":"euclidean","dim":2},)"
                                  R"("symmetry":{"type":"planar_crystal","lattice":"kagome"})")),
               ParseError);
  EXPECT_THROW(parse_spec(R"({"version":"1.1","system":{"manifold":{"type":"euclidean","dim":2},)"
                          R"("symmetry":{"type":"spatial_crystal"}},"options":{"output":"xml"}})"),
               ParseError);
}

TEST(SpecFile, MisplacedKnownKeysAreInconsistent) {
  try {
    parse_spec(minimal(R"("manifold":{"type":"euclidean","dim":2},)"
                       R"("symmetry":{"type":"planar_crystal","lattice":"square","group":"tetrahedral"})"));
    FAIL();
  } catch (const InconsistentSpec& e) {
    EXPECT_EQ(e.field(), "symmetry.group");
  }
  EXPECT_THROW(parse_spec(minimal(R"("manifold":{"type":"euclidean","dim":2},)"
                                  R"("symmetry":{"type":"planar_crystal","lattice":"square",)"
                                  R"("has_reflection":false})")),
               InconsistentSpec);
}

TEST(SpecFile, CustomMatrixAndTorusFields) {
  const ParsedSpec s = parse_spec(
      minimal(R"("manifold":{"type":"euclidean","dim":2},)"
              R"("symmetry":{"type":"planar_crystal","matrix":[[0,-1],[1,-1]],"has_reflection":true})"));
  EXPECT_EQ(s.system.symmetry.planar->order(), 3u);
  EXPECT_TRUE(s.system.symmetry.planar->has_reflection());
  const ParsedSpec t = parse_spec(
      minimal(R"("manifold":{"type":"flat_torus","dim":2},"defect":{"type":"points","count":1},)"
              R"("symmetry":{"type":"torus_target","torus_dim":2,)"
              R"("aut_lattice":[[[1,0],[0,1]],[[-1,0],[0,-1]]],"p_gv":[0]})"));
  EXPECT_EQ(t.system.symmetry.aut_lattice.size(), 2u);
  EXPECT_EQ(t.system.symmetry.torus_dim, 2u);
  EXPECT_THROW(parse_spec(minimal(R"("manifold":{"type":"euclidean","dim":2},)"
                                  R"("symmetry":{"type":"planar_crystal","matrix":[[1,1],[0,1]]})")),
               InvalidPointGroup);
}

TEST(Classify, HexagonalPointReport) {
  const CliRun r = cli({"classify", data("hexagonal_point.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_out(r);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["input"]["system"]["symmetry"]["lattice"], "hexagonal");
  const Json& f = j["result"]["components"][0]["classes"]["factors"][0];
  EXPECT_EQ(f["kind"], "planar_conjugacy_classes");
  ASSERT_EQ(f["by_n3"].size(), 6u);
  EXPECT_EQ(f["by_n3"][0]["classes"]["kind"], "fundamental_domain");
  EXPECT_EQ(f["by_n3"][0]["classes"]["domain"], "cone");
  EXPECT_EQ(f["by_n3"][1]["classes"]["representatives"], Json::parse("[[0,0]]"));
  EXPECT_EQ(f["by_n3"][2]["classes"]["representatives"], Json::parse("[[0,0],[0,1]]"));
  EXPECT_EQ(j["result"]["chirality"]["size"], 1);
  EXPECT_EQ(j["provenance"]["version"], DEFECTCTL_VERSION);
}

TEST(Classify, FundamentalDomainExamplesRespectWindow) {
  const Json j = parse_out(cli({"--window", "2", "classify", data("hexagonal_point.json")}));
  const Json& d = j["result"]["components"][0]["classes"]["factors"][0]["by_n3"][0]["classes"];
  EXPECT_EQ(d["window"], 2);
  // {n1 >= 0, n2 > 0} u {0} inside [-2,2]^2: 3 * 2 + 1.
  EXPECT_EQ(d["examples"].size(), 7u);
}

TEST(Classify, SphereTetrahedral) {
  const Json j = parse_out(cli({"classify", data("sphere_tetrahedral.json")}));
  EXPECT_EQ(j["result"]["cardinality"]["kind"], "finite");
  EXPECT_EQ(j["result"]["cardinality"]["value"], 14);
}

TEST(Classify, DomainWallsAndTextures) {
  EXPECT_EQ(parse_out(cli({"classify", data("domain_walls.json")}))["result"]["cardinality"]["value"],
            8);
  const Json t = parse_out(cli({"classify", data("texture_compactified.json")}));
  EXPECT_EQ(t["result"]["cardinality"]["value"], 2);
  EXPECT_TRUE(t["result"]["compactified"].get<bool>());
}

TEST(Classify, OutputOptionFromFileAndFlag) {
  const CliRun text = cli({"classify", data("torus_point.json")});
  ASSERT_EQ(text.code, 0);
  EXPECT_EQ(text.out.rfind("classify  (defectctl", 0), 0u);
  EXPECT_NE(text.out.find("4 coset(s)"), std::string::npos);
  const CliRun json = cli({"--output", "json", "classify", data("torus_point.json")});
  EXPECT_EQ(parse_out(json)["result"]["components"][0]["classes"]["factors"][0]["rank"], 2);
}

TEST(ExitCodes, ParseErrorsGiveTwoWithoutOutput) {
  for (const char* f : {"malformed.json", "unknown_key.json", "does_not_exist.json"}) {
    const CliRun r = cli({"classify", data(f)});
    EXPECT_EQ(r.code, 2) << f;
    EXPECT_TRUE(r.out.empty()) << f;
    EXPECT_FALSE(r.err.empty()) << f;
  }
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--output", "yaml", "selftest"}).code, 2);
  EXPECT_EQ(cli({"conjugacy", "kagome"}).code, 2);
}

TEST(ExitCodes, InconsistentSpecGivesThreeNamingField) {
  const CliRun r = cli({"classify", data("inconsistent.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("system.symmetry.type"), std::string::npos) << r.err;
}

TEST(ExitCodes, HelpAndVersion) {
  const CliRun h = cli({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("conjugacy"), std::string::npos);
  EXPECT_EQ(cli({"--version"}).code, 0);
}

TEST(Conjugacy, SquareAtTwo) {
  const Json j = parse_out(cli({"conjugacy", "square", "2"}));
  ASSERT_EQ(j["result"]["by_n3"].size(), 1u);
  EXPECT_EQ(j["result"]["by_n3"][0]["classes"]["representatives"],
            Json::parse("[[0,0],[0,1],[1,1]]"));
  EXPECT_FALSE(j["result"]["by_n3"][0].contains("oracle"));
}

TEST(Conjugacy, HexagonalOracleAgrees) {
  const Json j = parse_out(cli({"conjugacy", "hexagonal", "1", "--window", "5"}));
  const Json& e = j["result"]["by_n3"][0];
  EXPECT_EQ(e["classes"]["count"], 1);
  EXPECT_EQ(e["oracle"]["verdict"], "AGREE");
  EXPECT_EQ(e["oracle"]["oracle_classes"], 1);
}

TEST(Conjugacy, AllResiduesAndNegativeIndex) {
  EXPECT_EQ(parse_out(cli({"conjugacy", "square"}))["result"]["by_n3"].size(), 4u);
  const Json j = parse_out(cli({"conjugacy", "hexagonal", "-4"}));
  EXPECT_EQ(j["result"]["by_n3"][0]["residue"], 2);
}

TEST(Conjugacy, CustomMatrices) {
  const CliRun bad = cli({"conjugacy", "[[2,0],[0,1]]"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_TRUE(bad.out.empty());
  const Json j = parse_out(cli({"conjugacy", "[[0,1],[1,0]]", "--reflection", "--window", "3"}));
  EXPECT_EQ(j["result"]["order"], 2);
  for (const Json& e : j["result"]["by_n3"]) EXPECT_EQ(e["oracle"]["verdict"], "AGREE");
}

TEST(Spherical, AgreementFlags) {
  Json t = parse_out(cli({"spherical", "tetrahedral"}));
  EXPECT_EQ(t["result"]["order"], 24);
  EXPECT_EQ(t["result"]["computed_class_count"], 7);
  EXPECT_EQ(t["result"]["published_class_count"], 7);
  EXPECT_EQ(t["result"]["agreement"], "AGREE");
  Json d = parse_out(cli({"spherical", "dihedral", "2"}));
  EXPECT_EQ(d["result"]["order"], 8);
  EXPECT_EQ(d["result"]["computed_class_count"], 5);
  EXPECT_EQ(d["result"]["agreement"], "AGREE");
  Json i = parse_out(cli({"spherical", "icosahedral"}));
  EXPECT_EQ(i["result"]["order"], 120);
  EXPECT_EQ(i["result"]["computed_class_count"], 9);
  EXPECT_EQ(i["result"]["published_class_count"], 11);
  EXPECT_EQ(i["result"]["agreement"], "DIFFER");
}

TEST(Spherical, Errors) {
  EXPECT_EQ(cli({"spherical", "cyclic", "7"}).code, 3);
  EXPECT_EQ(cli({"spherical", "cyclic"}).code, 2);
  EXPECT_EQ(cli({"spherical", "tetrahedral", "3"}).code, 2);
  EXPECT_EQ(cli({"spherical", "prismatic"}).code, 2);
}

TEST(Retract, Examples) {
  Json s = parse_out(cli({"retract", "sphere", "--dim", "2", "--points", "3"}));
  EXPECT_EQ(s["result"]["components"][0]["homotopy_type"], "S^1 v S^1");
  EXPECT_EQ(s["result"]["components"][0]["h1_rank"], 2);
  Json t = parse_out(cli({"retract", "torus2d", "--points", "0"}));
  EXPECT_EQ(t["result"]["components"][0]["homotopy_type"], "T^2");
  EXPECT_EQ(t["result"]["components"][0]["h1_rank"], 2);
  Json a = parse_out(cli({"retract", "annulus", "--points", "2"}));
  EXPECT_EQ(a["result"]["components"][0]["h1_rank"], 3);
  Json c = parse_out(cli({"retract", "euclidean", "--dim", "3", "--circle"}));
  EXPECT_EQ(c["result"]["components"][0]["homotopy_type"], "S^1 v S^2");
  Json h = parse_out(cli({"retract", "euclidean", "--dim", "3", "--hyperplanes", "1", "--k",
                          "[[1,0],[2,1]]"}));
  EXPECT_EQ(h["result"]["components"].size(), 2u);
}

TEST(Retract, Errors) {
  EXPECT_EQ(cli({"retract", "sphere", "--dim", "2", "--circle"}).code, 3);
  EXPECT_EQ(cli({"retract", "sphere", "--points", "2"}).code, 2);
  EXPECT_EQ(cli({"retract", "euclidean", "--dim", "3", "--points", "1", "--circle"}).code, 2);
  EXPECT_EQ(cli({"retract", "euclidean", "--dim", "3", "--hyperplanes", "1", "--k", "[[1]]"}).code,
            3);
}

TEST(Selftest, DefaultFixturesPass) {
  const auto cells = run_selftest(default_fixtures(), 5);
  for (const auto& c : cells) EXPECT_TRUE(c.pass) << c.cell << ": " << c.detail;
  const CliRun r = cli({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_out(r)["result"]["failed"], 0);
}

TEST(Selftest, CorruptedHexagonalCellIsNamed) {
  Fixtures fx = default_fixtures();
  for (auto& f : fx.planar)
    if (f.lattice == Lattice::Hexagonal && f.residue == 2) f.representatives = {{0, 0}};
  const auto cells = run_selftest(fx, 5);
  std::vector<std::string> failed;
  for (const auto& c : cells)
    if (!c.pass) failed.push_back(c.cell);
  ASSERT_EQ(failed.size(), 1u);
  EXPECT_EQ(failed[0], "planar / hexagonal / n3=2 mod 6");
  EXPECT_EQ(failed[0], planar_cell_name(Lattice::Hexagonal, 2, 6));
}

TEST(Selftest, CorruptedBinaryAndCompositeCells) {
  Fixtures fx = default_fixtures();
  fx.binary.back().class_count = 11;
  fx.composite.front().expected = Cardinality::finite(9);
  fx.punctured.front().h1 = 7;
  std::size_t failures = 0;
  for (const auto& c : run_selftest(fx, 5)) failures += c.pass ? 0 : 1;
  EXPECT_EQ(failures, 3u);
}

TEST(Determinism, ByteIdenticalReports) {
  const std::vector<std::vector<std::string>> cmds = {
      {"selftest"},
      {"--output", "text", "selftest"},
      {"classify", data("hexagonal_point.json")},
      {"classify", data("torus_point.json")},
      {"conjugacy", "square", "--window", "4"},
      {"spherical", "octahedral"},
      {"retract", "flat_torus", "--dim", "3", "--points", "2"},
  };
  for (const auto& c : cmds) EXPECT_EQ(cli(c).out, cli(c).out) << c[0];
}

TEST(RoundTrip, JsonReportsReserializeIdentically) {
  const std::vector<std::vector<std::string>> cmds = {
      {"selftest"},
      {"classify", data("hexagonal_point.json")},
      {"classify", data("sphere_tetrahedral.json")},
      {"conjugacy", "hexagonal", "--window", "3"},
      {"spherical", "icosahedral"},
      {"retract", "euclidean", "--dim", "3", "--circle"},
  };
  for (const auto& c : cmds) {
    const CliRun r = cli(c);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(dump(Json::parse(r.out)), r.out) << c[0];
  }
}

TEST(Executable, ExitCodesFromProcess) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(DEFECTCTL_EXE) + " " + args + " >/dev/null 2>&1";
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("conjugacy square 2"), 0);
  EXPECT_EQ(status("classify " + data("malformed.json")), 2);
  EXPECT_EQ(status("classify " + data("inconsistent.json")), 3);
  EXPECT_EQ(status("conjugacy '[[2,0],[0,1]]'"), 3);
}
