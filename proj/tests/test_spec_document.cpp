#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmr/commands.hpp"
#include "gmr/radical.hpp"
#include "gmr/spec_document.hpp"
#include "oracles.hpp"

using namespace gmr;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kPath = R"({"version": 1, "construction": {"kind": "path_algebra", "vertices": ["1", "2"],
  "edges": [["1", "2"]], "modulus": 2, "truncation": 1}})";

// Parses `text` expecting an InvalidInput with `code`; returns the message.
std::string diagnose(const std::string& text, const std::string& code) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    EXPECT_EQ(e.code(), code) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no diagnostic for " << text;
  return {};
}

std::string with(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST(SpecParse, PathAlgebraDefaults) {
  auto d = parse_spec(kPath);
  EXPECT_EQ(d.kind, "path_algebra");
  EXPECT_TRUE(d.path_algebra.include_trivial_paths);
  EXPECT_EQ(d.caps.max_order, 65536u);
  EXPECT_EQ(GMRing::assemble(d.build()).order(), 8u);
}

TEST(SpecParse, Diagnostics) {
  diagnose("{\"version\": 1,", "E_JSON");
  diagnose("[]", "E_SCHEMA");
  diagnose(R"({"version": 1})", "E_SCHEMA");
  EXPECT_NE(diagnose(with(kPath, "\"version\": 1", "\"version\": 1, \"extra\": 0"), "E_UNKNOWN_FIELD").find("$.extra"),
            std::string::npos);
  EXPECT_NE(diagnose(with(kPath, "\"truncation\": 1", "\"truncation\": 1, \"loops\": true"), "E_UNKNOWN_FIELD")
                .find("$.construction.loops"),
            std::string::npos);
  diagnose(with(kPath, "\"version\": 1", "\"version\": 2"), "E_VERSION");
  diagnose(with(kPath, "\"version\": 1", "\"version\": \"1\""), "E_VERSION");
  diagnose(with(kPath, "path_algebra", "quiver"), "E_KIND");
  diagnose(with(kPath, "[\"1\", \"2\"],", "[\"1\", \"a b\"],"), "E_LABEL");
  diagnose(with(kPath, "\"modulus\": 2", "\"modulus\": 1"), "E_RANGE");
  diagnose(with(kPath, "\"truncation\": 1", "\"truncation\": 0"), "E_RANGE");
  diagnose(with(kPath, "\"truncation\": 1", "\"truncation\": 17"), "E_RANGE");
  diagnose(with(kPath, "\"modulus\": 2", "\"modulus\": 2.5"), "E_SCHEMA");
  diagnose(with(kPath, "[\"1\", \"2\"],", "[\"1\", \"1\"],"), "E_DUPLICATE");
  diagnose(with(kPath, "[[\"1\", \"2\"]]", "[[\"1\", \"2\"], [\"1\", \"2\"]]"), "E_DUPLICATE_EDGE");
  diagnose(with(kPath, "[[\"1\", \"2\"]]", "[[\"1\", \"2\", \"1\"]]"), "E_SCHEMA");
  diagnose(with(kPath, "\"version\": 1", "\"version\": 1, \"named_ideals\": {\"x\": [\"1,2:x\"]}"),
           "E_ELEMENT_SYNTAX");
  diagnose(with(kPath, "\"version\": 1", "\"version\": 1, \"named_ideals\": {\"x\": [\"1,9:(1)\"]}"), "E_LABEL");
  diagnose(with(kPath, "\"version\": 1", "\"version\": 1, \"caps\": {\"max_order\": 0}"), "E_RANGE");
  diagnose(with(kPath, "\"version\": 1", "\"version\": 1, \"caps\": {\"order\": 5}"), "E_UNKNOWN_FIELD");
}

TEST(SpecParse, UndeclaredVertexNamesTheEdge) {
  const auto msg = diagnose(with(kPath, "[[\"1\", \"2\"]]", "[[\"1\", \"2\"], [\"2\", \"7\"]]"), "E_LABEL");
  EXPECT_NE(msg.find("$.construction.edges[1]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("edge 1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'7'"), std::string::npos) << msg;
}

TEST(SpecParse, TablesAndMatrixKinds) {
  auto t = parse_spec(R"({"version": 1, "construction": {"kind": "tables", "index_set": ["a"],
    "components": [{"i": "a", "j": "a", "factors": [3]}],
    "products": [{"i": "a", "j": "a", "k": "a", "table": [[0,0,0],[0,1,2],[0,2,1]]}]}})");
  EXPECT_EQ(GMRing::assemble(t.build()).order(), 3u);
  diagnose(R"({"version": 1, "construction": {"kind": "tables", "index_set": ["a"],
    "components": [{"i": "a", "j": "b", "factors": [3]}]}})",
           "E_LABEL");
  auto m = parse_spec(R"({"version": 1, "construction": {"kind": "matrix_hom",
    "objects": [{"label": "x", "dim": 1}, {"label": "y", "dim": 2}], "modulus": 3, "zero_blocks": [["y", "x"]]}})");
  EXPECT_EQ(GMRing::assemble(m.build()).order(), 3u * 9u * 81u);
  diagnose(R"({"version": 1, "construction": {"kind": "matrix_hom",
    "objects": [{"label": "x", "dim": 0}], "modulus": 3}})",
           "E_RANGE");
}

TEST(SpecParse, CanonicalEchoRoundTripsOnCorpus) {
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(fs::path(GMR_SOURCE_DIR) / "corpus")) {
    if (e.path().extension() != ".json") continue;
    ++n;
    const auto first = parse_spec(slurp(e.path())).to_json();
    const auto again = parse_spec(first.dump(2)).to_json();
    EXPECT_EQ(first, again) << e.path();
    EXPECT_EQ(parse_spec(slurp(e.path())).build(), parse_spec(first.dump()).build()) << e.path();
  }
  EXPECT_GE(n, 18u);
}

TEST(SpecParse, NamedIdealsResolve) {
  auto d = parse_spec(slurp(fs::path(GMR_SOURCE_DIR) / "corpus" / "upper_mod2.json"));
  auto r = GMRing::assemble(d.build());
  auto gens = d.ideal_generators(r, "strict_upper");
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0], r.single(0, 1, 1));
  try {
    d.ideal_generators(r, "missing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "E_IDEAL_NAME");
  }
}

TEST(SpecDigest, KnownVectors) {
  EXPECT_EQ(spec_digest(""), "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(spec_digest("abc"), "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Commands, OutcomesFollowThePartition) {
  const auto dir = fs::path(GMR_SOURCE_DIR) / "tests" / "specs";
  auto run = [&](const char* file, const char* command) {
    CommandOptions o;
    o.command = command;
    return run_command(slurp(dir / file), file, o).exit_code();
  };
  EXPECT_EQ(run("passing_z4.json", "check"), 0);
  EXPECT_EQ(run("corrupted_z4.json", "check"), 1);
  EXPECT_EQ(run("bad_version.json", "check"), 2);
  EXPECT_EQ(run("undeclared_vertex.json", "radical"), 2);
  EXPECT_EQ(run("oversized.json", "verify"), 3);
}

TEST(Commands, CliCapsOverrideSpecCaps) {
  const auto text = slurp(fs::path(GMR_SOURCE_DIR) / "corpus" / "z12.json");
  CommandOptions o;
  o.command = "radical";
  EXPECT_EQ(run_command(text, "z12.json", o).exit_code(), 0);
  o.max_order = 8;
  const auto rep = run_command(text, "z12.json", o);
  EXPECT_EQ(rep.exit_code(), 3);
  EXPECT_EQ(rep.error_code, "E_CAP");
}

TEST(Commands, QuotientNeedsAKnownIdeal) {
  const auto text = slurp(fs::path(GMR_SOURCE_DIR) / "corpus" / "z12.json");
  CommandOptions o;
  o.command = "quotient";
  o.ideal = "nope";
  EXPECT_EQ(run_command(text, "z12.json", o).exit_code(), 2);
  o.ideal = "six";
  const auto rep = run_command(text, "z12.json", o);
  EXPECT_EQ(rep.exit_code(), 0);
  EXPECT_NE(render_text(rep).find("cosets"), std::string::npos);
}

TEST(Commands, RenderingIsDeterministic) {
  const auto text = slurp(fs::path(GMR_SOURCE_DIR) / "corpus" / "upper_mod4.json");
  for (const char* cmd : {"check", "radical", "ideals", "components", "verify"}) {
    CommandOptions o;
    o.command = cmd;
    const auto a = run_command(text, "upper_mod4.json", o), b = run_command(text, "upper_mod4.json", o);
    EXPECT_EQ(render_text(a), render_text(b)) << cmd;
    EXPECT_EQ(render_json(a), render_json(b)) << cmd;
    // Sorted keys: the rendered JSON equals its own re-dump.
    EXPECT_EQ(render_json(a), nlohmann::json::parse(render_json(a)).dump(2) + "\n") << cmd;
  }
}

TEST(Corpus, AssembledRingsSatisfyRingAxiomsExhaustively) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(fs::path(GMR_SOURCE_DIR) / "corpus")) {
    if (e.path().extension() != ".json") continue;
    const auto d = parse_spec(slurp(e.path()));
    const auto r = GMRing::assemble(d.build(), d.caps);
    if (r.order() > 256) continue;
    ++n;
    const auto t = oracle::tables_of(r);
    bool ok = true;
    for (std::uint32_t x = 0; x < t.n && ok; ++x)
      for (std::uint32_t y = 0; y < t.n && ok; ++y)
        for (std::uint32_t z = 0; z < t.n && ok; ++z)
          ok = t.times(t.times(x, y), z) == t.times(x, t.times(y, z)) &&
               t.times(x, t.plus(y, z)) == t.plus(t.times(x, y), t.times(x, z)) &&
               t.times(t.plus(x, y), z) == t.plus(t.times(x, z), t.times(y, z));
    EXPECT_TRUE(ok) << e.path();
    EXPECT_TRUE(ring_self_test(r).ok) << e.path();
  }
  EXPECT_EQ(n, 18u);
}
