// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmr/gmr.h"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string spec_text(const char* rel) { return slurp(fs::path(GMR_SOURCE_DIR) / rel); }

struct Run {
  gmr_status status;
  std::string text, json;
};

Run run(const std::string& text, const char* command, const char* method = nullptr) {
  gmr_options o;
  gmr_options_init(&o);
  o.command = command;
  if (method) o.method = method;
  gmr_report* rep = nullptr;
  Run r;
  r.status = gmr_run(text.data(), text.size(), "spec.json", &o, &rep);
  EXPECT_NE(rep, nullptr);
  if (!rep) return r;
  EXPECT_EQ(gmr_report_status(rep), r.status);
  r.text = gmr_report_render(rep, GMR_FORMAT_TEXT);
  r.json = gmr_report_render(rep, GMR_FORMAT_JSON);
  gmr_report_free(rep);
  return r;
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(gmr_version(), "1.0.0"); }

TEST(CApi, ParseAndCanonicalEcho) {
  const auto text = spec_text("corpus/z4.json");
  gmr_spec* spec = nullptr;
  ASSERT_EQ(gmr_spec_parse(text.data(), text.size(), &spec), GMR_OK);
  ASSERT_NE(spec, nullptr);
  const std::string canonical = gmr_spec_canonical(spec);
  gmr_spec* again = nullptr;
  ASSERT_EQ(gmr_spec_parse(canonical.data(), canonical.size(), &again), GMR_OK);
  EXPECT_EQ(canonical, gmr_spec_canonical(again));
  gmr_spec_free(spec);
  gmr_spec_free(again);
}

TEST(CApi, ParseErrorsCarryCodes) {
  const auto text = spec_text("tests/specs/bad_version.json");
  gmr_spec* spec = reinterpret_cast<gmr_spec*>(&spec);
  EXPECT_EQ(gmr_spec_parse(text.data(), text.size(), &spec), GMR_INVALID_INPUT);
  EXPECT_EQ(spec, nullptr);
  EXPECT_NE(std::strstr(gmr_last_error(), "E_VERSION"), nullptr) << gmr_last_error();
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(gmr_spec_parse("{}", 2, nullptr), GMR_INVALID_INPUT);
  gmr_report* rep = nullptr;
  EXPECT_EQ(gmr_run("{}", 2, "x", nullptr, &rep), GMR_INVALID_INPUT);
  EXPECT_EQ(rep, nullptr);
  EXPECT_EQ(gmr_report_status(nullptr), GMR_INVALID_INPUT);
  EXPECT_STREQ(gmr_report_render(nullptr, GMR_FORMAT_TEXT), "");
  gmr_report_free(nullptr);
  gmr_spec_free(nullptr);
}

TEST(CApi, StatusPartition) {
  EXPECT_EQ(run(spec_text("tests/specs/passing_z4.json"), "check").status, GMR_OK);
  EXPECT_EQ(run(spec_text("tests/specs/corrupted_z4.json"), "check").status, GMR_VIOLATION);
  EXPECT_EQ(run(spec_text("tests/specs/undeclared_vertex.json"), "check").status, GMR_INVALID_INPUT);
  EXPECT_EQ(run(spec_text("tests/specs/oversized.json"), "radical").status, GMR_RESOURCE_LIMIT);
  EXPECT_NE(std::strstr(gmr_last_error(), "E_CAP"), nullptr) << gmr_last_error();
}

TEST(CApi, ReportsAreDeterministic) {
  const auto text = spec_text("corpus/z12.json");
  const auto a = run(text, "radical", "all"), b = run(text, "radical", "all");
  EXPECT_EQ(a.status, GMR_OK);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.json, b.json);
  EXPECT_NE(a.json.find("\"status\": \"ok\""), std::string::npos);
  EXPECT_NE(a.text.find("1,1:(6)"), std::string::npos);
}

TEST(CApi, FailedParseStillYieldsAReport) {
  const auto r = run("not json", "check");
  EXPECT_EQ(r.status, GMR_INVALID_INPUT);
  EXPECT_NE(r.text.find("E_JSON"), std::string::npos);
  EXPECT_NE(r.json.find("invalid_input"), std::string::npos);
}
