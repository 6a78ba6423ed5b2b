// gmr: command-line front end over the C API.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmr/gmr.h"

namespace fs = std::filesystem;

namespace {

struct Args {
  std::string command;
  std::string spec;
  std::string method = "all";
  std::string flavor = "gm";
  std::string ideal;
  std::string suite = "all";
  std::string format = "text";
  std::string corpus;
  std::uint64_t max_order = 0, max_lattice = 0, max_radical = 0;
  bool timing = false;
};

// Batch exit code: violations outrank resource limits, which outrank input errors.
int rank(int code) {
  switch (code) {
    case 1: return 4;
    case 3: return 3;
    case 2: return 2;
    case 0: return 0;
    default: return 5;
  }
}

bool read_file(const fs::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int run_one(const Args& a, const std::string& text, const std::string& name, std::string& rendered) {
  gmr_options o;
  gmr_options_init(&o);
  o.command = a.command.c_str();
  o.method = a.method.c_str();
  o.flavor = a.flavor.c_str();
  o.ideal = a.ideal.c_str();
  o.suite = a.suite.c_str();
  o.max_order = a.max_order;
  o.max_lattice = a.max_lattice;
  o.max_radical = a.max_radical;
  o.timing = a.timing;
  gmr_report* rep = nullptr;
  const gmr_status st = gmr_run(text.data(), text.size(), name.c_str(), &o, &rep);
  if (!rep) {
    std::cerr << "gmr: " << gmr_last_error() << "\n";
    return st == GMR_OK ? GMR_INTERNAL_ERROR : st;
  }
  rendered = gmr_report_render(rep, a.format == "json" ? GMR_FORMAT_JSON : GMR_FORMAT_TEXT);
  gmr_report_free(rep);
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized matrix rings: construction, ideals, quotients and the Baer radical"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-order", a.max_order, "Cap on ring and component orders");
  app.add_option("--max-lattice", a.max_lattice, "Cap on ring order for ideal-lattice methods");
  app.add_option("--max-radical", a.max_radical, "Cap on carrier size for m-step graphs");
  app.add_option("--seed-corpus", a.corpus, "Run the command on every *.json spec in DIR (sorted)");
  app.add_flag("--timing", a.timing, "Include wall-clock timing in reports");

  struct Sub {
    const char* name;
    const char* help;
  };
  for (Sub s : {Sub{"check", "Check the Gamma axioms and the assembled ring"},
                Sub{"radical", "Compute the Baer radical"},
                Sub{"ideals", "Enumerate ideals"},
                Sub{"quotient", "Quotient by a named ideal"},
                Sub{"components", "Gamma-ring radicals of every component"},
                Sub{"verify", "Verify theorem suites"}}) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->add_option("spec", a.spec, "Ring spec file");
    const std::string name = s.name;
    if (name == "radical")
      sub->add_option("--method", a.method)->check(CLI::IsMember({"m", "primes-gm", "primes-ring", "nilpotent", "gm-max", "all"}));
    if (name == "ideals") sub->add_option("--flavor", a.flavor)->check(CLI::IsMember({"gm", "ring"}));
    if (name == "quotient") sub->add_option("--ideal", a.ideal)->required();
    if (name == "verify") sub->add_option("--suite", a.suite)->check(CLI::IsMember({"iso", "radical", "all"}));
    sub->callback([&a, name] { a.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : GMR_INVALID_INPUT;
  }

  std::vector<fs::path> specs;
  if (!a.corpus.empty()) {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(a.corpus, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".json") specs.push_back(entry.path());
    if (ec) {
      std::cerr << "gmr: cannot read directory " << a.corpus << ": " << ec.message() << "\n";
      return GMR_INVALID_INPUT;
    }
    std::sort(specs.begin(), specs.end(), [](const fs::path& x, const fs::path& y) { return x.filename() < y.filename(); });
  }
  if (!a.spec.empty()) specs.insert(specs.begin(), a.spec);
  if (specs.empty()) {
    std::cerr << "gmr: no spec given (pass SPEC or --seed-corpus DIR)\n";
    return GMR_INVALID_INPUT;
  }

  const bool batch = specs.size() > 1 || !a.corpus.empty();
  int worst = 0;
  std::string out;
  if (batch && a.format == "json") out += "[\n";
  for (std::size_t k = 0; k < specs.size(); ++k) {
    std::string text, rendered;
    int rc;
    if (!read_file(specs[k], text)) {
      std::cerr << "gmr: cannot read " << specs[k].string() << "\n";
      rc = GMR_INVALID_INPUT;
    } else {
      rc = run_one(a, text, specs[k].filename().string(), rendered);
    }
    if (rank(rc) > rank(worst)) worst = rc;
    if (rendered.empty()) continue;
    if (batch && a.format == "json") {
      if (out.size() > 2) out += ",\n";
      while (!rendered.empty() && rendered.back() == '\n') rendered.pop_back();
      out += rendered;
    } else {
      if (k) out += "\n";
      out += rendered;
    }
  }
  if (batch && a.format == "json") out += "\n]\n";
  std::cout << out;
  return worst;
}
