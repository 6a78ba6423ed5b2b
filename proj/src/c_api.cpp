#include "gmr/gmr.h"

#include <exception>
#include <string>

#include "gmr/commands.hpp"
#include "gmr/spec_document.hpp"

struct gmr_spec {
  gmr::SpecDocument doc;
  std::string canonical;
};

struct gmr_report {
  gmr::Report report;
  std::string rendered;
};

namespace {

thread_local std::string last_error;

gmr_status fail(gmr_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

gmr_status from_kind(gmr::ErrorKind k) {
  switch (k) {
    case gmr::ErrorKind::Violation: return GMR_VIOLATION;
    case gmr::ErrorKind::InvalidInput: return GMR_INVALID_INPUT;
    case gmr::ErrorKind::ResourceLimit: return GMR_RESOURCE_LIMIT;
  }
  return GMR_INTERNAL_ERROR;
}

}  // namespace

extern "C" {

const char* gmr_version(void) { return "1.0.0"; }

const char* gmr_last_error(void) { return last_error.c_str(); }

void gmr_options_init(gmr_options* opts) {
  if (!opts) return;
  *opts = gmr_options{};
  opts->command = "check";
}

gmr_status gmr_spec_parse(const char* text, size_t len, gmr_spec** out) {
  if (!out) return fail(GMR_INVALID_INPUT, "null output handle");
  *out = nullptr;
  if (!text && len) return fail(GMR_INVALID_INPUT, "null spec text");
  try {
    auto doc = gmr::parse_spec(std::string_view(text ? text : "", len));
    auto canonical = doc.to_json().dump(2);
    *out = new gmr_spec{std::move(doc), std::move(canonical)};
    last_error.clear();
    return GMR_OK;
  } catch (const gmr::Error& e) {
    return fail(from_kind(e.kind()), e.code() + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(GMR_INTERNAL_ERROR, e.what());
  }
}

const char* gmr_spec_canonical(const gmr_spec* spec) { return spec ? spec->canonical.c_str() : ""; }

void gmr_spec_free(gmr_spec* spec) { delete spec; }

gmr_status gmr_run(const char* spec_text, size_t len, const char* spec_name, const gmr_options* opts,
                   gmr_report** out) {
  if (!out) return fail(GMR_INVALID_INPUT, "null output handle");
  *out = nullptr;
  if (!opts || !opts->command) return fail(GMR_INVALID_INPUT, "missing options or command");
  if (!spec_text && len) return fail(GMR_INVALID_INPUT, "null spec text");
  gmr::CommandOptions o;
  o.command = opts->command;
  if (opts->method) o.method = opts->method;
  if (opts->flavor) o.flavor = opts->flavor;
  if (opts->ideal) o.ideal = opts->ideal;
  if (opts->suite) o.suite = opts->suite;
  if (opts->max_order) o.max_order = opts->max_order;
  if (opts->max_lattice) o.max_lattice = opts->max_lattice;
  if (opts->max_radical) o.max_radical = opts->max_radical;
  o.timing = opts->timing != 0;
  try {
    auto* rep = new gmr_report{gmr::run_command(std::string_view(spec_text ? spec_text : "", len),
                                                spec_name ? spec_name : "", o),
                               {}};
    *out = rep;
    const auto status = static_cast<gmr_status>(rep->report.exit_code());
    if (status == GMR_OK) last_error.clear();
    else last_error = rep->report.error_code.empty() ? "theorem verdict failed" : rep->report.error_code + ": " + rep->report.error_message;
    return status;
  } catch (const std::exception& e) {
    return fail(GMR_INTERNAL_ERROR, std::string("internal error: ") + e.what());
  }
}

gmr_status gmr_report_status(const gmr_report* report) {
  return report ? static_cast<gmr_status>(report->report.exit_code()) : GMR_INVALID_INPUT;
}

const char* gmr_report_render(gmr_report* report, gmr_format format) {
  if (!report) return "";
  report->rendered = format == GMR_FORMAT_JSON ? gmr::render_json(report->report) : gmr::render_text(report->report);
  return report->rendered.c_str();
}

void gmr_report_free(gmr_report* report) { delete report; }

}  // extern "C"
