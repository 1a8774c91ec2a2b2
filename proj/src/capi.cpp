#include "famalg.h"

#include <cstring>
#include <string>

#include "famalg/cohomology.hpp"
#include "famalg/workspace.hpp"

struct famalg_workspace {
  famalg::Workspace ws;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

famalg_status classify(const std::exception& e) {
  if (dynamic_cast<const famalg::workspace_parse_error*>(&e)) return FAMALG_ERROR_PARSE;
  if (dynamic_cast<const famalg::resource_bound_error*>(&e)) return FAMALG_ERROR_RESOURCE;
  if (const auto* ia = dynamic_cast<const std::invalid_argument*>(&e)) {
    if (std::string(ia->what()).rfind("unknown object", 0) == 0) return FAMALG_ERROR_UNKNOWN_OBJECT;
    return FAMALG_ERROR_PRECONDITION;
  }
  if (dynamic_cast<const std::out_of_range*>(&e)) return FAMALG_ERROR_PRECONDITION;
  return FAMALG_ERROR_INTERNAL;
}

template <typename Fn>
famalg_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return classify(e);
  } catch (...) {
    g_last_error = "unknown error";
    return FAMALG_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

famalg_status famalg_workspace_open(const char* path, famalg_workspace** out) {
  if (!path || !out) return FAMALG_ERROR_BAD_ARGUMENT;
  return guarded([&]() -> famalg_status {
    try {
      auto* ws = new famalg_workspace{famalg::parse_workspace_file(path)};
      *out = ws;
      return FAMALG_OK;
    } catch (const famalg::workspace_parse_error&) {
      throw;
    } catch (const std::runtime_error& e) {
      g_last_error = e.what();
      return FAMALG_ERROR_IO;
    }
  });
}

famalg_status famalg_workspace_parse(const char* json_text, famalg_workspace** out) {
  if (!json_text || !out) return FAMALG_ERROR_BAD_ARGUMENT;
  return guarded([&]() -> famalg_status {
    *out = new famalg_workspace{famalg::parse_workspace_text(json_text)};
    return FAMALG_OK;
  });
}

void famalg_workspace_close(famalg_workspace* ws) { delete ws; }

famalg_status famalg_run(famalg_workspace* ws, const char* request_json, char** report_json) {
  if (!ws || !request_json || !report_json) return FAMALG_ERROR_BAD_ARGUMENT;
  return guarded([&]() -> famalg_status {
    famalg::Json request;
    try {
      request = famalg::Json::parse(request_json);
    } catch (const std::exception& e) {
      g_last_error = std::string("malformed request: ") + e.what();
      return FAMALG_ERROR_PARSE;
    }
    famalg::CommandOutcome outcome = famalg::run_command(ws->ws, request);
    *report_json = dup_string(outcome.report.dump(2));
    return FAMALG_OK;
  });
}

famalg_status famalg_run_all(famalg_workspace* ws, char** report_json) {
  if (!ws || !report_json) return FAMALG_ERROR_BAD_ARGUMENT;
  return guarded([&]() -> famalg_status {
    famalg::CommandOutcome outcome = famalg::run_all_commands(ws->ws);
    *report_json = dup_string(outcome.report.dump(2));
    return FAMALG_OK;
  });
}

int famalg_report_all_passed(const char* report_json) {
  if (!report_json) return -1;
  try {
    famalg::Json report = famalg::Json::parse(report_json);
    if (report.is_array()) {
      for (const auto& r : report)
        if (!r.value("pass", false)) return 0;
      return 1;
    }
    return report.value("pass", false) ? 1 : 0;
  } catch (...) {
    return -1;
  }
}

famalg_status famalg_render_text(const char* report_json, char** text_out) {
  if (!report_json || !text_out) return FAMALG_ERROR_BAD_ARGUMENT;
  return guarded([&]() -> famalg_status {
    famalg::Json report;
    try {
      report = famalg::Json::parse(report_json);
    } catch (const std::exception& e) {
      g_last_error = std::string("malformed report: ") + e.what();
      return FAMALG_ERROR_PARSE;
    }
    *text_out = dup_string(famalg::render_report_text(report));
    return FAMALG_OK;
  });
}

const char* famalg_last_error(void) { return g_last_error.c_str(); }

void famalg_free_string(char* s) { delete[] s; }

const char* famalg_version(void) { return "0.1.0"; }

}  // extern "C"
