#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "famalg.h"

namespace {

const char* kWorkspace = R"({
  "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0}},
  "algebras": {"g": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]},
               "u2": {"dim": 2, "mult": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
                      "unit": ["1","0"]}},
  "families": {
    "rb": {"kind": "rota_baxter", "semigroup": "t", "algebra": "u2",
           "maps": {"0": [["0","0"],["1","0"]]}},
    "bad": {"kind": "rota_baxter", "semigroup": "t", "algebra": "g", "maps": {"0": [["1"]]}}
  },
  "commands": [{"cmd": "validate", "object": "rb"}]
})";

}  // namespace

TEST_CASE("parse, run, render and free through the C surface") {
  famalg_workspace* ws = nullptr;
  REQUIRE(famalg_workspace_parse(kWorkspace, &ws) == FAMALG_OK);
  REQUIRE(ws != nullptr);

  char* report = nullptr;
  CHECK(famalg_run(ws, R"({"cmd":"validate","object":"rb"})", &report) == FAMALG_OK);
  REQUIRE(report != nullptr);
  CHECK(famalg_report_all_passed(report) == 1);

  char* text = nullptr;
  CHECK(famalg_render_text(report, &text) == FAMALG_OK);
  CHECK(std::string(text).find("PASS") != std::string::npos);
  famalg_free_string(text);
  famalg_free_string(report);

  // failing verdicts surface inside the report, not as a status
  CHECK(famalg_run(ws, R"({"cmd":"validate","object":"bad"})", &report) == FAMALG_OK);
  CHECK(famalg_report_all_passed(report) == 0);
  famalg_free_string(report);

  // construct mutates the handle and later commands see the stored object
  CHECK(famalg_run(ws,
                   R"({"cmd":"construct","recipe":"dendriform-from-family",
                       "args":["rb"],"store_as":"dend"})",
                   &report) == FAMALG_OK);
  famalg_free_string(report);
  CHECK(famalg_run(ws, R"({"cmd":"validate","object":"dend"})", &report) == FAMALG_OK);
  CHECK(famalg_report_all_passed(report) == 1);
  famalg_free_string(report);

  CHECK(famalg_run_all(ws, &report) == FAMALG_OK);
  CHECK(famalg_report_all_passed(report) == 1);
  famalg_free_string(report);

  famalg_workspace_close(ws);
}

TEST_CASE("status codes and last_error") {
  famalg_workspace* ws = nullptr;
  CHECK(famalg_workspace_open("/no/such/file.json", &ws) == FAMALG_ERROR_IO);
  CHECK(std::strlen(famalg_last_error()) > 0);

  CHECK(famalg_workspace_parse("{ not json", &ws) == FAMALG_ERROR_PARSE);

  const char* dangling = R"({"families": {"f": {"kind": "rota_baxter", "semigroup": "s",
    "algebra": "a", "maps": {}}}})";
  CHECK(famalg_workspace_parse(dangling, &ws) == FAMALG_ERROR_PARSE);
  CHECK(std::string(famalg_last_error()).find("does not resolve") != std::string::npos);

  REQUIRE(famalg_workspace_parse(kWorkspace, &ws) == FAMALG_OK);
  char* report = nullptr;
  CHECK(famalg_run(ws, R"({"cmd":"validate","object":"missing"})", &report) ==
        FAMALG_ERROR_UNKNOWN_OBJECT);
  CHECK(famalg_run(ws, "still not json", &report) == FAMALG_ERROR_PARSE);
  CHECK(famalg_run(ws, R"({"cmd":"construct","recipe":"no-such-recipe","store_as":"x"})",
                   &report) == FAMALG_ERROR_PRECONDITION);

  // resource bound surfaces as its own status
  CHECK(famalg_run(ws,
                   R"({"cmd":"search","target":"rota_baxter","algebra":"u2","semigroup":"t",
                       "coeffs":["0","1"],"bound":1})",
                   &report) == FAMALG_ERROR_RESOURCE);

  famalg_workspace_close(ws);
}

TEST_CASE("argument checking") {
  famalg_workspace* ws = nullptr;
  CHECK(famalg_workspace_open(nullptr, &ws) == FAMALG_ERROR_BAD_ARGUMENT);
  CHECK(famalg_workspace_parse(kWorkspace, nullptr) == FAMALG_ERROR_BAD_ARGUMENT);
  CHECK(famalg_run(nullptr, "{}", nullptr) == FAMALG_ERROR_BAD_ARGUMENT);
  CHECK(famalg_report_all_passed(nullptr) == -1);
  CHECK(famalg_report_all_passed("not json") == -1);
  CHECK(famalg_version() != nullptr);
  famalg_workspace_close(nullptr);  // must be a no-op
}
