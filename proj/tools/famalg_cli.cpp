// Command-line front end. Builds JSON requests from flags and drives the
// library through its C interface only.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "famalg.h"

namespace {

using Json = nlohmann::ordered_json;

int fail_usage(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"famalg: validators, constructions, cohomology and searches for "
               "semigroup-indexed operator families"};

  std::string workspace_path, cmd, object, out_format = "text";
  std::string recipe, args_csv, store_as, target, algebra, semigroup, coeffs_csv, bimodule,
      lambda;
  std::size_t n_max = 2, order = 2, max_results = 16;
  long seed = 0;

  app.add_option("--workspace", workspace_path, "workspace JSON file")->required();
  app.add_option("--cmd", cmd, "validate|construct|cohomology|deform|search "
                               "(default: run the workspace's command list)");
  app.add_option("--object", object, "object name for validate/cohomology/deform");
  app.add_option("--n-max", n_max, "top cohomology degree");
  app.add_option("--order", order, "deformation truncation order");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--out", out_format, "json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--recipe", recipe, "construct: recipe name");
  app.add_option("--args", args_csv, "construct: comma-separated argument names");
  app.add_option("--store-as", store_as, "construct: name for the result");
  app.add_option("--target", target, "search: structure kind");
  app.add_option("--algebra", algebra, "search: algebra name");
  app.add_option("--semigroup", semigroup, "search: semigroup name");
  app.add_option("--coeffs", coeffs_csv, "search: comma-separated coefficients");
  app.add_option("--max-results", max_results, "search: result cap");
  app.add_option("--bimodule", bimodule, "search: bimodule name (o_operator/derivation)");
  app.add_option("--lambda", lambda, "search: weight for weighted_rb");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  famalg_workspace* ws = nullptr;
  famalg_status st = famalg_workspace_open(workspace_path.c_str(), &ws);
  if (st != FAMALG_OK) return fail_usage(famalg_last_error());

  Json request;
  if (!cmd.empty()) {
    request["cmd"] = cmd;
    if (cmd == "validate" || cmd == "deform") {
      if (object.empty()) { famalg_workspace_close(ws); return fail_usage("--object required"); }
      request["object"] = object;
      if (cmd == "deform" && app.count("--order") > 0) request["order"] = order;
    } else if (cmd == "cohomology") {
      if (object.empty()) { famalg_workspace_close(ws); return fail_usage("--object required"); }
      request["object"] = object;
      request["n_max"] = n_max;
      request["seed"] = seed;
    } else if (cmd == "construct") {
      if (recipe.empty() || store_as.empty()) {
        famalg_workspace_close(ws);
        return fail_usage("--recipe and --store-as required");
      }
      request["recipe"] = recipe;
      request["store_as"] = store_as;
      if (!args_csv.empty()) request["args"] = split_commas(args_csv);
    } else if (cmd == "search") {
      if (target.empty() || algebra.empty() || semigroup.empty() || coeffs_csv.empty()) {
        famalg_workspace_close(ws);
        return fail_usage("--target, --algebra, --semigroup and --coeffs required");
      }
      request["target"] = target;
      request["algebra"] = algebra;
      request["semigroup"] = semigroup;
      request["coeffs"] = split_commas(coeffs_csv);
      request["max_results"] = max_results;
      if (!bimodule.empty()) request["bimodule"] = bimodule;
      if (!lambda.empty()) request["lambda"] = lambda;
    } else {
      famalg_workspace_close(ws);
      return fail_usage("unknown command '" + cmd + "'");
    }
  }

  char* report = nullptr;
  st = cmd.empty() ? famalg_run_all(ws, &report)
                   : famalg_run(ws, request.dump().c_str(), &report);
  if (st != FAMALG_OK) {
    std::string msg = famalg_last_error();
    famalg_workspace_close(ws);
    return fail_usage(msg);
  }

  int exit_code;
  int passed = famalg_report_all_passed(report);
  exit_code = passed == 1 ? 0 : (passed == 0 ? 1 : 2);

  if (out_format == "json") {
    std::fputs(report, stdout);
    std::fputc('\n', stdout);
  } else {
    char* text = nullptr;
    if (famalg_render_text(report, &text) == FAMALG_OK) {
      std::fputs(text, stdout);
      famalg_free_string(text);
    }
  }
  famalg_free_string(report);
  famalg_workspace_close(ws);
  return exit_code;
}
