#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "famalg/workspace.hpp"

using namespace famalg;

namespace {

const char* kMinimal = R"({
  "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0}}
})";

const char* kSmall = R"({
  "semigroups": {
    "t": {"size": 1, "table": [[0]], "unit": 0},
    "lz2": {"size": 2, "table": [[0,0],[1,1]]}
  },
  "algebras": {
    "ground": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]},
    "u2": {"dim": 2, "mult": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]], "unit": ["1","0"]}
  },
  "families": {
    "rb": {"kind": "rota_baxter", "semigroup": "lz2", "algebra": "u2",
           "maps": {"0": [["0","0"],["1","0"]], "1": [["0","0"],["1","0"]]}},
    "bad": {"kind": "rota_baxter", "semigroup": "t", "algebra": "ground",
            "maps": {"0": [["1"]]}}
  }
})";

}  // namespace

TEST_CASE("minimal workspace parses") {
  Workspace w = parse_workspace_text(kMinimal);
  CHECK(w.semigroups.size() == 1);
  CHECK(w.has_object("t"));
}

TEST_CASE("parse errors name the offending key path") {
  // dangling reference
  const char* dangling = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]]}},
    "families": {"f": {"kind": "rota_baxter", "semigroup": "t", "algebra": "nope",
                       "maps": {"0": [["0"]]}}}
  })";
  try {
    parse_workspace_text(dangling);
    FAIL("expected a parse error");
  } catch (const workspace_parse_error& e) {
    CHECK(e.key_path == "families.f.algebra");
    CHECK(std::string(e.what()).find("nope") != std::string::npos);
  }

  // malformed rational
  const char* badq = R"({
    "algebras": {"a": {"dim": 1, "mult": [[["x"]]]}}
  })";
  CHECK_THROWS_AS(parse_workspace_text(badq), workspace_parse_error);

  // shape mismatch in a family table
  const char* badshape = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]]}},
    "algebras": {"a": {"dim": 1, "mult": [[["0"]]]}},
    "families": {"f": {"kind": "rota_baxter", "semigroup": "t", "algebra": "a",
                       "maps": {"0": [["0", "0"]]}}}
  })";
  CHECK_THROWS_AS(parse_workspace_text(badshape), workspace_parse_error);

  // non-associative semigroups are rejected outright
  const char* badsg = R"({"semigroups": {"s": {"size": 2, "table": [[1,0],[0,0]]}}})";
  CHECK_THROWS_AS(parse_workspace_text(badsg), workspace_parse_error);

  CHECK_THROWS_AS(parse_workspace_text("not json"), workspace_parse_error);
}

TEST_CASE("duplicate names across sections are rejected") {
  const char* dup = R"({
    "semigroups": {"x": {"size": 1, "table": [[0]]}},
    "algebras": {"x": {"dim": 1, "mult": [[["0"]]]}}
  })";
  CHECK_THROWS_AS(parse_workspace_text(dup), workspace_parse_error);
}

TEST_CASE("validate command reports witnesses") {
  Workspace w = parse_workspace_text(kSmall);

  Json ok = Json::object({{"cmd", "validate"}, {"object", "rb"}});
  CommandOutcome res = run_command(w, ok);
  CHECK(res.pass);
  CHECK(res.report["verdicts"][0]["pass"].get<bool>());

  Json bad = Json::object({{"cmd", "validate"}, {"object", "bad"}});
  CommandOutcome fail = run_command(w, bad);
  CHECK_FALSE(fail.pass);
  const auto& verdict = fail.report["verdicts"][0];
  CHECK_FALSE(verdict["pass"].get<bool>());
  CHECK(verdict["witness"] == Json::array({0, 0, 0, 0}));

  CHECK_THROWS_AS(run_command(w, Json::object({{"cmd", "validate"}, {"object", "zzz"}})),
                  std::invalid_argument);
}

TEST_CASE("construct stores revalidated objects and rejects name clashes") {
  Workspace w = parse_workspace_text(kSmall);
  Json req = Json::object({{"cmd", "construct"},
                           {"recipe", "dendriform-from-family"},
                           {"args", Json::array({"rb"})},
                           {"store_as", "dend"}});
  CommandOutcome res = run_command(w, req);
  CHECK(res.pass);
  CHECK(w.dendriform.count("dend") == 1);
  CHECK_THROWS_AS(run_command(w, req), std::invalid_argument);  // name already used

  // a failed precondition surfaces as an exception, not a stored object
  Json bad = Json::object({{"cmd", "construct"},
                           {"recipe", "dendriform-from-family"},
                           {"args", Json::array({"bad"})},
                           {"store_as", "nope"}});
  CHECK_THROWS_AS(run_command(w, bad), std::invalid_argument);
  CHECK_FALSE(w.has_object("nope"));

  // chained constructions: induce-ns on the freshly made Nijenhuis family
  Json nij = Json::object({{"cmd", "construct"},
                           {"recipe", "induce-ns"},
                           {"args", Json::array({"rb"})},
                           {"store_as", "ns"}});
  // rota_baxter kind goes through the twisted route with h = 0
  CHECK(run_command(w, nij).pass);
  CHECK(w.ns_families.count("ns") == 1);
  CHECK(run_command(w, Json::object({{"cmd", "validate"}, {"object", "ns"}})).pass);
}

TEST_CASE("cohomology command emits the table and the dsquared verdict") {
  Workspace w = parse_workspace_text(kSmall);
  Json req = Json::object({{"cmd", "cohomology"}, {"object", "rb"}, {"n_max", 1}, {"seed", 3}});
  CommandOutcome res = run_command(w, req);
  CHECK(res.pass);
  REQUIRE(res.report.contains("table"));
  // lz2 has no unit: the complex starts at degree 1
  CHECK(res.report["table"][0]["degree"] == 1);
  for (const auto& row : res.report["table"]) {
    std::size_t dim = row["dim_cochain"].get<std::size_t>();
    CHECK(row["rank_delta"].get<std::size_t>() + row["dim_cocycles"].get<std::size_t>() == dim);
  }
  CHECK(res.report["verdicts"][0]["pass"].get<bool>());
}

TEST_CASE("search: hits agree with the checker and honour determinism") {
  Workspace w = parse_workspace_text(kSmall);
  Json req = Json::object({{"cmd", "search"},
                           {"target", "rota_baxter"},
                           {"algebra", "ground"},
                           {"semigroup", "t"},
                           {"coeffs", Json::array({"0", "1"})},
                           {"max_results", 8}});
  CommandOutcome res = run_command(w, req);
  CHECK(res.pass);
  // on e.e = e with coefficients {0,1} only the zero family survives
  CHECK(res.report["hit_count"].get<std::size_t>() == 1);
  CHECK(res.report["candidates_checked"].get<std::size_t>() == 2);

  // byte-identical reports for identical input
  Workspace w2 = parse_workspace_text(kSmall);
  CommandOutcome res2 = run_command(w2, req);
  CHECK(res.report.dump() == res2.report.dump());

  // the zero-multiplication case: every candidate passes
  const char* zero_ws = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]]}},
    "algebras": {"z": {"dim": 1, "mult": [[["0"]]]}}
  })";
  Workspace wz = parse_workspace_text(zero_ws);
  Json zreq = Json::object({{"cmd", "search"},
                            {"target", "rota_baxter"},
                            {"algebra", "z"},
                            {"semigroup", "t"},
                            {"coeffs", Json::array({"0", "1"})},
                            {"max_results", 8}});
  CommandOutcome zres = run_command(wz, zreq);
  CHECK(zres.report["hit_count"].get<std::size_t>() == 2);

  // the search-space bound raises the resource error
  Json big = zreq;
  big["bound"] = 1;
  CHECK_THROWS_AS(run_command(wz, big), resource_bound_error);
}

TEST_CASE("deform command checks orders and the infinitesimal") {
  const char* ws = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0}},
    "algebras": {"u2": {"dim": 2, "mult": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
                        "unit": ["1","0"]}},
    "families": {"rb": {"kind": "rota_baxter", "semigroup": "t", "algebra": "u2",
                        "maps": {"0": [["0","0"],["1","0"]]}}},
    "deformations": {
      "const": {"family": "rb", "order": 1,
                "terms": [{"0": [["0","0"],["1","0"]]}, {"0": [["0","0"],["0","0"]]}]},
      "bad1": {"family": "rb", "order": 1,
               "terms": [{"0": [["0","0"],["1","0"]]}, {"0": [["1","0"],["0","1"]]}]}
    }
  })";
  Workspace w = parse_workspace_text(ws);
  CommandOutcome ok = run_command(w, Json::object({{"cmd", "deform"}, {"object", "const"}}));
  CHECK(ok.pass);
  CommandOutcome bad = run_command(w, Json::object({{"cmd", "deform"}, {"object", "bad1"}}));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("deformation terms must extend the named base family") {
  const char* ws = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0}},
    "algebras": {"g": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]}},
    "families": {"z": {"kind": "rota_baxter", "semigroup": "t", "algebra": "g",
                       "maps": {"0": [["0"]]}}},
    "deformations": {"d": {"family": "z", "order": 0, "terms": [{"0": [["1"]]}]}}
  })";
  CHECK_THROWS_AS(parse_workspace_text(ws), workspace_parse_error);
}

TEST_CASE("run_all_commands aggregates embedded requests deterministically") {
  const char* ws = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0}},
    "algebras": {"g": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]}},
    "families": {"z": {"kind": "rota_baxter", "semigroup": "t", "algebra": "g",
                       "maps": {"0": [["0"]]}}},
    "commands": [
      {"cmd": "validate", "object": "g"},
      {"cmd": "validate", "object": "z"},
      {"cmd": "search", "target": "rota_baxter", "algebra": "g", "semigroup": "t",
       "coeffs": ["0", "1"], "max_results": 2}
    ]
  })";
  Workspace w1 = parse_workspace_text(ws);
  Workspace w2 = parse_workspace_text(ws);
  CommandOutcome r1 = run_all_commands(w1);
  CommandOutcome r2 = run_all_commands(w2);
  CHECK(r1.pass);
  REQUIRE(r1.report.is_array());
  CHECK(r1.report.size() == 3);
  CHECK(r1.report.dump() == r2.report.dump());

  std::string text = render_report_text(r1.report);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("every construct recipe dispatches and revalidates") {
  const char* ws = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0},
                   "lz2": {"size": 2, "table": [[0,0],[1,1]]}},
    "algebras": {
      "u2": {"dim": 2, "mult": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]], "unit": ["1","0"]},
      "n2": {"dim": 2, "mult": [[["0","1"],["0","0"]],[["0","0"],["0","0"]]]},
      "z2": {"dim": 2, "mult": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}
    },
    "cocycles": {"mu": {"algebra": "u2", "h": "multiplication"}},
    "families": {
      "rb": {"kind": "rota_baxter", "semigroup": "lz2", "algebra": "u2",
             "maps": {"0": [["0","0"],["1","0"]], "1": [["0","0"],["1","0"]]}},
      "nij": {"kind": "nijenhuis", "semigroup": "lz2", "algebra": "u2",
              "maps": {"0": [["0","0"],["1","0"]], "1": [["0","0"],["1","0"]]}},
      "der": {"kind": "derivation", "semigroup": "t", "algebra": "n2",
              "maps": {"0": [["0","0"],["1","0"]]}},
      "der_inv": {"kind": "derivation", "semigroup": "lz2", "algebra": "z2",
                  "maps": {"0": [["1","0"],["0","1"]], "1": [["1","1"],["0","1"]]}},
      "tz": {"kind": "o_operator", "semigroup": "lz2", "algebra": "z2",
             "maps": {"0": [["1","0"],["0","1"]], "1": [["2","0"],["0","2"]]}}
    },
    "tensor_families": {
      "xx": {"semigroup": "lz2", "algebra": "u2", "type": 1,
             "r": {"0": [["0","0"],["0","1"]], "1": [["0","0"],["0","1"]]}},
      "skew": {"semigroup": "t", "algebra": "z2", "type": 2,
               "r": {"0": [["0","1"],["-1","0"]]}}
    }
  })";
  Workspace w = parse_workspace_text(ws);
  auto construct = [&](const std::string& recipe, std::vector<std::string> args,
                       const std::string& name) {
    Json a = Json::array();
    for (auto& x : args) a.push_back(x);
    Json req = Json::object(
        {{"cmd", "construct"}, {"recipe", recipe}, {"args", a}, {"store_as", name}});
    CHECK_MESSAGE(run_command(w, req).pass, recipe);
  };

  construct("adjoint-bimodule", {"u2"}, "u2_adj");
  construct("coadjoint-bimodule", {"u2"}, "u2_co");
  construct("semidirect", {"u2", "u2_adj"}, "sd");
  construct("semidirect", {"u2", "u2_adj", "mu"}, "sd_tw");
  construct("extend-by-semigroup", {"u2", "lz2"}, "ext");
  construct("extend-by-semigroup", {"u2", "u2_adj", "lz2"}, "ext2");
  construct("cocycle-extension", {"mu", "lz2"}, "mu_ext");
  construct("invert-derivation", {"der_inv"}, "t_inv");
  construct("reynolds-from-derivation", {"der", "3"}, "rey");
  construct("nijenhuis-from-pair", {"tz", "der_inv"}, "nij2");
  construct("lift-to-semidirect", {"rb"}, "rb_hat");
  construct("collapse-family", {"rb"}, "rb_single");
  construct("collapse-nijenhuis", {"nij"}, "nij_single");
  construct("dendriform-from-family", {"rb"}, "dend");
  construct("induce-ns", {"nij"}, "ns_nij");
  construct("induce-ns", {"rb"}, "ns_rb");
  construct("ns-to-ns-algebra", {"ns_nij"}, "ns_alg");
  construct("total-omega", {"ns_nij"}, "omega");
  construct("omega-from-family", {"rb"}, "omega_rb");
  construct("rb-from-aybf1", {"xx"}, "rb_xx");
  construct("o-from-aybf2", {"skew"}, "o_skew");
  construct("build-nijenhuis-context", {"nij"}, "nij_ctx");

  // every stored object validates through the command interface
  for (const char* name :
       {"u2_adj", "u2_co", "sd", "sd_tw", "ext", "ext2.bimodule", "mu_ext", "t_inv", "rey",
        "nij2", "rb_hat", "rb_single", "nij_single", "dend", "ns_nij", "ns_rb", "ns_alg",
        "omega", "omega_rb", "omega_rb.bimodule", "rb_xx", "o_skew", "nij_ctx"})
    CHECK_MESSAGE(
        run_command(w, Json::object({{"cmd", "validate"}, {"object", std::string(name)}})).pass,
        name);

  // cohomology on a constructed twisted context and on the T = 0 ground context
  CHECK(run_command(w, Json::object({{"cmd", "cohomology"}, {"object", "nij_ctx"}, {"n_max", 1}}))
            .pass);
  const char* ground = R"({
    "semigroups": {"t": {"size": 1, "table": [[0]], "unit": 0}},
    "algebras": {"g": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]}},
    "families": {"z": {"kind": "rota_baxter", "semigroup": "t", "algebra": "g",
                       "maps": {"0": [["0"]]}}}
  })";
  Workspace gw = parse_workspace_text(ground);
  CommandOutcome res =
      run_command(gw, Json::object({{"cmd", "cohomology"}, {"object", "z"}, {"n_max", 3}}));
  CHECK(res.pass);
  for (const auto& row : res.report["table"])
    CHECK(row["dim_cohomology"].get<std::size_t>() == 1);
}

TEST_CASE("round trip through serialization helpers") {
  // serialize a tensor and matrix and read them back
  Tensor3 t(2, 2, 2);
  t.at(0, 1, 1) = Rational(3, 4);
  t.at(1, 0, 0) = Rational(-2);
  Json tj = tensor_to_json(t);
  CHECK(tensor_from_json(tj, "t") == t);

  Matrix m(2, 3);
  m.at(0, 2) = Rational(5, 7);
  Json mj = matrix_to_json(m);
  CHECK(matrix_from_json(mj, "m") == m);

  CHECK(rational_from_json(Json("-3/9"), "q") == Rational(-1, 3));
  CHECK(rational_from_json(Json(4), "q") == Rational(4));
}
