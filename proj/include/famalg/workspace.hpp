#ifndef FAMALG_WORKSPACE_HPP
#define FAMALG_WORKSPACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "famalg/cohomology.hpp"
#include "famalg/coalgebra.hpp"
#include "famalg/deformation.hpp"
#include "famalg/json_io.hpp"
#include "famalg/yang_baxter.hpp"

namespace famalg {

// Stored objects keep the names of the objects they were declared against so
// commands can resolve the full context later.
struct StoredBimodule {
  std::string algebra;
  Bimodule value;
};

struct StoredCocycle {
  std::string algebra;
  std::string bimodule;  // empty means the adjoint bimodule of `algebra`
  Cocycle2 value;
};

struct StoredFamily {
  FamilyKind kind = FamilyKind::o_operator;
  std::string semigroup;
  std::string algebra;
  std::string bimodule;  // empty means adjoint
  std::string cocycle;   // empty means none
  Rational lambda;       // weighted_rb only
  OperatorFamily value;
};

struct StoredTensorFamily {
  std::string semigroup;
  std::string algebra;
  int aybf_type = 1;
  TensorFamily value;
};

struct StoredDendriform {
  std::string semigroup;
  DendriformFamily value;
};

struct StoredTridendriform {
  std::string semigroup;
  TridendriformFamily value;
};

struct StoredNSFamily {
  std::string semigroup;
  NSFamily value;
};

struct StoredOmegaAlgebra {
  std::string semigroup;
  OmegaAssocAlgebra value;
};

struct StoredOmegaBimodule {
  std::string omega_algebra;
  OmegaBimodule value;
};

struct StoredCobimodule {
  std::string coalgebra;
  Cobimodule value;
};

struct StoredCoCocycle {
  std::string coalgebra;
  std::string cobimodule;
  CoCocycle value;
};

struct StoredCoFamily {
  std::string semigroup;
  std::string coalgebra;
  std::string cobimodule;
  std::string cococycle;  // empty means none
  CoFamily value;
};

struct StoredNSCofamily {
  std::string semigroup;
  NSCofamily value;
};

struct StoredFamilyDeformation {
  std::string family;
  TruncatedFamilyDeformation value;
};

struct StoredNSDeformation {
  std::string ns_family;
  TruncatedNSDeformation value;
};

/// A cohomology context declaration; resolved into a ComplexDescriptor on use.
struct StoredContext {
  std::string complex;  // "omega_hoch" | "twooperf" | "nsfam" | "dendfam"
  std::string family;
  std::string ns_family;
  std::string omega_algebra;
  std::string omega_bimodule;  // empty with regular=true means the regular bimodule
  bool regular = false;
};

/// All named objects of one input file plus its embedded command requests.
/// Names are unique across sections. Shapes and references are checked at
/// parse; semantic validity is what the commands report on.
struct Workspace {
  std::map<std::string, FiniteSemigroup> semigroups;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, StoredBimodule> bimodules;
  std::map<std::string, StoredCocycle> cocycles;
  std::map<std::string, StoredFamily> families;
  std::map<std::string, StoredTensorFamily> tensor_families;
  std::map<std::string, StoredDendriform> dendriform;
  std::map<std::string, StoredTridendriform> tridendriform;
  std::map<std::string, StoredNSFamily> ns_families;
  std::map<std::string, StoredOmegaAlgebra> omega_algebras;
  std::map<std::string, StoredOmegaBimodule> omega_bimodules;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, StoredCobimodule> cobimodules;
  std::map<std::string, StoredCoCocycle> cococycles;
  std::map<std::string, StoredCoFamily> cofamilies;
  std::map<std::string, StoredNSCofamily> ns_cofamilies;
  std::map<std::string, StoredFamilyDeformation> deformations;
  std::map<std::string, StoredNSDeformation> ns_deformations;
  std::map<std::string, StoredContext> contexts;
  std::vector<Json> commands;

  bool has_object(const std::string& name) const;

  const FiniteSemigroup& semigroup(const std::string& name) const;
  const Algebra& algebra(const std::string& name) const;
  // resolves the empty name to the adjoint bimodule of `algebra_name`
  Bimodule resolve_bimodule(const std::string& name, const std::string& algebra_name) const;
  const StoredFamily& family(const std::string& name) const;

  /// Family plus its full twisted context (adjoint bimodule filled in, the
  /// Reynolds kinds getting h = -mu). Throws for kinds with no such context.
  TwFamilyContext family_context(const std::string& name) const;
};

Workspace parse_workspace(const Json& doc);
Workspace parse_workspace_text(const std::string& text);
Workspace parse_workspace_file(const std::string& path);

struct CommandOutcome {
  Json report;
  bool pass = true;
};

/// Executes one request, e.g. {"cmd":"validate","object":"T"}. Construct
/// requests mutate the workspace. Unknown names and violated preconditions
/// throw; verdict failures are reported, not thrown.
CommandOutcome run_command(Workspace& w, const Json& request);

/// Runs the workspace's embedded command list; reports collected in order.
CommandOutcome run_all_commands(Workspace& w);

std::string render_report_text(const Json& report);

}  // namespace famalg

#endif
