#ifndef FAMALG_COHOMOLOGY_HPP
#define FAMALG_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "famalg/family_algebras.hpp"
#include "famalg/family_ops.hpp"

namespace famalg {

struct resource_bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Labels R_{m;i,n} and formal sums S_{m;i,n} used to route cochain components
/// through the NS-family coboundary. Domain is [1, m+n-1]; S is either one
/// label of C_n or the full sum over C_n.
struct IndexMaps {
  std::size_t r_label;   // in C_m
  bool s_is_full_sum;    // sum over all of C_n
  std::size_t s_label;   // meaningful when !s_is_full_sum
};
IndexMaps index_maps(std::size_t m, std::size_t i, std::size_t n, std::size_t r);

/// Cochain of the tuple-indexed complexes: degree 0 holds one vector, degree
/// n >= 1 one multilinear map per Omega^n tuple, as a matrix on the
/// tensor-power basis (target_dim x source_dim^n), tuples flattened with the
/// first index major.
struct TupleCochain {
  std::size_t degree = 0;
  Vec value0;
  std::vector<Matrix> maps;
};

/// NS-family cochain of degree n: components labelled by C_n. comps[c] holds
/// the component [c+1]; for c+1 <= n it is a table over Omega^{n-1} (the
/// constrained slot is dropped from the index), the top component [n+1]
/// (present for n >= 2) is a full Omega^n table.
struct NSfamCochain {
  std::size_t degree = 0;
  std::vector<std::vector<Matrix>> comps;

  bool top_component_is_zero() const;
};

struct OmegaHochContext {
  OmegaAssocAlgebra algebra;
  OmegaBimodule bimodule;
};

struct TwFamilyContext {
  OperatorFamily family;
  Algebra algebra;
  Bimodule bimodule;
  std::optional<Cocycle2> cocycle;

  const Cocycle2* h() const { return cocycle ? &*cocycle : nullptr; }
};

enum class ComplexTag { omega_hoch, twooperf, nsfam, dendfam };

/// One of the four cochain complexes plus its validated underlying structures.
struct ComplexDescriptor {
  ComplexTag tag;
  std::optional<OmegaHochContext> omega;
  std::optional<TwFamilyContext> tw;
  std::optional<NSFamily> ns;

  static ComplexDescriptor omega_hoch(OmegaHochContext ctx);
  static ComplexDescriptor twooperf(TwFamilyContext ctx);
  static ComplexDescriptor nsfam(NSFamily n);
  static ComplexDescriptor dendfam(NSFamily n);  // requires vee == 0

  const FiniteSemigroup& semigroup() const;
  /// Lowest degree of the complex: 0 for the tuple complexes over a unital
  /// semigroup, 1 otherwise and for the NS/dendriform complexes.
  std::size_t start_degree() const;
  std::size_t cochain_dim(std::size_t degree) const;
};

/// Coboundary of the Omega-Hochschild complex:
///  degree 0: (du)_a(x) = x ._{a,1} u - u ._{1,a} x (unital semigroup required);
///  degree n: leading left action, alternating merged products, trailing right action.
TupleCochain delta_omega_hoch(const TupleCochain& c, const OmegaAssocAlgebra& o,
                              const OmegaBimodule& b);

/// Coboundary of the twisted-family complex, the full formula with the three
/// H-correction blocks; h may be null (plain O-operator family case).
TupleCochain delta_twooperf(const TupleCochain& c, const OperatorFamily& t, const Algebra& a,
                            const Bimodule& m, const Cocycle2* h);

/// The six-term degree-0 expression per family member,
///   T_a(u).x - T_a(u.x) - T_a(H(T_a u, x)) - x.T_a(u) + T_a(x.u) + T_a(H(x, T_a u)),
/// evaluated for any semigroup; equals the degree-0 coboundary where the
/// complex has one, and the equivalence shift of deformations everywhere.
std::vector<Matrix> twooperf_element_image(const Vec& theta, const OperatorFamily& t,
                                           const Algebra& a, const Bimodule& m, const Cocycle2* h);

/// Coboundary of the NS-family complex, assembled through index_maps plus the
/// separate top-component formula.
NSfamCochain delta_nsfam(const NSfamCochain& c, const NSFamily& n);

/// The restriction to the dendriform subcomplex (vee = 0, top component of the
/// input zero); verifies the output stays in the subcomplex and returns it.
NSfamCochain delta_dendfam(const NSfamCochain& c, const NSFamily& n);

// dispatch through a descriptor
TupleCochain apply_delta(const ComplexDescriptor& ctx, const TupleCochain& c);
NSfamCochain apply_delta(const ComplexDescriptor& ctx, const NSfamCochain& c);

/// The coboundary as a matrix on the canonical cochain bases (elementary
/// tensors over tuple x input multi-index x target vector in fixed
/// lexicographic order): columns are images of the degree-n basis cochains.
Matrix assemble_delta(const ComplexDescriptor& ctx, std::size_t degree,
                      std::size_t entry_budget = 4000000);

struct CohomologyRow {
  std::size_t degree;
  std::size_t dim_cochain;
  std::size_t rank_delta;          // rank of delta_n outgoing from this degree
  std::size_t dim_cocycles;        // dim Z^n
  std::size_t dim_coboundaries;    // dim B^n
  std::size_t dim_cohomology;      // dim H^n
};

/// Dimensions dim H^n = nullity(delta_n) - rank(delta_{n-1}) for n from the
/// complex's start degree to n_max. Throws resource_bound_error when an
/// assembled matrix would exceed entry_budget entries.
std::vector<CohomologyRow> cohomology_dimensions(const ComplexDescriptor& ctx, std::size_t n_max,
                                                 std::size_t entry_budget = 4000000);

/// Applies delta twice to `trials` pseudo-random rational cochains of degree n
/// (deterministic in the seed) and to every basis cochain when the cochain
/// space is small enough; exact-zero verdict.
bool verify_dsquared_zero(const ComplexDescriptor& ctx, std::size_t n, std::size_t trials,
                          std::uint64_t seed);

// random cochains used by verify_dsquared_zero, exposed for tests
TupleCochain random_tuple_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                  std::uint64_t seed);
NSfamCochain random_nsfam_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                  std::uint64_t seed);

// canonical basis enumeration, shared with the deformation module
TupleCochain tuple_basis_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                 std::size_t index);
NSfamCochain nsfam_basis_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                 std::size_t index);
Vec flatten_cochain(const ComplexDescriptor& ctx, const TupleCochain& c);
Vec flatten_cochain(const ComplexDescriptor& ctx, const NSfamCochain& c);

std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace famalg

#endif
