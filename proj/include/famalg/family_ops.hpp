#ifndef FAMALG_FAMILY_OPS_HPP
#define FAMALG_FAMILY_OPS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "famalg/algebra.hpp"
#include "famalg/linalg.hpp"
#include "famalg/report.hpp"
#include "famalg/semigroup.hpp"

namespace famalg {

/// A semigroup-indexed collection of linear maps, one matrix per element.
/// Houses Rota-Baxter, O-operator, twisted, Nijenhuis, Reynolds and derivation
/// families; which defining identity applies is decided by the check invoked.
struct OperatorFamily {
  FiniteSemigroup semigroup;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::vector<Matrix> maps;  // maps[alpha], codomain_dim x domain_dim

  static OperatorFamily zero(const FiniteSemigroup& s, std::size_t domain, std::size_t codomain);
  static OperatorFamily constant(const FiniteSemigroup& s, const Matrix& t);
  static OperatorFamily identity(const FiniteSemigroup& s, std::size_t dim);

  const Matrix& map(std::size_t alpha) const { return maps.at(alpha); }
  Vec apply(std::size_t alpha, const Vec& u) const { return maps.at(alpha).apply(u); }
  void check_shapes() const;
};

enum class FamilyKind {
  rota_baxter,
  o_operator,
  twisted_o_operator,
  nijenhuis,
  reynolds,
  derivation,
  weighted_rb,
};

FamilyKind family_kind_from_string(const std::string& s);
std::string to_string(FamilyKind k);

/// T_alpha(u).T_beta(v) = T_alphabeta( T_alpha(u).v + u.T_beta(v) + H(T_alpha u, T_beta v) )
/// on all basis pairs and all (alpha,beta). Pass h = nullptr for the untwisted
/// O-operator family identity; with m the adjoint bimodule this is the
/// (twisted) Rota-Baxter family check.
ValidationReport check_twisted_o_family(const OperatorFamily& t, const Algebra& a,
                                        const Bimodule& m, const Cocycle2* h = nullptr);

/// D_alphabeta(a.b) = D_alpha(a).b + a.D_beta(b), maps A -> M.
ValidationReport check_derivation_family(const OperatorFamily& d, const Algebra& a,
                                         const Bimodule& m);

/// Inverts an invertible derivation family member-wise; the inverses form an
/// O-operator family. Throws naming the offending element on a singular member.
OperatorFamily invert_derivation_family(const OperatorFamily& d, const Algebra& a,
                                        const Bimodule& m);

/// N_alpha(a).N_beta(b) = N_alphabeta( N_alpha(a).b + a.N_beta(b) - N_alphabeta(a.b) ).
ValidationReport check_nijenhuis_family(const OperatorFamily& n, const Algebra& a);

/// Single Nijenhuis operator identity for a square matrix on an algebra.
ValidationReport check_nijenhuis_operator(const Matrix& n, const Algebra& a);

/// Block-diagonal collapse N(a (x) alpha) = N_alpha(a) (x) alpha on A (x) kOmega;
/// the result satisfies the single-operator Nijenhuis identity there.
Matrix collapse_nijenhuis(const OperatorFamily& n, const Algebra& a, const FiniteSemigroup& s);

/// T_alpha(u).S_beta(v) + S_alpha(u).T_beta(v) =
///   T_alphabeta(S_alpha(u).v + u.S_beta(v)) + S_alphabeta(T_alpha(u).v + u.T_beta(v)).
ValidationReport check_compatible_pair(const OperatorFamily& t, const OperatorFamily& s_fam,
                                       const Algebra& a, const Bimodule& m);

enum class InvertWhich { second, first };  // which family of the pair gets inverted

/// N_alpha = T_alpha o S_alpha^{-1} (invert = second) or S_alpha o T_alpha^{-1} (invert = first)
/// from a compatible pair; the result is a Nijenhuis family on A.
OperatorFamily nijenhuis_from_compatible_pair(const OperatorFamily& t, const OperatorFamily& s_fam,
                                              const Algebra& a, const Bimodule& m,
                                              InvertWhich invert = InvertWhich::second);

/// The lift T^_alpha(a,u) = (T_alpha(u), 0) on A + M. Valid input is not
/// required: the lift is a Rota-Baxter (and Nijenhuis) family on the semidirect
/// product exactly when t is an O-operator family.
OperatorFamily lift_to_semidirect(const OperatorFamily& t, const Algebra& a, const Bimodule& m);

/// Block-diagonal collapse T(u (x) alpha) = T_alpha(u) (x) alpha; for a valid
/// family this is a single H^-twisted O-operator on M (x) kOmega. Throws on an
/// invalid family.
Matrix collapse_family(const OperatorFamily& t, const Algebra& a, const Bimodule& m,
                       const Cocycle2* h, const FiniteSemigroup& s);

/// Checks Gr(T_alpha) *_H Gr(T_beta) lies in Gr(T_alphabeta) inside the twisted
/// semidirect product, with graph bases from kernel_basis and membership by rank.
/// Agrees with check_twisted_o_family on every input.
ValidationReport graph_subalgebra_check(const OperatorFamily& t, const Algebra& a,
                                        const Bimodule& m, const Cocycle2* h = nullptr);

/// R_alpha(a).R_beta(b) = R_alphabeta( R_alpha(a).b + a.R_beta(b) - R_alpha(a).R_beta(b) ).
ValidationReport check_reynolds_family(const OperatorFamily& r, const Algebra& a);

/// R_alpha = sum_{n=0}^{nil_bound-1} (-1)^n D_alpha^n for a derivation family
/// with every member nilpotent within nil_bound (verified; throws otherwise).
OperatorFamily reynolds_from_nilpotent_derivation(const OperatorFamily& d, const Algebra& a,
                                                  std::size_t nil_bound);

/// sum_{i<=p} C(i+q,i) + sum_{j<=q} C(p+j,j) - sum_{i<=p} sum_{j<=q} C(i+j,i) == 1,
/// evaluated with exact integers.
bool reynolds_binomial_identity(std::size_t p, std::size_t q);

/// The deformed-product context attached to a Nijenhuis family: the algebra
/// (A (x) kOmega)_N, the bimodule structure on A through the N_alpha, the cocycle
/// (a (x) alpha, b (x) beta) -> -N_alphabeta(a.b), and the family a -> a (x) alpha,
/// which is a twisted O-operator family for that cocycle.
struct NijenhuisTwistedContext {
  Algebra deformed_algebra;   // on A (x) kOmega
  Bimodule bimodule;          // on A, over the deformed algebra
  Cocycle2 cocycle;
  OperatorFamily family;      // a -> a (x) alpha
};

NijenhuisTwistedContext build_nijenhuis_twisted_context(const OperatorFamily& n, const Algebra& a,
                                                        const FiniteSemigroup& s);

}  // namespace famalg

#endif
