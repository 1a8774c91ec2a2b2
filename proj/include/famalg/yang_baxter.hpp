#ifndef FAMALG_YANG_BAXTER_HPP
#define FAMALG_YANG_BAXTER_HPP

#include "famalg/algebra.hpp"
#include "famalg/family_ops.hpp"
#include "famalg/linalg.hpp"
#include "famalg/report.hpp"
#include "famalg/semigroup.hpp"

namespace famalg {

/// A semigroup-indexed collection of tensors r_alpha in A (x) A, each stored as
/// its coefficient matrix: r_alpha = sum_{ij} r[i][j] e_i (x) e_j.
struct TensorFamily {
  FiniteSemigroup semigroup;
  std::size_t algebra_dim = 0;
  std::vector<Matrix> r;  // r[alpha], algebra_dim x algebra_dim

  static TensorFamily zero(const FiniteSemigroup& s, std::size_t dim);
  static TensorFamily constant(const FiniteSemigroup& s, const Matrix& r0);
  void check_shapes() const;
};

/// r13_ab r12_a - r12_a r23_b + r23_b r13_ab = 0 for all (a,b), evaluated with
/// componentwise multiplication in the triple tensor power. A unit is adjoined
/// (A+ = A + k) whenever the algebra has none.
ValidationReport check_aybf_type1(const TensorFamily& rf, const Algebra& a);

/// r13_a r12_b - r12_ab r23_a + r23_b r13_ab = 0 for all (a,b).
ValidationReport check_aybf_type2(const TensorFamily& rf, const Algebra& a);

/// Each coefficient matrix satisfies r = -r^T.
bool is_skew_symmetric(const TensorFamily& rf);

/// R_alpha(x) = sum_{ij} r[i][j] e_i . x . e_j from a type-I family; the result
/// is a Rota-Baxter family on A. Throws on an invalid input family.
OperatorFamily rb_family_from_aybf1(const TensorFamily& rf, const Algebra& a);

/// T_alpha(f) = f(r2) r1 from a skew-symmetric type-II family: on the dual basis
/// T_alpha(f_j) = sum_i r[i][j] e_i. The result is an O-operator family on the
/// coadjoint bimodule. Throws when the family is not skew or not type-II.
OperatorFamily o_family_from_aybf2(const TensorFamily& rf, const Algebra& a);

}  // namespace famalg

#endif
