#ifndef FAMALG_ALGEBRA_HPP
#define FAMALG_ALGEBRA_HPP

#include <optional>

#include "famalg/linalg.hpp"
#include "famalg/report.hpp"
#include "famalg/semigroup.hpp"

namespace famalg {

/// Finite-dimensional associative algebra by structure constants:
/// e_i . e_j = sum_k mult(i,j,k) e_k.
struct Algebra {
  std::size_t dim = 0;
  Tensor3 mult;               // dim x dim x dim
  std::optional<Vec> unit;    // two-sided identity, when present

  static Algebra zero(std::size_t dim);
  static Algebra ground_field();                    // 1-dim, e.e = e
  static Algebra truncated_polynomials(std::size_t deg);  // k[x]/(x^deg), basis 1..x^{deg-1}

  Vec product(const Vec& x, const Vec& y) const { return mult.eval(x, y); }
};

/// Bimodule over an algebra: left(i,p,q) gives e_i . m_p, right(p,i,q) gives m_p . e_i.
struct Bimodule {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Tensor3 left;    // algebra_dim x module_dim x module_dim
  Tensor3 right;   // module_dim x algebra_dim x module_dim

  Vec act_left(const Vec& a, const Vec& u) const { return left.eval(a, u); }
  Vec act_right(const Vec& u, const Vec& a) const { return right.eval(u, a); }
};

/// Hochschild 2-cocycle H : A x A -> M, stored as H(e_i, e_j) = sum_q h(i,j,q) m_q.
struct Cocycle2 {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Tensor3 h;  // algebra_dim x algebra_dim x module_dim

  Vec eval(const Vec& a, const Vec& b) const { return h.eval(a, b); }

  static Cocycle2 zero(std::size_t algebra_dim, std::size_t module_dim);
  // The multiplication map as a 2-cocycle with values in the adjoint bimodule.
  static Cocycle2 multiplication(const Algebra& a);
};

ValidationReport validate_algebra(const Algebra& a);
ValidationReport validate_bimodule(const Algebra& a, const Bimodule& m);
// Checks a.H(b,c) - H(ab,c) + H(a,bc) - H(a,b).c = 0 on all basis triples.
ValidationReport validate_2cocycle(const Algebra& a, const Bimodule& m, const Cocycle2& h);

Bimodule adjoint_bimodule(const Algebra& a);
// Dual-space actions (a.f)(b) = f(b.a), (f.a)(b) = f(a.b).
Bimodule coadjoint_bimodule(const Algebra& a);

/// H-twisted semidirect product on A + M:
/// (a,u) * (b,v) = (a.b, a.v + u.b + H(a,b)); H omitted gives the plain semidirect product.
/// The A-coordinates come first. Output is revalidated and mismatch throws.
Algebra semidirect_product(const Algebra& a, const Bimodule& m,
                           const Cocycle2* h = nullptr);

/// Tensor with the semigroup algebra. Basis of A (x) kOmega is e_i (x) alpha at
/// flat index alpha*dim + i (alpha-major), so per-element operator families
/// collapse to block-diagonal maps.
///   (a (x) alpha)(b (x) beta) = a.b (x) alphabeta
Algebra extend_by_semigroup(const Algebra& a, const FiniteSemigroup& s);

/// Bimodule over the extended algebra on M (x) kOmega:
///   (a (x) alpha).(u (x) beta) = a.u (x) alphabeta,  (u (x) beta).(a (x) alpha) = u.a (x) betaalpha.
Bimodule extend_bimodule_by_semigroup(const Algebra& a, const Bimodule& m,
                                      const FiniteSemigroup& s);

/// Extended cocycle on A (x) kOmega with values in M (x) kOmega:
/// (a (x) alpha, b (x) beta) -> H(a,b) (x) alphabeta.
Cocycle2 cocycle_extension(const Algebra& a, const Bimodule& m, const Cocycle2& h,
                           const FiniteSemigroup& s);

inline std::size_t extended_index(std::size_t alpha, std::size_t i, std::size_t dim) {
  return alpha * dim + i;
}

}  // namespace famalg

#endif
