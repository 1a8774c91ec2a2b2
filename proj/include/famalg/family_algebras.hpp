#ifndef FAMALG_FAMILY_ALGEBRAS_HPP
#define FAMALG_FAMILY_ALGEBRAS_HPP

#include <vector>

#include "famalg/algebra.hpp"
#include "famalg/family_ops.hpp"
#include "famalg/linalg.hpp"
#include "famalg/report.hpp"
#include "famalg/semigroup.hpp"

namespace famalg {

/// Dendriform family: per-element splittings prec_alpha, succ_alpha of an
/// associative product, as structure-constant tensors.
struct DendriformFamily {
  FiniteSemigroup semigroup;
  std::size_t dim = 0;
  std::vector<Tensor3> prec;  // prec[alpha]
  std::vector<Tensor3> succ;  // succ[alpha]

  static DendriformFamily zero(const FiniteSemigroup& s, std::size_t dim);
  void check_shapes() const;
};

/// Dendriform family plus one extra associative operation odot.
struct TridendriformFamily {
  FiniteSemigroup semigroup;
  std::size_t dim = 0;
  std::vector<Tensor3> prec;
  std::vector<Tensor3> succ;
  Tensor3 odot;

  void check_shapes() const;
};

/// NS-family algebra: prec/succ per element, vee per ordered pair. The pair
/// table is flat, index alpha*|Omega|+beta.
struct NSFamily {
  FiniteSemigroup semigroup;
  std::size_t dim = 0;
  std::vector<Tensor3> prec;
  std::vector<Tensor3> succ;
  std::vector<Tensor3> vee;  // vee[alpha*|Omega|+beta]

  static NSFamily zero(const FiniteSemigroup& s, std::size_t dim);
  static NSFamily from_dendriform(const DendriformFamily& d);  // vee = 0

  const Tensor3& vee_at(std::size_t alpha, std::size_t beta) const {
    return vee.at(alpha * semigroup.size + beta);
  }
  Tensor3& vee_at(std::size_t alpha, std::size_t beta) {
    return vee.at(alpha * semigroup.size + beta);
  }
  bool vee_is_zero() const;
  void check_shapes() const;
};

/// Single NS-algebra (prec, succ, vee with no index); the collapse target of an
/// NS-family on the tensor product with the semigroup algebra.
struct NSAlgebra {
  std::size_t dim = 0;
  Tensor3 prec, succ, vee;
};

/// Algebra relative to a semigroup: one product per ordered pair, satisfying
/// (a *_{a,b} b) *_{ab,c} c = a *_{a,bc} (b *_{b,c} c). Flat pair table.
struct OmegaAssocAlgebra {
  FiniteSemigroup semigroup;
  std::size_t dim = 0;
  std::vector<Tensor3> mult;  // mult[alpha*|Omega|+beta]

  const Tensor3& mult_at(std::size_t alpha, std::size_t beta) const {
    return mult.at(alpha * semigroup.size + beta);
  }
  Tensor3& mult_at(std::size_t alpha, std::size_t beta) {
    return mult.at(alpha * semigroup.size + beta);
  }
  Vec product(std::size_t alpha, std::size_t beta, const Vec& x, const Vec& y) const {
    return mult_at(alpha, beta).eval(x, y);
  }
  void check_shapes() const;
};

/// Bimodule over an Omega-associative algebra: pair-indexed left and right
/// actions subject to the three mixed associativity axioms.
struct OmegaBimodule {
  FiniteSemigroup semigroup;
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<Tensor3> left;   // left[pair]: algebra_dim x module_dim x module_dim
  std::vector<Tensor3> right;  // right[pair]: module_dim x algebra_dim x module_dim

  const Tensor3& left_at(std::size_t alpha, std::size_t beta) const {
    return left.at(alpha * semigroup.size + beta);
  }
  const Tensor3& right_at(std::size_t alpha, std::size_t beta) const {
    return right.at(alpha * semigroup.size + beta);
  }
  Vec act_left(std::size_t alpha, std::size_t beta, const Vec& a, const Vec& u) const {
    return left_at(alpha, beta).eval(a, u);
  }
  Vec act_right(std::size_t alpha, std::size_t beta, const Vec& u, const Vec& a) const {
    return right_at(alpha, beta).eval(u, a);
  }
  /// The algebra acting on itself through its own products.
  static OmegaBimodule regular(const OmegaAssocAlgebra& o);
  void check_shapes() const;
};

ValidationReport validate_dendriform_family(const DendriformFamily& d);
ValidationReport validate_tridendriform_family(const TridendriformFamily& t);
ValidationReport validate_ns_family(const NSFamily& n);
ValidationReport validate_ns_algebra(const NSAlgebra& n);
ValidationReport validate_omega_associative(const OmegaAssocAlgebra& o);
ValidationReport validate_omega_bimodule(const OmegaAssocAlgebra& o, const OmegaBimodule& m);

/// R_alpha(a).R_beta(b) = R_alphabeta( R_alpha(a).b + a.R_beta(b) + lambda a.b ).
ValidationReport check_weighted_rb_family(const OperatorFamily& r, const Algebra& a,
                                          const Rational& lambda);

/// u prec_alpha v = u.T_alpha(v), u succ_alpha v = T_alpha(u).v on M, for an
/// O-operator family. Throws on an invalid family.
DendriformFamily dendriform_from_o_family(const OperatorFamily& t, const Algebra& a,
                                          const Bimodule& m);

/// One dispatch for the four NS-family constructions; each source is validated
/// by its own check first.
struct NsSource {
  enum class Kind { twisted_o, nijenhuis, tridendriform, weighted_rb } kind;
  const OperatorFamily* family = nullptr;
  const Algebra* algebra = nullptr;
  const Bimodule* bimodule = nullptr;
  const Cocycle2* cocycle = nullptr;  // may be null in twisted_o (gives vee = 0)
  const TridendriformFamily* trid = nullptr;
  Rational lambda;

  static NsSource twisted_o(const OperatorFamily& t, const Algebra& a, const Bimodule& m,
                            const Cocycle2* h);
  static NsSource nijenhuis(const OperatorFamily& n, const Algebra& a);
  static NsSource tridendriform(const TridendriformFamily& t);
  static NsSource weighted_rb(const OperatorFamily& r, const Algebra& a, const Rational& lambda);
};

NSFamily induce_ns_family(const NsSource& src);

/// (x (x) alpha) prec (y (x) beta) = (x prec_beta y) (x) alphabeta, and likewise
/// succ via alpha, vee via the pair. Uses the alpha-major flat basis.
NSAlgebra ns_family_to_ns_algebra(const NSFamily& n, const FiniteSemigroup& s);

/// x *_{alpha,beta} y = x prec_beta y + x succ_alpha y + x vee_{alpha,beta} y.
OmegaAssocAlgebra total_omega_assoc_from_ns(const NSFamily& n);

/// The pair-indexed actions of M on A attached to a twisted family:
///   u |> a = T_alpha(u).a - T_alphabeta(u.a) - T_alphabeta(H(T_alpha u, a))
///   a <| u = a.T_beta(u) - T_alphabeta(a.u) - T_alphabeta(H(a, T_beta u))
/// Returns the Omega-associative algebra on M together with that bimodule on A.
struct OmegaContext {
  OmegaAssocAlgebra algebra;   // on M
  OmegaBimodule bimodule;      // on A
};
OmegaContext omega_bimodule_from_twisted_family(const OperatorFamily& t, const Algebra& a,
                                                const Bimodule& m, const Cocycle2* h);

// morphism predicates, each reporting the first violated equation
ValidationReport is_algebra_morphism(const Matrix& phi, const Algebra& a1, const Algebra& a2);
ValidationReport is_dendriform_morphism(const Matrix& f, const DendriformFamily& d1,
                                        const DendriformFamily& d2);
ValidationReport is_ns_morphism(const Matrix& f, const NSFamily& n1, const NSFamily& n2);
/// Pair (phi, psi) between (twisted) family contexts: phi an algebra map,
/// psi action-compatible, phi T_alpha = T'_alpha psi, and psi H = H'(phi,phi)
/// when cocycles are present.
ValidationReport is_o_family_morphism(const Matrix& phi, const Matrix& psi,
                                      const OperatorFamily& t1, const Algebra& a1,
                                      const Bimodule& m1, const Cocycle2* h1,
                                      const OperatorFamily& t2, const Algebra& a2,
                                      const Bimodule& m2, const Cocycle2* h2);

/// Morphism transport: a (twisted) family-morphism pair makes psi a morphism
/// of the induced NS-family algebras (dendriform parts when the cocycles are
/// absent). Checks the pair first, then psi against the induced structures.
ValidationReport check_morphism_transport(const Matrix& phi, const Matrix& psi,
                                          const OperatorFamily& t1, const Algebra& a1,
                                          const Bimodule& m1, const Cocycle2* h1,
                                          const OperatorFamily& t2, const Algebra& a2,
                                          const Bimodule& m2, const Cocycle2* h2);

/// The total algebra (D (x) kOmega)_Tot of an NS-family (dendriform when vee = 0),
/// the bimodule structure on D over it, the cocycle x vee_{alpha,beta} y, and the
/// family x -> x (x) alpha, which is a twisted O-operator family for that cocycle.
struct TotContext {
  Algebra tot;                // on D (x) kOmega
  Bimodule bimodule;          // on D
  Cocycle2 cocycle;           // zero for dendriform input
  OperatorFamily id_family;   // x -> x (x) alpha
};
TotContext total_context(const NSFamily& n);

/// Adjoint transport of a family-algebra morphism f : D -> M into the morphism
/// pair (T^f, f) with T^f(x (x) alpha) = T_alpha(f(x)). Verifies that f is a
/// morphism into the induced structure on M, that T^f is an algebra map on the
/// total algebra, and that the pair satisfies the family-morphism equations.
/// Throws naming the first violated equation otherwise.
struct MorphismPair {
  Matrix phi;
  Matrix psi;
};
MorphismPair adjunction_transport(const NSFamily& d, const OperatorFamily& t, const Algebra& a,
                                  const Bimodule& m, const Cocycle2* h, const Matrix& f);

}  // namespace famalg

#endif
