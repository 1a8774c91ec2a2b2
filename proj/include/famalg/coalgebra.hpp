#ifndef FAMALG_COALGEBRA_HPP
#define FAMALG_COALGEBRA_HPP

#include <optional>
#include <vector>

#include "famalg/algebra.hpp"
#include "famalg/family_algebras.hpp"
#include "famalg/family_ops.hpp"

namespace famalg {

/// Coassociative coalgebra; comult is the matrix of Delta : C -> C (x) C with
/// row index flat(i,j) = i*dim + j.
struct Coalgebra {
  std::size_t dim = 0;
  Matrix comult;  // dim^2 x dim

  static Coalgebra grouplike();  // 1-dim, Delta(e) = e (x) e
};

/// Cobimodule: coactions Delta_l : N -> C (x) N and Delta_r : N -> N (x) C.
struct Cobimodule {
  std::size_t coalgebra_dim = 0;
  std::size_t module_dim = 0;
  Matrix left_coaction;   // (coalgebra_dim * module_dim) x module_dim
  Matrix right_coaction;  // (module_dim * coalgebra_dim) x module_dim

  static Cobimodule self(const Coalgebra& c);  // Delta_l = Delta_r = Delta
};

/// coHochschild 2-cocycle h : N -> C (x) C.
struct CoCocycle {
  std::size_t coalgebra_dim = 0;
  std::size_t module_dim = 0;
  Matrix h;  // coalgebra_dim^2 x module_dim
};

/// Semigroup-indexed maps S_alpha : C -> N.
struct CoFamily {
  FiniteSemigroup semigroup;
  std::size_t coalgebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<Matrix> maps;  // module_dim x coalgebra_dim

  void check_shapes() const;
};

/// NS-cofamily coalgebra: per-element co-operations and a pair-indexed co-vee,
/// all maps C -> C (x) C.
struct NSCofamily {
  FiniteSemigroup semigroup;
  std::size_t dim = 0;
  std::vector<Matrix> prec;  // Delta_{prec_alpha}
  std::vector<Matrix> succ;  // Delta_{succ_alpha}
  std::vector<Matrix> vee;   // Delta_{vee_{alpha,beta}}, flat pair index

  const Matrix& vee_at(std::size_t alpha, std::size_t beta) const {
    return vee.at(alpha * semigroup.size + beta);
  }
};

ValidationReport validate_coalgebra(const Coalgebra& c);
ValidationReport validate_cobimodule(const Coalgebra& c, const Cobimodule& n);
ValidationReport validate_cococycle(const Coalgebra& c, const Cobimodule& n, const CoCocycle& h);
ValidationReport validate_ns_cofamily(const NSCofamily& n);

/// (S_a (x) S_b) o Delta = ((S_a (x) id) o Delta_l + (id (x) S_b) o Delta_r +
/// (S_a (x) S_b) o h) o S_ab, for all pairs; h may be null.
ValidationReport check_twisted_o_cofamily(const CoFamily& s, const Coalgebra& c,
                                          const Cobimodule& n, const CoCocycle* h = nullptr);

/// Everything transposed under the dual bases: the dual algebra of C, the dual
/// bimodule of N, H = h^T, and the family S_alpha^T, which is a twisted
/// O-operator family. Throws on an invalid cofamily.
struct DualizedCofamily {
  Algebra algebra;            // on C^dual
  Bimodule bimodule;          // on N^dual
  std::optional<Cocycle2> cocycle;
  OperatorFamily family;      // S_alpha^T : N^dual -> C^dual
};
DualizedCofamily dualize_cofamily(const CoFamily& s, const Coalgebra& c, const Cobimodule& n,
                                  const CoCocycle* h = nullptr);

/// Delta_prec = (id (x) S_a) o Delta_r, Delta_succ = (S_a (x) id) o Delta_l,
/// Delta_vee = (S_a (x) S_b) o h (zero when h is absent; the dendriform-cofamily
/// case). Output passes the NS-cofamily validator.
NSCofamily induce_ns_cofamily(const CoFamily& s, const Coalgebra& c, const Cobimodule& n,
                              const CoCocycle* h = nullptr);

/// The transpose bridge in the other direction: a twisted family context as a
/// cofamily context on the dual bases. Feeding the result to dualize_cofamily
/// returns the original context (the double-dual round trip).
struct CofamilyContext {
  Coalgebra coalgebra;
  Cobimodule cobimodule;
  std::optional<CoCocycle> cococycle;
  CoFamily cofamily;
};
CofamilyContext cofamily_from_family_context(const OperatorFamily& t, const Algebra& a,
                                             const Bimodule& m, const Cocycle2* h = nullptr);

/// NS-family on the dual space of an NS-cofamily ((f op g)(x) = (f (x) g)(Delta_op x)).
NSFamily dualize_ns_cofamily(const NSCofamily& n);

/// Kronecker product acting on flattened tensor legs: (a (x) b)(x (x) y) = a(x) (x) b(y).
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace famalg

#endif
