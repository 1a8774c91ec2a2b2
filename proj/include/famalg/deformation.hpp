#ifndef FAMALG_DEFORMATION_HPP
#define FAMALG_DEFORMATION_HPP

#include <optional>
#include <vector>

#include "famalg/cohomology.hpp"
#include "famalg/family_algebras.hpp"
#include "famalg/family_ops.hpp"

namespace famalg {

/// Order-N truncation of a one-parameter family deformation
/// T^t = T^(0) + t T^(1) + ... + t^N T^(N) over a fixed context (A, M, H).
struct TruncatedFamilyDeformation {
  std::size_t order = 0;
  std::vector<OperatorFamily> terms;  // terms[i] = T^(i), size order+1
  Algebra algebra;
  Bimodule bimodule;
  std::optional<Cocycle2> cocycle;

  const Cocycle2* h() const { return cocycle ? &*cocycle : nullptr; }
  static TruncatedFamilyDeformation constant(const OperatorFamily& base, const Algebra& a,
                                             const Bimodule& m, const Cocycle2* h,
                                             std::size_t order);
};

/// Order-N truncation of an NS-family deformation: terms[0] is the base
/// structure, terms[i >= 1] carry the order-i operation tables (NSFamily used
/// as a plain table container there).
struct TruncatedNSDeformation {
  std::size_t order = 0;
  std::vector<NSFamily> terms;

  static TruncatedNSDeformation constant(const NSFamily& base, std::size_t order);
};

/// theta plus the free higher terms of an equivalence: phi^t = id + t(ad_theta)
/// + sum t^i phi_i, psi^t_alpha = id + t(...) + sum t^i psi_i.
struct EquivalenceData {
  Vec theta;
  std::vector<Matrix> phi_higher;  // phi_{2}, phi_{3}, ... (may be shorter than order)
  std::vector<Matrix> psi_higher;  // psi_{2}, psi_{3}, ...
};

struct PerOrderReport {
  std::size_t order;
  ValidationReport report;

  bool all_pass() const { return report.pass; }
};

/// Checks the deformation equations
///   sum_{i+j=n} T^(i)_a(u).T^(j)_b(v) =
///   sum_{i+j=n} T^(i)_ab(T^(j)_a(u).v + u.T^(j)_b(v)) +
///   sum_{i+j+k=n} T^(i)_ab(H(T^(j)_a u, T^(k)_b v))
/// for n = 0..N on all basis pairs; one report per order.
std::vector<PerOrderReport> check_family_deformation(const TruncatedFamilyDeformation& d);

bool deformation_valid_to_order(const std::vector<PerOrderReport>& reports, std::size_t order);

/// T^(1) as a degree-1 cochain of the base family's complex.
TupleCochain infinitesimal_cochain(const TruncatedFamilyDeformation& d);

/// delta_TwOoperf(T^(1)) = 0, exactly. Requires validity to order 1.
bool infinitesimal_cocycle_check(const TruncatedFamilyDeformation& d);

/// Expands the four NS-family axioms in powers of t and checks every
/// coefficient up to the truncation order.
std::vector<PerOrderReport> check_ns_deformation(const TruncatedNSDeformation& d);

/// pi^1 as a degree-2 cochain of the base NS-family's complex.
NSfamCochain ns_infinitesimal_cochain(const TruncatedNSDeformation& d);

/// delta_NSfam(pi^1) = 0, exactly. Requires validity to order 1.
bool ns_infinitesimal_cocycle_check(const TruncatedNSDeformation& d);

/// Transports d through phi^t, psi^t_alpha: returns phi^t o T^t_alpha o
/// (psi^t_alpha)^{-1} truncated at the same order, computed with exact
/// power-series arithmetic. The order-1 terms of input and output differ by
/// exactly delta_TwOoperf(theta).
TruncatedFamilyDeformation apply_equivalence(const TruncatedFamilyDeformation& d,
                                             const EquivalenceData& e);

/// The rigidity step: with theta cobounding T^(1) (verified, throws otherwise),
/// transports d by the theta-equivalence; the result has zero order-1 term.
TruncatedFamilyDeformation trivialization_step(const TruncatedFamilyDeformation& d,
                                               const Vec& theta);

/// Transports an NS deformation through psi^t = id + t psi_1 + ...; the order-1
/// terms differ by exactly delta_NSfam of psi_1.
TruncatedNSDeformation apply_ns_equivalence(const TruncatedNSDeformation& d,
                                            const std::vector<Matrix>& psi_terms);

// exact power-series helpers over square matrices, truncated at t^{N+1}
std::vector<Matrix> series_multiply(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                                    std::size_t order);
std::vector<Matrix> series_inverse(const std::vector<Matrix>& a, std::size_t order);

}  // namespace famalg

#endif
