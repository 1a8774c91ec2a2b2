#ifndef FAMALG_SEMIGROUP_HPP
#define FAMALG_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "famalg/report.hpp"

namespace famalg {

/// Finite semigroup given by its multiplication table. Every indexed family in
/// the kit is indexed over one of these. Possibly non-commutative; the unit, if
/// any, is detected during validation.
struct FiniteSemigroup {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> table;
  std::optional<std::size_t> unit;

  static FiniteSemigroup trivial();                       // one element, unital
  static FiniteSemigroup left_zero(std::size_t n);        // a*b = a, no unit for n >= 2
  static FiniteSemigroup right_zero(std::size_t n);       // a*b = b
  static FiniteSemigroup cyclic_group(std::size_t n);     // a*b = a+b mod n
  static FiniteSemigroup mult_mod2();                     // {0,1} under multiplication
  static FiniteSemigroup with_unit_adjoined(const FiniteSemigroup& s);

  std::size_t product(std::size_t a, std::size_t b) const;
  std::size_t product_all(const std::vector<std::size_t>& elems) const;  // left-to-right
  bool is_unital() const { return unit.has_value(); }
};

/// Checks table shape, entry range, associativity on all triples, and detects a
/// two-sided unit (stored on the semigroup). The declared unit, if present, must
/// be the detected one.
ValidationReport validate_semigroup(FiniteSemigroup& s);

}  // namespace famalg

#endif
