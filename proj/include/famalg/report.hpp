#ifndef FAMALG_REPORT_HPP
#define FAMALG_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace famalg {

/// Outcome of a structure check. Checks scan tuples in lexicographic order and
/// stop at the first violation, so the witness is the smallest violated tuple.
struct ValidationReport {
  bool pass = true;
  std::string rule;                   // identity that failed, empty on pass
  std::vector<std::size_t> witness;   // indices of the violated tuple

  static ValidationReport ok() { return {}; }
  static ValidationReport fail(std::string rule, std::vector<std::size_t> witness) {
    return {false, std::move(rule), std::move(witness)};
  }

  explicit operator bool() const { return pass; }
  std::string describe() const;
};

}  // namespace famalg

#endif
