#include "famalg/semigroup.hpp"

#include <sstream>
#include <stdexcept>

namespace famalg {

std::string ValidationReport::describe() const {
  if (pass) return "pass";
  std::ostringstream os;
  os << "fail: " << rule << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ",";
    os << witness[i];
  }
  os << ")";
  return os.str();
}

FiniteSemigroup FiniteSemigroup::trivial() {
  return {1, {{0}}, 0};
}

FiniteSemigroup FiniteSemigroup::left_zero(std::size_t n) {
  FiniteSemigroup s;
  s.size = n;
  s.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.table[a][b] = a;
  if (n == 1) s.unit = 0;
  return s;
}

FiniteSemigroup FiniteSemigroup::right_zero(std::size_t n) {
  FiniteSemigroup s;
  s.size = n;
  s.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.table[a][b] = b;
  if (n == 1) s.unit = 0;
  return s;
}

FiniteSemigroup FiniteSemigroup::cyclic_group(std::size_t n) {
  FiniteSemigroup s;
  s.size = n;
  s.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.table[a][b] = (a + b) % n;
  s.unit = 0;
  return s;
}

FiniteSemigroup FiniteSemigroup::mult_mod2() {
  FiniteSemigroup s;
  s.size = 2;
  s.table = {{0, 0}, {0, 1}};
  s.unit = 1;
  return s;
}

FiniteSemigroup FiniteSemigroup::with_unit_adjoined(const FiniteSemigroup& s) {
  FiniteSemigroup t;
  t.size = s.size + 1;
  t.table.assign(t.size, std::vector<std::size_t>(t.size));
  for (std::size_t a = 0; a < s.size; ++a)
    for (std::size_t b = 0; b < s.size; ++b) t.table[a][b] = s.table[a][b];
  for (std::size_t a = 0; a < t.size; ++a) {
    t.table[a][s.size] = a;
    t.table[s.size][a] = a;
  }
  t.unit = s.size;
  return t;
}

std::size_t FiniteSemigroup::product(std::size_t a, std::size_t b) const {
  if (a >= size || b >= size) throw std::out_of_range("FiniteSemigroup::product: index out of range");
  return table[a][b];
}

std::size_t FiniteSemigroup::product_all(const std::vector<std::size_t>& elems) const {
  if (elems.empty()) throw std::invalid_argument("FiniteSemigroup::product_all: empty product");
  std::size_t acc = elems[0];
  for (std::size_t i = 1; i < elems.size(); ++i) acc = product(acc, elems[i]);
  return acc;
}

ValidationReport validate_semigroup(FiniteSemigroup& s) {
  if (s.table.size() != s.size) throw std::invalid_argument("semigroup: table has wrong number of rows");
  for (std::size_t a = 0; a < s.size; ++a) {
    if (s.table[a].size() != s.size) throw std::invalid_argument("semigroup: table row has wrong length");
    for (std::size_t b = 0; b < s.size; ++b)
      if (s.table[a][b] >= s.size) throw std::invalid_argument("semigroup: table entry out of range");
  }

  for (std::size_t a = 0; a < s.size; ++a)
    for (std::size_t b = 0; b < s.size; ++b)
      for (std::size_t c = 0; c < s.size; ++c)
        if (s.table[s.table[a][b]][c] != s.table[a][s.table[b][c]])
          return ValidationReport::fail("(ab)c = a(bc)", {a, b, c});

  std::optional<std::size_t> found;
  for (std::size_t e = 0; e < s.size && !found; ++e) {
    bool two_sided = true;
    for (std::size_t a = 0; a < s.size; ++a)
      if (s.table[e][a] != a || s.table[a][e] != a) { two_sided = false; break; }
    if (two_sided) found = e;
  }
  if (s.unit && found != s.unit)
    return ValidationReport::fail("declared unit is not a two-sided identity", {*s.unit});
  s.unit = found;
  return ValidationReport::ok();
}

}  // namespace famalg
