#include "famalg/algebra.hpp"

#include <stdexcept>

namespace famalg {

Algebra Algebra::zero(std::size_t dim) {
  Algebra a;
  a.dim = dim;
  a.mult = Tensor3(dim, dim, dim);
  return a;
}

Algebra Algebra::ground_field() {
  Algebra a;
  a.dim = 1;
  a.mult = Tensor3(1, 1, 1);
  a.mult.at(0, 0, 0) = Rational(1);
  a.unit = Vec{Rational(1)};
  return a;
}

Algebra Algebra::truncated_polynomials(std::size_t deg) {
  // basis 1, x, ..., x^{deg-1}; x^i . x^j = x^{i+j} or 0
  Algebra a;
  a.dim = deg;
  a.mult = Tensor3(deg, deg, deg);
  for (std::size_t i = 0; i < deg; ++i)
    for (std::size_t j = 0; j < deg; ++j)
      if (i + j < deg) a.mult.at(i, j, i + j) = Rational(1);
  a.unit = unit_vec(deg, 0);
  return a;
}

Cocycle2 Cocycle2::zero(std::size_t algebra_dim, std::size_t module_dim) {
  Cocycle2 h;
  h.algebra_dim = algebra_dim;
  h.module_dim = module_dim;
  h.h = Tensor3(algebra_dim, algebra_dim, module_dim);
  return h;
}

Cocycle2 Cocycle2::multiplication(const Algebra& a) {
  Cocycle2 h;
  h.algebra_dim = a.dim;
  h.module_dim = a.dim;
  h.h = a.mult;
  return h;
}

ValidationReport validate_algebra(const Algebra& a) {
  if (a.mult.dim1() != a.dim || a.mult.dim2() != a.dim || a.mult.dim3() != a.dim)
    throw std::invalid_argument("algebra: mult tensor shape mismatch");
  if (a.unit && a.unit->size() != a.dim)
    throw std::invalid_argument("algebra: unit vector length mismatch");

  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t l = 0; l < a.dim; ++l) {
        Vec lhs = a.product(a.product(unit_vec(a.dim, i), unit_vec(a.dim, j)), unit_vec(a.dim, l));
        Vec rhs = a.product(unit_vec(a.dim, i), a.product(unit_vec(a.dim, j), unit_vec(a.dim, l)));
        if (lhs != rhs) return ValidationReport::fail("(ab)c = a(bc)", {i, j, l});
      }

  if (a.unit) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      Vec e = unit_vec(a.dim, i);
      if (a.product(*a.unit, e) != e || a.product(e, *a.unit) != e)
        return ValidationReport::fail("unit is a two-sided identity", {i});
    }
  }
  return ValidationReport::ok();
}

ValidationReport validate_bimodule(const Algebra& a, const Bimodule& m) {
  if (m.algebra_dim != a.dim) throw std::invalid_argument("bimodule: algebra dim mismatch");
  if (m.left.dim1() != a.dim || m.left.dim2() != m.module_dim || m.left.dim3() != m.module_dim ||
      m.right.dim1() != m.module_dim || m.right.dim2() != a.dim || m.right.dim3() != m.module_dim)
    throw std::invalid_argument("bimodule: action tensor shape mismatch");

  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t p = 0; p < m.module_dim; ++p) {
        Vec ea = unit_vec(a.dim, i), eb = unit_vec(a.dim, j), u = unit_vec(m.module_dim, p);
        if (m.act_left(a.product(ea, eb), u) != m.act_left(ea, m.act_left(eb, u)))
          return ValidationReport::fail("(ab)u = a(bu)", {i, j, p});
        if (m.act_right(m.act_left(ea, u), eb) != m.act_left(ea, m.act_right(u, eb)))
          return ValidationReport::fail("(au)b = a(ub)", {i, p, j});
        if (m.act_right(m.act_right(u, ea), eb) != m.act_right(u, a.product(ea, eb)))
          return ValidationReport::fail("(ua)b = u(ab)", {p, i, j});
      }
  return ValidationReport::ok();
}

ValidationReport validate_2cocycle(const Algebra& a, const Bimodule& m, const Cocycle2& h) {
  if (h.algebra_dim != a.dim || h.module_dim != m.module_dim)
    throw std::invalid_argument("2-cocycle: dim mismatch");
  if (h.h.dim1() != a.dim || h.h.dim2() != a.dim || h.h.dim3() != m.module_dim)
    throw std::invalid_argument("2-cocycle: tensor shape mismatch");

  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t l = 0; l < a.dim; ++l) {
        Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j), z = unit_vec(a.dim, l);
        Vec v = m.act_left(x, h.eval(y, z)) - h.eval(a.product(x, y), z) +
                h.eval(x, a.product(y, z)) - m.act_right(h.eval(x, y), z);
        if (!is_zero(v))
          return ValidationReport::fail("a.H(b,c) - H(ab,c) + H(a,bc) - H(a,b).c = 0", {i, j, l});
      }
  return ValidationReport::ok();
}

Bimodule adjoint_bimodule(const Algebra& a) {
  Bimodule m;
  m.algebra_dim = a.dim;
  m.module_dim = a.dim;
  m.left = a.mult;
  m.right = a.mult;
  return m;
}

Bimodule coadjoint_bimodule(const Algebra& a) {
  Bimodule m;
  m.algebra_dim = a.dim;
  m.module_dim = a.dim;
  m.left = Tensor3(a.dim, a.dim, a.dim);
  m.right = Tensor3(a.dim, a.dim, a.dim);
  // (e_i . f_p)(e_q) = f_p(e_q . e_i), (f_p . e_i)(e_q) = f_p(e_i . e_q)
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t p = 0; p < a.dim; ++p)
      for (std::size_t q = 0; q < a.dim; ++q) {
        m.left.at(i, p, q) = a.mult.at(q, i, p);
        m.right.at(p, i, q) = a.mult.at(i, q, p);
      }
  return m;
}

Algebra semidirect_product(const Algebra& a, const Bimodule& m, const Cocycle2* h) {
  const std::size_t da = a.dim, dm = m.module_dim, d = da + dm;
  if (h) {
    if (auto rep = validate_2cocycle(a, m, *h); !rep)
      throw std::invalid_argument("semidirect_product: invalid cocycle: " + rep.describe());
  }

  Algebra out;
  out.dim = d;
  out.mult = Tensor3(d, d, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < da; ++k) out.mult.at(i, j, k) = a.mult.at(i, j, k);
      if (h)
        for (std::size_t q = 0; q < dm; ++q) out.mult.at(i, j, da + q) = h->h.at(i, j, q);
    }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t p = 0; p < dm; ++p)
      for (std::size_t q = 0; q < dm; ++q) {
        out.mult.at(i, da + p, da + q) = m.left.at(i, p, q);
        out.mult.at(da + p, i, da + q) = m.right.at(p, i, q);
      }

  if (auto rep = validate_algebra(out); !rep)
    throw std::logic_error("semidirect_product: output not associative: " + rep.describe());
  return out;
}

Algebra extend_by_semigroup(const Algebra& a, const FiniteSemigroup& s) {
  const std::size_t d = a.dim * s.size;
  Algebra out;
  out.dim = d;
  out.mult = Tensor3(d, d, d);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
          for (std::size_t k = 0; k < a.dim; ++k)
            out.mult.at(extended_index(al, i, a.dim), extended_index(be, j, a.dim),
                        extended_index(ab, k, a.dim)) = a.mult.at(i, j, k);
    }
  if (auto rep = validate_algebra(out); !rep)
    throw std::logic_error("extend_by_semigroup: output not associative: " + rep.describe());
  return out;
}

Bimodule extend_bimodule_by_semigroup(const Algebra& a, const Bimodule& m,
                                      const FiniteSemigroup& s) {
  const std::size_t da = a.dim * s.size, dm = m.module_dim * s.size;
  Bimodule out;
  out.algebra_dim = da;
  out.module_dim = dm;
  out.left = Tensor3(da, dm, dm);
  out.right = Tensor3(dm, da, dm);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      std::size_t ba = s.product(be, al);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t p = 0; p < m.module_dim; ++p)
          for (std::size_t q = 0; q < m.module_dim; ++q) {
            out.left.at(extended_index(al, i, a.dim), extended_index(be, p, m.module_dim),
                        extended_index(ab, q, m.module_dim)) = m.left.at(i, p, q);
            // (u (x) beta).(a (x) alpha) lands in beta alpha
            out.right.at(extended_index(be, p, m.module_dim), extended_index(al, i, a.dim),
                         extended_index(ba, q, m.module_dim)) = m.right.at(p, i, q);
          }
    }
  if (auto rep = validate_bimodule(extend_by_semigroup(a, s), out); !rep)
    throw std::logic_error("extend_bimodule_by_semigroup: output fails the axioms: " +
                           rep.describe());
  return out;
}

Cocycle2 cocycle_extension(const Algebra& a, const Bimodule& m, const Cocycle2& h,
                           const FiniteSemigroup& s) {
  const std::size_t da = a.dim * s.size, dm = m.module_dim * s.size;
  Cocycle2 out;
  out.algebra_dim = da;
  out.module_dim = dm;
  out.h = Tensor3(da, da, dm);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
          for (std::size_t q = 0; q < m.module_dim; ++q)
            out.h.at(extended_index(al, i, a.dim), extended_index(be, j, a.dim),
                     extended_index(ab, q, m.module_dim)) = h.h.at(i, j, q);
    }
  if (auto rep = validate_2cocycle(extend_by_semigroup(a, s),
                                   extend_bimodule_by_semigroup(a, m, s), out);
      !rep)
    throw std::logic_error("cocycle_extension: output fails the cocycle identity: " +
                           rep.describe());
  return out;
}

}  // namespace famalg
