#include "famalg/yang_baxter.hpp"

#include <stdexcept>

namespace famalg {

TensorFamily TensorFamily::zero(const FiniteSemigroup& s, std::size_t dim) {
  TensorFamily f;
  f.semigroup = s;
  f.algebra_dim = dim;
  f.r.assign(s.size, Matrix(dim, dim));
  return f;
}

TensorFamily TensorFamily::constant(const FiniteSemigroup& s, const Matrix& r0) {
  TensorFamily f;
  f.semigroup = s;
  f.algebra_dim = r0.rows();
  f.r.assign(s.size, r0);
  return f;
}

void TensorFamily::check_shapes() const {
  if (r.size() != semigroup.size)
    throw std::invalid_argument("tensor family: one coefficient matrix per semigroup element");
  for (const auto& m : r)
    if (m.rows() != algebra_dim || m.cols() != algebra_dim)
      throw std::invalid_argument("tensor family: coefficient matrix shape mismatch");
}

namespace {

// Ambient algebra for the triple tensor power: A itself when unital, A with a
// unit adjoined otherwise.
struct Ambient {
  Algebra b;
  Vec one;
};

Ambient ambient_for(const Algebra& a) {
  if (a.unit) return {a, *a.unit};
  Algebra b;
  b.dim = a.dim + 1;
  b.mult = Tensor3(b.dim, b.dim, b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) b.mult.at(i, j, k) = a.mult.at(i, j, k);
  for (std::size_t i = 0; i < b.dim; ++i) {
    b.mult.at(a.dim, i, i) = Rational(1);
    if (i != a.dim) b.mult.at(i, a.dim, i) = Rational(1);
  }
  b.unit = unit_vec(b.dim, a.dim);
  return {std::move(b), unit_vec(b.dim, a.dim)};
}

enum class Leg { r12, r13, r23 };

// r placed on two legs of B (x) B (x) B with the unit on the remaining one.
Tensor3 place(const Matrix& r, Leg leg, const Ambient& amb) {
  const std::size_t d = amb.b.dim, dr = r.rows();
  Tensor3 t(d, d, d);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dr; ++j) {
      if (r.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (amb.one[k].is_zero()) continue;
        Rational c = r.at(i, j) * amb.one[k];
        switch (leg) {
          case Leg::r12: t.at(i, j, k) += c; break;
          case Leg::r13: t.at(i, k, j) += c; break;
          case Leg::r23: t.at(k, i, j) += c; break;
        }
      }
    }
  return t;
}

// Componentwise product (x1 (x) x2 (x) x3)(y1 (x) y2 (x) y3) = x1y1 (x) x2y2 (x) x3y3.
Tensor3 triple_product(const Tensor3& x, const Tensor3& y, const Algebra& b) {
  const std::size_t d = b.dim;
  Tensor3 out(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (x.at(i, j, k).is_zero()) continue;
        for (std::size_t i2 = 0; i2 < d; ++i2)
          for (std::size_t j2 = 0; j2 < d; ++j2)
            for (std::size_t k2 = 0; k2 < d; ++k2) {
              if (y.at(i2, j2, k2).is_zero()) continue;
              Rational c = x.at(i, j, k) * y.at(i2, j2, k2);
              for (std::size_t p = 0; p < d; ++p) {
                if (b.mult.at(i, i2, p).is_zero()) continue;
                for (std::size_t q = 0; q < d; ++q) {
                  if (b.mult.at(j, j2, q).is_zero()) continue;
                  for (std::size_t s = 0; s < d; ++s) {
                    if (b.mult.at(k, k2, s).is_zero()) continue;
                    out.at(p, q, s) +=
                        c * b.mult.at(i, i2, p) * b.mult.at(j, j2, q) * b.mult.at(k, k2, s);
                  }
                }
              }
            }
      }
  return out;
}

}  // namespace

ValidationReport check_aybf_type1(const TensorFamily& rf, const Algebra& a) {
  rf.check_shapes();
  if (rf.algebra_dim != a.dim) throw std::invalid_argument("check_aybf_type1: dim mismatch");
  Ambient amb = ambient_for(a);
  const auto& s = rf.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      Tensor3 r12_a = place(rf.r[al], Leg::r12, amb);
      Tensor3 r13_ab = place(rf.r[ab], Leg::r13, amb);
      Tensor3 r23_b = place(rf.r[be], Leg::r23, amb);
      Tensor3 lhs = triple_product(r13_ab, r12_a, amb.b) - triple_product(r12_a, r23_b, amb.b) +
                    triple_product(r23_b, r13_ab, amb.b);
      if (!lhs.is_zero())
        return ValidationReport::fail("r13_ab r12_a - r12_a r23_b + r23_b r13_ab = 0", {al, be});
    }
  return ValidationReport::ok();
}

ValidationReport check_aybf_type2(const TensorFamily& rf, const Algebra& a) {
  rf.check_shapes();
  if (rf.algebra_dim != a.dim) throw std::invalid_argument("check_aybf_type2: dim mismatch");
  Ambient amb = ambient_for(a);
  const auto& s = rf.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      Tensor3 r13_a = place(rf.r[al], Leg::r13, amb);
      Tensor3 r12_b = place(rf.r[be], Leg::r12, amb);
      Tensor3 r12_ab = place(rf.r[ab], Leg::r12, amb);
      Tensor3 r23_a = place(rf.r[al], Leg::r23, amb);
      Tensor3 r23_b = place(rf.r[be], Leg::r23, amb);
      Tensor3 r13_ab = place(rf.r[ab], Leg::r13, amb);
      Tensor3 lhs = triple_product(r13_a, r12_b, amb.b) - triple_product(r12_ab, r23_a, amb.b) +
                    triple_product(r23_b, r13_ab, amb.b);
      if (!lhs.is_zero())
        return ValidationReport::fail("r13_a r12_b - r12_ab r23_a + r23_b r13_ab = 0", {al, be});
    }
  return ValidationReport::ok();
}

bool is_skew_symmetric(const TensorFamily& rf) {
  rf.check_shapes();
  for (const auto& m : rf.r)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != -m.at(j, i)) return false;
  return true;
}

OperatorFamily rb_family_from_aybf1(const TensorFamily& rf, const Algebra& a) {
  if (auto rep = check_aybf_type1(rf, a); !rep)
    throw std::invalid_argument("rb_family_from_aybf1: invalid type-I family: " + rep.describe());

  OperatorFamily out;
  out.semigroup = rf.semigroup;
  out.domain_dim = a.dim;
  out.codomain_dim = a.dim;
  for (const auto& r : rf.r) {
    Matrix m(a.dim, a.dim);
    for (std::size_t l = 0; l < a.dim; ++l) {
      Vec img(a.dim);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
          if (r.at(i, j).is_zero()) continue;
          Vec term = a.product(a.product(unit_vec(a.dim, i), unit_vec(a.dim, l)),
                               unit_vec(a.dim, j));
          img = img + r.at(i, j) * term;
        }
      m.set_col(l, img);
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

OperatorFamily o_family_from_aybf2(const TensorFamily& rf, const Algebra& a) {
  if (!is_skew_symmetric(rf))
    throw std::invalid_argument("o_family_from_aybf2: family is not skew-symmetric");
  if (auto rep = check_aybf_type2(rf, a); !rep)
    throw std::invalid_argument("o_family_from_aybf2: invalid type-II family: " + rep.describe());

  // T_alpha(f_j) = sum_i r[i][j] e_i: the coefficient matrix itself.
  OperatorFamily out;
  out.semigroup = rf.semigroup;
  out.domain_dim = a.dim;
  out.codomain_dim = a.dim;
  out.maps = rf.r;
  return out;
}

}  // namespace famalg
