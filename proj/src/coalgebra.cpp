#include "famalg/coalgebra.hpp"

#include <stdexcept>

namespace famalg {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b.at(p, q).is_zero())
            k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return k;
}

Coalgebra Coalgebra::grouplike() {
  Coalgebra c;
  c.dim = 1;
  c.comult = Matrix(1, 1);
  c.comult.at(0, 0) = Rational(1);
  return c;
}

Cobimodule Cobimodule::self(const Coalgebra& c) {
  Cobimodule n;
  n.coalgebra_dim = c.dim;
  n.module_dim = c.dim;
  n.left_coaction = c.comult;
  n.right_coaction = c.comult;
  return n;
}

void CoFamily::check_shapes() const {
  if (maps.size() != semigroup.size)
    throw std::invalid_argument("cofamily: one map per semigroup element required");
  for (const auto& m : maps)
    if (m.rows() != module_dim || m.cols() != coalgebra_dim)
      throw std::invalid_argument("cofamily: map shape mismatch");
}

ValidationReport validate_coalgebra(const Coalgebra& c) {
  if (c.comult.rows() != c.dim * c.dim || c.comult.cols() != c.dim)
    throw std::invalid_argument("coalgebra: comult shape mismatch");
  Matrix id = Matrix::identity(c.dim);
  Matrix lhs = kron(c.comult, id) * c.comult;
  Matrix rhs = kron(id, c.comult) * c.comult;
  for (std::size_t j = 0; j < c.dim; ++j)
    if (lhs.col(j) != rhs.col(j))
      return ValidationReport::fail("(Delta (x) id) Delta = (id (x) Delta) Delta", {j});
  return ValidationReport::ok();
}

ValidationReport validate_cobimodule(const Coalgebra& c, const Cobimodule& n) {
  if (n.coalgebra_dim != c.dim)
    throw std::invalid_argument("cobimodule: coalgebra dim mismatch");
  if (n.left_coaction.rows() != c.dim * n.module_dim || n.left_coaction.cols() != n.module_dim ||
      n.right_coaction.rows() != n.module_dim * c.dim || n.right_coaction.cols() != n.module_dim)
    throw std::invalid_argument("cobimodule: coaction shape mismatch");

  Matrix idc = Matrix::identity(c.dim);
  Matrix idn = Matrix::identity(n.module_dim);
  {
    Matrix lhs = kron(c.comult, idn) * n.left_coaction;
    Matrix rhs = kron(idc, n.left_coaction) * n.left_coaction;
    for (std::size_t j = 0; j < n.module_dim; ++j)
      if (lhs.col(j) != rhs.col(j))
        return ValidationReport::fail("(Delta (x) id) Delta_l = (id (x) Delta_l) Delta_l", {j});
  }
  {
    Matrix lhs = kron(n.left_coaction, idc) * n.right_coaction;
    Matrix rhs = kron(idc, n.right_coaction) * n.left_coaction;
    for (std::size_t j = 0; j < n.module_dim; ++j)
      if (lhs.col(j) != rhs.col(j))
        return ValidationReport::fail("(Delta_l (x) id) Delta_r = (id (x) Delta_r) Delta_l", {j});
  }
  {
    Matrix lhs = kron(n.right_coaction, idc) * n.right_coaction;
    Matrix rhs = kron(idn, c.comult) * n.right_coaction;
    for (std::size_t j = 0; j < n.module_dim; ++j)
      if (lhs.col(j) != rhs.col(j))
        return ValidationReport::fail("(Delta_r (x) id) Delta_r = (id (x) Delta) Delta_r", {j});
  }
  return ValidationReport::ok();
}

ValidationReport validate_cococycle(const Coalgebra& c, const Cobimodule& n, const CoCocycle& h) {
  if (h.coalgebra_dim != c.dim || h.module_dim != n.module_dim)
    throw std::invalid_argument("cococycle: dim mismatch");
  if (h.h.rows() != c.dim * c.dim || h.h.cols() != n.module_dim)
    throw std::invalid_argument("cococycle: matrix shape mismatch");

  Matrix idc = Matrix::identity(c.dim);
  Matrix lhs = kron(idc, h.h) * n.left_coaction;
  lhs -= kron(c.comult, idc) * h.h;
  lhs += kron(idc, c.comult) * h.h;
  lhs -= kron(h.h, idc) * n.right_coaction;
  for (std::size_t j = 0; j < n.module_dim; ++j)
    if (!is_zero(lhs.col(j)))
      return ValidationReport::fail(
          "(id (x) h) Delta_l - (Delta (x) id) h + (id (x) Delta) h - (h (x) id) Delta_r = 0", {j});
  return ValidationReport::ok();
}

ValidationReport check_twisted_o_cofamily(const CoFamily& s, const Coalgebra& c,
                                          const Cobimodule& n, const CoCocycle* h) {
  s.check_shapes();
  if (s.coalgebra_dim != c.dim || s.module_dim != n.module_dim)
    throw std::invalid_argument("check_twisted_o_cofamily: dim mismatch");

  Matrix idn = Matrix::identity(n.module_dim);
  const auto& sg = s.semigroup;
  for (std::size_t al = 0; al < sg.size; ++al)
    for (std::size_t be = 0; be < sg.size; ++be) {
      std::size_t ab = sg.product(al, be);
      Matrix lhs = kron(s.maps[al], s.maps[be]) * c.comult;
      Matrix bracket = kron(s.maps[al], idn) * n.left_coaction +
                       kron(idn, s.maps[be]) * n.right_coaction;
      if (h) bracket += kron(s.maps[al], s.maps[be]) * h->h;
      Matrix rhs = bracket * s.maps[ab];
      if (!(lhs == rhs))
        return ValidationReport::fail(
            "(S_a (x) S_b) Delta = ((S_a (x) id) Delta_l + (id (x) S_b) Delta_r + (S_a (x) S_b) h) S_ab",
            {al, be});
    }
  return ValidationReport::ok();
}

DualizedCofamily dualize_cofamily(const CoFamily& s, const Coalgebra& c, const Cobimodule& n,
                                  const CoCocycle* h) {
  if (auto rep = validate_coalgebra(c); !rep)
    throw std::invalid_argument("dualize_cofamily: invalid coalgebra: " + rep.describe());
  if (auto rep = validate_cobimodule(c, n); !rep)
    throw std::invalid_argument("dualize_cofamily: invalid cobimodule: " + rep.describe());
  if (h) {
    if (auto rep = validate_cococycle(c, n, *h); !rep)
      throw std::invalid_argument("dualize_cofamily: invalid cococycle: " + rep.describe());
  }
  if (auto rep = check_twisted_o_cofamily(s, c, n, h); !rep)
    throw std::invalid_argument("dualize_cofamily: invalid cofamily: " + rep.describe());

  const std::size_t dc = c.dim, dn = n.module_dim;
  DualizedCofamily out;
  out.algebra.dim = dc;
  out.algebra.mult = Tensor3(dc, dc, dc);
  for (std::size_t i = 0; i < dc; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      for (std::size_t k = 0; k < dc; ++k)
        out.algebra.mult.at(i, j, k) = c.comult.at(i * dc + j, k);

  out.bimodule.algebra_dim = dc;
  out.bimodule.module_dim = dn;
  out.bimodule.left = Tensor3(dc, dn, dn);
  out.bimodule.right = Tensor3(dn, dc, dn);
  for (std::size_t q = 0; q < dn; ++q) {
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t p = 0; p < dn; ++p) {
        out.bimodule.left.at(i, p, q) = n.left_coaction.at(i * dn + p, q);
        out.bimodule.right.at(p, i, q) = n.right_coaction.at(p * dc + i, q);
      }
  }

  if (h) {
    Cocycle2 hh;
    hh.algebra_dim = dc;
    hh.module_dim = dn;
    hh.h = Tensor3(dc, dc, dn);
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t j = 0; j < dc; ++j)
        for (std::size_t q = 0; q < dn; ++q) hh.h.at(i, j, q) = h->h.at(i * dc + j, q);
    out.cocycle = std::move(hh);
  }

  out.family.semigroup = s.semigroup;
  out.family.domain_dim = dn;
  out.family.codomain_dim = dc;
  for (const auto& m : s.maps) out.family.maps.push_back(m.transpose());

  if (auto rep = validate_algebra(out.algebra); !rep)
    throw std::logic_error("dualize_cofamily: dual algebra fails: " + rep.describe());
  if (auto rep = validate_bimodule(out.algebra, out.bimodule); !rep)
    throw std::logic_error("dualize_cofamily: dual bimodule fails: " + rep.describe());
  if (out.cocycle) {
    if (auto rep = validate_2cocycle(out.algebra, out.bimodule, *out.cocycle); !rep)
      throw std::logic_error("dualize_cofamily: dual cocycle fails: " + rep.describe());
  }
  if (auto rep = check_twisted_o_family(out.family, out.algebra, out.bimodule,
                                        out.cocycle ? &*out.cocycle : nullptr);
      !rep)
    throw std::logic_error("dualize_cofamily: dual family fails the twisted check: " +
                           rep.describe());
  return out;
}

NSCofamily induce_ns_cofamily(const CoFamily& s, const Coalgebra& c, const Cobimodule& n,
                              const CoCocycle* h) {
  if (auto rep = check_twisted_o_cofamily(s, c, n, h); !rep)
    throw std::invalid_argument("induce_ns_cofamily: invalid cofamily: " + rep.describe());

  const std::size_t dn = n.module_dim;
  Matrix idn = Matrix::identity(dn);
  NSCofamily out;
  out.semigroup = s.semigroup;
  out.dim = dn;
  for (std::size_t al = 0; al < s.semigroup.size; ++al) {
    out.prec.push_back(kron(idn, s.maps[al]) * n.right_coaction);
    out.succ.push_back(kron(s.maps[al], idn) * n.left_coaction);
  }
  for (std::size_t al = 0; al < s.semigroup.size; ++al)
    for (std::size_t be = 0; be < s.semigroup.size; ++be) {
      if (h)
        out.vee.push_back(kron(s.maps[al], s.maps[be]) * h->h);
      else
        out.vee.push_back(Matrix(dn * dn, dn));
    }

  if (auto rep = validate_ns_cofamily(out); !rep)
    throw std::logic_error("induce_ns_cofamily: output fails the coaxioms: " + rep.describe());
  return out;
}

ValidationReport validate_ns_cofamily(const NSCofamily& n) {
  const auto& sg = n.semigroup;
  if (n.prec.size() != sg.size || n.succ.size() != sg.size || n.vee.size() != sg.size * sg.size)
    throw std::invalid_argument("NS cofamily: table sizes mismatch");
  for (const auto* ops : {&n.prec, &n.succ, &n.vee})
    for (const auto& m : *ops)
      if (m.rows() != n.dim * n.dim || m.cols() != n.dim)
        throw std::invalid_argument("NS cofamily: co-operation shape mismatch");

  Matrix id = Matrix::identity(n.dim);
  for (std::size_t al = 0; al < sg.size; ++al)
    for (std::size_t be = 0; be < sg.size; ++be) {
      std::size_t ab = sg.product(al, be);
      Matrix sum_ab = n.succ[al] + n.prec[be] + n.vee_at(al, be);
      if (!(kron(n.prec[al], id) * n.prec[be] == kron(id, sum_ab) * n.prec[ab]))
        return ValidationReport::fail("co-axiom 1", {al, be});
      if (!(kron(n.succ[al], id) * n.prec[be] == kron(id, n.prec[be]) * n.succ[al]))
        return ValidationReport::fail("co-axiom 2", {al, be});
      if (!(kron(sum_ab, id) * n.succ[ab] == kron(id, n.succ[be]) * n.succ[al]))
        return ValidationReport::fail("co-axiom 3", {al, be});
      for (std::size_t ga = 0; ga < sg.size; ++ga) {
        std::size_t bg = sg.product(be, ga);
        Matrix lhs = kron(sum_ab, id) * n.vee_at(ab, ga) + kron(n.vee_at(al, be), id) * n.prec[ga];
        Matrix sum_bg = n.succ[be] + n.prec[ga] + n.vee_at(be, ga);
        Matrix rhs = kron(id, n.vee_at(be, ga)) * n.succ[al] + kron(id, sum_bg) * n.vee_at(al, bg);
        if (!(lhs == rhs)) return ValidationReport::fail("co-axiom 4", {al, be, ga});
      }
    }
  return ValidationReport::ok();
}

CofamilyContext cofamily_from_family_context(const OperatorFamily& t, const Algebra& a,
                                             const Bimodule& m, const Cocycle2* h) {
  const std::size_t dc = a.dim, dn = m.module_dim;
  CofamilyContext out;
  out.coalgebra.dim = dc;
  out.coalgebra.comult = Matrix(dc * dc, dc);
  for (std::size_t i = 0; i < dc; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      for (std::size_t k = 0; k < dc; ++k)
        out.coalgebra.comult.at(i * dc + j, k) = a.mult.at(i, j, k);

  out.cobimodule.coalgebra_dim = dc;
  out.cobimodule.module_dim = dn;
  out.cobimodule.left_coaction = Matrix(dc * dn, dn);
  out.cobimodule.right_coaction = Matrix(dn * dc, dn);
  for (std::size_t q = 0; q < dn; ++q)
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t p = 0; p < dn; ++p) {
        out.cobimodule.left_coaction.at(i * dn + p, q) = m.left.at(i, p, q);
        out.cobimodule.right_coaction.at(p * dc + i, q) = m.right.at(p, i, q);
      }

  if (h) {
    CoCocycle hh;
    hh.coalgebra_dim = dc;
    hh.module_dim = dn;
    hh.h = Matrix(dc * dc, dn);
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t j = 0; j < dc; ++j)
        for (std::size_t q = 0; q < dn; ++q) hh.h.at(i * dc + j, q) = h->h.at(i, j, q);
    out.cococycle = std::move(hh);
  }

  out.cofamily.semigroup = t.semigroup;
  out.cofamily.coalgebra_dim = dc;
  out.cofamily.module_dim = dn;
  for (const auto& mt : t.maps) out.cofamily.maps.push_back(mt.transpose());
  return out;
}

NSFamily dualize_ns_cofamily(const NSCofamily& n) {
  NSFamily out;
  out.semigroup = n.semigroup;
  out.dim = n.dim;
  auto to_tensor = [&](const Matrix& m) {
    Tensor3 t(n.dim, n.dim, n.dim);
    for (std::size_t p = 0; p < n.dim; ++p)
      for (std::size_t q = 0; q < n.dim; ++q)
        for (std::size_t r = 0; r < n.dim; ++r) t.at(p, q, r) = m.at(p * n.dim + q, r);
    return t;
  };
  for (const auto& m : n.prec) out.prec.push_back(to_tensor(m));
  for (const auto& m : n.succ) out.succ.push_back(to_tensor(m));
  for (const auto& m : n.vee) out.vee.push_back(to_tensor(m));
  return out;
}

}  // namespace famalg
