#include "famalg/family_ops.hpp"

#include <stdexcept>

namespace famalg {

OperatorFamily OperatorFamily::zero(const FiniteSemigroup& s, std::size_t domain,
                                    std::size_t codomain) {
  OperatorFamily f;
  f.semigroup = s;
  f.domain_dim = domain;
  f.codomain_dim = codomain;
  f.maps.assign(s.size, Matrix(codomain, domain));
  return f;
}

OperatorFamily OperatorFamily::constant(const FiniteSemigroup& s, const Matrix& t) {
  OperatorFamily f;
  f.semigroup = s;
  f.domain_dim = t.cols();
  f.codomain_dim = t.rows();
  f.maps.assign(s.size, t);
  return f;
}

OperatorFamily OperatorFamily::identity(const FiniteSemigroup& s, std::size_t dim) {
  return constant(s, Matrix::identity(dim));
}

void OperatorFamily::check_shapes() const {
  if (maps.size() != semigroup.size)
    throw std::invalid_argument("operator family: one matrix per semigroup element required");
  for (const auto& m : maps)
    if (m.rows() != codomain_dim || m.cols() != domain_dim)
      throw std::invalid_argument("operator family: member shape mismatch");
}

FamilyKind family_kind_from_string(const std::string& s) {
  if (s == "rota_baxter") return FamilyKind::rota_baxter;
  if (s == "o_operator") return FamilyKind::o_operator;
  if (s == "twisted_o_operator") return FamilyKind::twisted_o_operator;
  if (s == "nijenhuis") return FamilyKind::nijenhuis;
  if (s == "reynolds") return FamilyKind::reynolds;
  if (s == "derivation") return FamilyKind::derivation;
  if (s == "weighted_rb") return FamilyKind::weighted_rb;
  throw std::invalid_argument("unknown family kind: " + s);
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::rota_baxter: return "rota_baxter";
    case FamilyKind::o_operator: return "o_operator";
    case FamilyKind::twisted_o_operator: return "twisted_o_operator";
    case FamilyKind::nijenhuis: return "nijenhuis";
    case FamilyKind::reynolds: return "reynolds";
    case FamilyKind::derivation: return "derivation";
    case FamilyKind::weighted_rb: return "weighted_rb";
  }
  return "?";
}

ValidationReport check_twisted_o_family(const OperatorFamily& t, const Algebra& a,
                                        const Bimodule& m, const Cocycle2* h) {
  t.check_shapes();
  if (t.domain_dim != m.module_dim || t.codomain_dim != a.dim || m.algebra_dim != a.dim)
    throw std::invalid_argument("check_twisted_o_family: dimension mismatch");
  if (h && (h->algebra_dim != a.dim || h->module_dim != m.module_dim))
    throw std::invalid_argument("check_twisted_o_family: cocycle shape mismatch");

  const auto& s = t.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t p = 0; p < m.module_dim; ++p)
        for (std::size_t q = 0; q < m.module_dim; ++q) {
          Vec u = unit_vec(m.module_dim, p), v = unit_vec(m.module_dim, q);
          Vec tu = t.apply(al, u), tv = t.apply(be, v);
          Vec lhs = a.product(tu, tv);
          Vec arg = m.act_left(tu, v) + m.act_right(u, tv);
          if (h) arg = arg + h->eval(tu, tv);
          Vec rhs = t.apply(ab, arg);
          if (lhs != rhs)
            return ValidationReport::fail(
                h ? "T_a(u).T_b(v) = T_ab(T_a(u).v + u.T_b(v) + H(T_a u, T_b v))"
                  : "T_a(u).T_b(v) = T_ab(T_a(u).v + u.T_b(v))",
                {al, be, p, q});
        }
    }
  return ValidationReport::ok();
}

ValidationReport check_derivation_family(const OperatorFamily& d, const Algebra& a,
                                         const Bimodule& m) {
  d.check_shapes();
  if (d.domain_dim != a.dim || d.codomain_dim != m.module_dim || m.algebra_dim != a.dim)
    throw std::invalid_argument("check_derivation_family: dimension mismatch");

  const auto& s = d.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
          Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
          Vec lhs = d.apply(ab, a.product(x, y));
          Vec rhs = m.act_right(d.apply(al, x), y) + m.act_left(x, d.apply(be, y));
          if (lhs != rhs)
            return ValidationReport::fail("D_ab(a.b) = D_a(a).b + a.D_b(b)", {al, be, i, j});
        }
    }
  return ValidationReport::ok();
}

OperatorFamily invert_derivation_family(const OperatorFamily& d, const Algebra& a,
                                        const Bimodule& m) {
  if (d.domain_dim != d.codomain_dim)
    throw std::invalid_argument("invert_derivation_family: dim A != dim M");
  if (auto rep = check_derivation_family(d, a, m); !rep)
    throw std::invalid_argument("invert_derivation_family: not a derivation family: " +
                                rep.describe());

  OperatorFamily inv;
  inv.semigroup = d.semigroup;
  inv.domain_dim = d.codomain_dim;
  inv.codomain_dim = d.domain_dim;
  for (std::size_t al = 0; al < d.maps.size(); ++al) {
    auto mi = d.maps[al].inverse();
    if (!mi)
      throw std::invalid_argument("invert_derivation_family: singular member at element " +
                                  std::to_string(al));
    inv.maps.push_back(std::move(*mi));
  }
  return inv;
}

ValidationReport check_nijenhuis_family(const OperatorFamily& n, const Algebra& a) {
  n.check_shapes();
  if (n.domain_dim != a.dim || n.codomain_dim != a.dim)
    throw std::invalid_argument("check_nijenhuis_family: square maps on A required");

  const auto& s = n.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
          Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
          Vec nx = n.apply(al, x), ny = n.apply(be, y);
          Vec lhs = a.product(nx, ny);
          Vec arg = a.product(nx, y) + a.product(x, ny) - n.apply(ab, a.product(x, y));
          Vec rhs = n.apply(ab, arg);
          if (lhs != rhs)
            return ValidationReport::fail(
                "N_a(x).N_b(y) = N_ab(N_a(x).y + x.N_b(y) - N_ab(x.y))", {al, be, i, j});
        }
    }
  return ValidationReport::ok();
}

ValidationReport check_nijenhuis_operator(const Matrix& n, const Algebra& a) {
  return check_nijenhuis_family(OperatorFamily::constant(FiniteSemigroup::trivial(), n), a);
}

namespace {

Matrix block_diagonal_collapse(const OperatorFamily& f) {
  const std::size_t dd = f.domain_dim, dc = f.codomain_dim, n = f.semigroup.size;
  Matrix out(dc * n, dd * n);
  for (std::size_t al = 0; al < n; ++al)
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t j = 0; j < dd; ++j)
        out.at(extended_index(al, i, dc), extended_index(al, j, dd)) = f.map(al).at(i, j);
  return out;
}

}  // namespace

Matrix collapse_nijenhuis(const OperatorFamily& n, const Algebra& a, const FiniteSemigroup& s) {
  if (auto rep = check_nijenhuis_family(n, a); !rep)
    throw std::invalid_argument("collapse_nijenhuis: invalid family: " + rep.describe());
  if (n.semigroup.size != s.size)
    throw std::invalid_argument("collapse_nijenhuis: semigroup mismatch");
  return block_diagonal_collapse(n);
}

ValidationReport check_compatible_pair(const OperatorFamily& t, const OperatorFamily& s_fam,
                                       const Algebra& a, const Bimodule& m) {
  t.check_shapes();
  s_fam.check_shapes();
  if (t.domain_dim != s_fam.domain_dim || t.codomain_dim != s_fam.codomain_dim ||
      t.semigroup.size != s_fam.semigroup.size)
    throw std::invalid_argument("check_compatible_pair: family shape mismatch");

  const auto& s = t.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t p = 0; p < m.module_dim; ++p)
        for (std::size_t q = 0; q < m.module_dim; ++q) {
          Vec u = unit_vec(m.module_dim, p), v = unit_vec(m.module_dim, q);
          Vec tu = t.apply(al, u), tv = t.apply(be, v);
          Vec su = s_fam.apply(al, u), sv = s_fam.apply(be, v);
          Vec lhs = a.product(tu, sv) + a.product(su, tv);
          Vec rhs = t.apply(ab, m.act_left(su, v) + m.act_right(u, sv)) +
                    s_fam.apply(ab, m.act_left(tu, v) + m.act_right(u, tv));
          if (lhs != rhs)
            return ValidationReport::fail(
                "T_a(u).S_b(v) + S_a(u).T_b(v) = T_ab(S_a(u).v + u.S_b(v)) + S_ab(T_a(u).v + u.T_b(v))",
                {al, be, p, q});
        }
    }
  return ValidationReport::ok();
}

OperatorFamily nijenhuis_from_compatible_pair(const OperatorFamily& t, const OperatorFamily& s_fam,
                                              const Algebra& a, const Bimodule& m,
                                              InvertWhich invert) {
  if (auto rep = check_twisted_o_family(t, a, m); !rep)
    throw std::invalid_argument("nijenhuis_from_compatible_pair: first family invalid: " +
                                rep.describe());
  if (auto rep = check_twisted_o_family(s_fam, a, m); !rep)
    throw std::invalid_argument("nijenhuis_from_compatible_pair: second family invalid: " +
                                rep.describe());
  if (auto rep = check_compatible_pair(t, s_fam, a, m); !rep)
    throw std::invalid_argument("nijenhuis_from_compatible_pair: incompatible pair: " +
                                rep.describe());

  const OperatorFamily& keep = (invert == InvertWhich::second) ? t : s_fam;
  const OperatorFamily& inv = (invert == InvertWhich::second) ? s_fam : t;

  OperatorFamily n;
  n.semigroup = t.semigroup;
  n.domain_dim = a.dim;
  n.codomain_dim = a.dim;
  for (std::size_t al = 0; al < inv.maps.size(); ++al) {
    auto mi = inv.maps[al].inverse();
    if (!mi)
      throw std::invalid_argument("nijenhuis_from_compatible_pair: singular member at element " +
                                  std::to_string(al));
    n.maps.push_back(keep.maps[al] * *mi);
  }
  return n;
}

OperatorFamily lift_to_semidirect(const OperatorFamily& t, const Algebra& a, const Bimodule& m) {
  t.check_shapes();
  if (t.domain_dim != m.module_dim || t.codomain_dim != a.dim)
    throw std::invalid_argument("lift_to_semidirect: dimension mismatch");
  const std::size_t d = a.dim + m.module_dim;
  OperatorFamily out;
  out.semigroup = t.semigroup;
  out.domain_dim = d;
  out.codomain_dim = d;
  for (const auto& tm : t.maps) {
    Matrix hat(d, d);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t p = 0; p < m.module_dim; ++p) hat.at(i, a.dim + p) = tm.at(i, p);
    out.maps.push_back(std::move(hat));
  }
  return out;
}

Matrix collapse_family(const OperatorFamily& t, const Algebra& a, const Bimodule& m,
                       const Cocycle2* h, const FiniteSemigroup& s) {
  if (auto rep = check_twisted_o_family(t, a, m, h); !rep)
    throw std::invalid_argument("collapse_family: invalid family: " + rep.describe());
  if (t.semigroup.size != s.size)
    throw std::invalid_argument("collapse_family: semigroup mismatch");
  return block_diagonal_collapse(t);
}

ValidationReport graph_subalgebra_check(const OperatorFamily& t, const Algebra& a,
                                        const Bimodule& m, const Cocycle2* h) {
  t.check_shapes();
  if (t.domain_dim != m.module_dim || t.codomain_dim != a.dim)
    throw std::invalid_argument("graph_subalgebra_check: dimension mismatch");

  const std::size_t da = a.dim, dm = m.module_dim;
  const auto& s = t.semigroup;

  // Gr(T_alpha) = ker [ Id_A | -T_alpha ] inside A + M.
  std::vector<std::vector<Vec>> graph_basis(s.size);
  std::vector<Matrix> graph_mat(s.size);
  std::vector<std::size_t> graph_rank(s.size);
  for (std::size_t al = 0; al < s.size; ++al) {
    Matrix proj(da, da + dm);
    for (std::size_t i = 0; i < da; ++i) proj.at(i, i) = Rational(1);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t p = 0; p < dm; ++p) proj.at(i, da + p) = -t.map(al).at(i, p);
    graph_basis[al] = kernel_basis(proj);
    graph_mat[al] = assemble_linear_map(graph_basis[al]);
    graph_rank[al] = rank(graph_mat[al]);
  }

  auto star_h = [&](const Vec& x, const Vec& y) {
    Vec xa(x.begin(), x.begin() + da), xu(x.begin() + da, x.end());
    Vec ya(y.begin(), y.begin() + da), yu(y.begin() + da, y.end());
    Vec pa = a.product(xa, ya);
    Vec pu = m.act_left(xa, yu) + m.act_right(xu, ya);
    if (h) pu = pu + h->eval(xa, ya);
    Vec out = pa;
    out.insert(out.end(), pu.begin(), pu.end());
    return out;
  };

  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t p = 0; p < graph_basis[al].size(); ++p)
        for (std::size_t q = 0; q < graph_basis[be].size(); ++q) {
          Vec prod = star_h(graph_basis[al][p], graph_basis[be][q]);
          // membership: appending prod must not raise the rank
          Matrix aug(da + dm, graph_mat[ab].cols() + 1);
          for (std::size_t i = 0; i < da + dm; ++i) {
            for (std::size_t j = 0; j < graph_mat[ab].cols(); ++j)
              aug.at(i, j) = graph_mat[ab].at(i, j);
            aug.at(i, graph_mat[ab].cols()) = prod[i];
          }
          if (rank(aug) != graph_rank[ab])
            return ValidationReport::fail("Gr(T_a) * Gr(T_b) inside Gr(T_ab)", {al, be, p, q});
        }
    }
  return ValidationReport::ok();
}

ValidationReport check_reynolds_family(const OperatorFamily& r, const Algebra& a) {
  r.check_shapes();
  if (r.domain_dim != a.dim || r.codomain_dim != a.dim)
    throw std::invalid_argument("check_reynolds_family: square maps on A required");

  const auto& s = r.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
          Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
          Vec rx = r.apply(al, x), ry = r.apply(be, y);
          Vec lhs = a.product(rx, ry);
          Vec rhs = r.apply(ab, a.product(rx, y) + a.product(x, ry) - a.product(rx, ry));
          if (lhs != rhs)
            return ValidationReport::fail(
                "R_a(x).R_b(y) = R_ab(R_a(x).y + x.R_b(y) - R_a(x).R_b(y))", {al, be, i, j});
        }
    }
  return ValidationReport::ok();
}

OperatorFamily reynolds_from_nilpotent_derivation(const OperatorFamily& d, const Algebra& a,
                                                  std::size_t nil_bound) {
  if (auto rep = check_derivation_family(d, a, adjoint_bimodule(a)); !rep)
    throw std::invalid_argument("reynolds_from_nilpotent_derivation: not a derivation family: " +
                                rep.describe());
  if (nil_bound == 0)
    throw std::invalid_argument("reynolds_from_nilpotent_derivation: nil_bound must be positive");

  OperatorFamily r;
  r.semigroup = d.semigroup;
  r.domain_dim = a.dim;
  r.codomain_dim = a.dim;
  for (std::size_t al = 0; al < d.maps.size(); ++al) {
    bool nil = false;
    for (std::size_t k = 1; k <= nil_bound && !nil; ++k)
      if (d.maps[al].pow(k).is_zero()) nil = true;
    if (!nil)
      throw std::invalid_argument(
          "reynolds_from_nilpotent_derivation: member at element " + std::to_string(al) +
          " is not nilpotent within the bound");
    Matrix acc(a.dim, a.dim);
    Matrix p = Matrix::identity(a.dim);
    for (std::size_t n = 0; n < nil_bound; ++n) {
      if (n % 2 == 0) acc += p; else acc -= p;
      p = p * d.maps[al];
    }
    r.maps.push_back(std::move(acc));
  }
  return r;
}

bool reynolds_binomial_identity(std::size_t p, std::size_t q) {
  auto binom = [](std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
  };
  mpz_class total = 0;
  for (std::size_t i = 0; i <= p; ++i) total += binom(i + q, i);
  for (std::size_t j = 0; j <= q; ++j) total += binom(p + j, j);
  for (std::size_t i = 0; i <= p; ++i)
    for (std::size_t j = 0; j <= q; ++j) total -= binom(i + j, i);
  return total == 1;
}

NijenhuisTwistedContext build_nijenhuis_twisted_context(const OperatorFamily& n, const Algebra& a,
                                                        const FiniteSemigroup& s) {
  if (auto rep = check_nijenhuis_family(n, a); !rep)
    throw std::invalid_argument("build_nijenhuis_twisted_context: invalid Nijenhuis family: " +
                                rep.describe());
  if (n.semigroup.size != s.size)
    throw std::invalid_argument("build_nijenhuis_twisted_context: semigroup mismatch");

  const std::size_t d = a.dim, dd = d * s.size;
  NijenhuisTwistedContext ctx;

  // (a (x) alpha) *_N (b (x) beta) = (N_alpha(a).b + a.N_beta(b) - N_alphabeta(a.b)) (x) alphabeta
  ctx.deformed_algebra.dim = dd;
  ctx.deformed_algebra.mult = Tensor3(dd, dd, dd);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Vec x = unit_vec(d, i), y = unit_vec(d, j);
          Vec val = a.product(n.apply(al, x), y) + a.product(x, n.apply(be, y)) -
                    n.apply(ab, a.product(x, y));
          for (std::size_t k = 0; k < d; ++k)
            ctx.deformed_algebra.mult.at(extended_index(al, i, d), extended_index(be, j, d),
                                         extended_index(ab, k, d)) = val[k];
        }
    }
  if (auto rep = validate_algebra(ctx.deformed_algebra); !rep)
    throw std::logic_error("build_nijenhuis_twisted_context: deformed product not associative: " +
                           rep.describe());

  // actions of the deformed algebra on A: (a (x) alpha).b = N_alpha(a).b, b.(a (x) alpha) = b.N_alpha(a)
  ctx.bimodule.algebra_dim = dd;
  ctx.bimodule.module_dim = d;
  ctx.bimodule.left = Tensor3(dd, d, d);
  ctx.bimodule.right = Tensor3(d, dd, d);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t i = 0; i < d; ++i) {
      Vec na = n.apply(al, unit_vec(d, i));
      for (std::size_t j = 0; j < d; ++j) {
        Vec lv = a.product(na, unit_vec(d, j));
        Vec rv = a.product(unit_vec(d, j), na);
        for (std::size_t k = 0; k < d; ++k) {
          ctx.bimodule.left.at(extended_index(al, i, d), j, k) = lv[k];
          ctx.bimodule.right.at(j, extended_index(al, i, d), k) = rv[k];
        }
      }
    }
  if (auto rep = validate_bimodule(ctx.deformed_algebra, ctx.bimodule); !rep)
    throw std::logic_error("build_nijenhuis_twisted_context: bimodule axioms fail: " +
                           rep.describe());

  // H(a (x) alpha, b (x) beta) = -N_alphabeta(a.b)
  ctx.cocycle.algebra_dim = dd;
  ctx.cocycle.module_dim = d;
  ctx.cocycle.h = Tensor3(dd, dd, d);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Vec val = n.apply(ab, a.product(unit_vec(d, i), unit_vec(d, j)));
          for (std::size_t k = 0; k < d; ++k)
            ctx.cocycle.h.at(extended_index(al, i, d), extended_index(be, j, d), k) = -val[k];
        }
    }
  if (auto rep = validate_2cocycle(ctx.deformed_algebra, ctx.bimodule, ctx.cocycle); !rep)
    throw std::logic_error("build_nijenhuis_twisted_context: cocycle identity fails: " +
                           rep.describe());

  ctx.family.semigroup = s;
  ctx.family.domain_dim = d;
  ctx.family.codomain_dim = dd;
  for (std::size_t al = 0; al < s.size; ++al) {
    Matrix id_al(dd, d);
    for (std::size_t i = 0; i < d; ++i) id_al.at(extended_index(al, i, d), i) = Rational(1);
    ctx.family.maps.push_back(std::move(id_al));
  }
  return ctx;
}

}  // namespace famalg
