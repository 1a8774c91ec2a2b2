#include "famalg/deformation.hpp"

#include <stdexcept>

namespace famalg {

TruncatedFamilyDeformation TruncatedFamilyDeformation::constant(const OperatorFamily& base,
                                                                const Algebra& a,
                                                                const Bimodule& m,
                                                                const Cocycle2* h,
                                                                std::size_t order) {
  TruncatedFamilyDeformation d;
  d.order = order;
  d.algebra = a;
  d.bimodule = m;
  if (h) d.cocycle = *h;
  d.terms.push_back(base);
  for (std::size_t i = 1; i <= order; ++i)
    d.terms.push_back(OperatorFamily::zero(base.semigroup, base.domain_dim, base.codomain_dim));
  return d;
}

TruncatedNSDeformation TruncatedNSDeformation::constant(const NSFamily& base, std::size_t order) {
  TruncatedNSDeformation d;
  d.order = order;
  d.terms.push_back(base);
  for (std::size_t i = 1; i <= order; ++i)
    d.terms.push_back(NSFamily::zero(base.semigroup, base.dim));
  return d;
}

std::vector<PerOrderReport> check_family_deformation(const TruncatedFamilyDeformation& d) {
  if (d.terms.size() != d.order + 1)
    throw std::invalid_argument("family deformation: order+1 terms required");
  for (const auto& t : d.terms) t.check_shapes();

  const auto& s = d.terms[0].semigroup;
  const std::size_t dm = d.bimodule.module_dim;
  const Cocycle2* h = d.h();

  std::vector<PerOrderReport> out;
  for (std::size_t n = 0; n <= d.order; ++n) {
    ValidationReport rep = ValidationReport::ok();
    for (std::size_t al = 0; al < s.size && rep.pass; ++al)
      for (std::size_t be = 0; be < s.size && rep.pass; ++be) {
        std::size_t ab = s.product(al, be);
        for (std::size_t p = 0; p < dm && rep.pass; ++p)
          for (std::size_t q = 0; q < dm && rep.pass; ++q) {
            Vec u = unit_vec(dm, p), v = unit_vec(dm, q);
            Vec lhs(d.algebra.dim), rhs(d.algebra.dim);
            for (std::size_t i = 0; i <= n; ++i) {
              std::size_t j = n - i;
              lhs = lhs + d.algebra.product(d.terms[i].apply(al, u), d.terms[j].apply(be, v));
              rhs = rhs + d.terms[i].apply(ab, d.bimodule.act_left(d.terms[j].apply(al, u), v) +
                                                   d.bimodule.act_right(u, d.terms[j].apply(be, v)));
            }
            if (h) {
              for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; i + j <= n; ++j) {
                  std::size_t k = n - i - j;
                  rhs = rhs + d.terms[i].apply(
                                  ab, h->eval(d.terms[j].apply(al, u), d.terms[k].apply(be, v)));
                }
            }
            if (lhs != rhs)
              rep = ValidationReport::fail("deformation equation at order " + std::to_string(n),
                                           {al, be, p, q});
          }
      }
    out.push_back({n, rep});
  }
  return out;
}

bool deformation_valid_to_order(const std::vector<PerOrderReport>& reports, std::size_t order) {
  for (const auto& r : reports)
    if (r.order <= order && !r.report.pass) return false;
  return true;
}

TupleCochain infinitesimal_cochain(const TruncatedFamilyDeformation& d) {
  if (d.order < 1) throw std::invalid_argument("infinitesimal: order >= 1 required");
  TupleCochain c;
  c.degree = 1;
  c.maps = d.terms[1].maps;
  return c;
}

bool infinitesimal_cocycle_check(const TruncatedFamilyDeformation& d) {
  auto reports = check_family_deformation(d);
  if (!deformation_valid_to_order(reports, 1))
    throw std::invalid_argument("infinitesimal_cocycle_check: deformation invalid to order 1");
  TupleCochain image =
      delta_twooperf(infinitesimal_cochain(d), d.terms[0], d.algebra, d.bimodule, d.h());
  for (const auto& m : image.maps)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

void check_ns_term_shapes(const TruncatedNSDeformation& d) {
  if (d.terms.size() != d.order + 1)
    throw std::invalid_argument("NS deformation: order+1 terms required");
  for (const auto& t : d.terms) t.check_shapes();
}

}  // namespace

std::vector<PerOrderReport> check_ns_deformation(const TruncatedNSDeformation& d) {
  check_ns_term_shapes(d);
  const NSFamily& base = d.terms[0];
  const auto& s = base.semigroup;
  const std::size_t dim = base.dim;

  std::vector<PerOrderReport> out;
  for (std::size_t n = 0; n <= d.order; ++n) {
    ValidationReport rep = ValidationReport::ok();

    auto fail = [&](const char* rule, std::vector<std::size_t> w) {
      rep = ValidationReport::fail(std::string(rule) + " at order " + std::to_string(n),
                                   std::move(w));
    };

    for (std::size_t al = 0; al < s.size && rep.pass; ++al)
      for (std::size_t be = 0; be < s.size && rep.pass; ++be) {
        std::size_t ab = s.product(al, be);
        for (std::size_t x = 0; x < dim && rep.pass; ++x)
          for (std::size_t y = 0; y < dim && rep.pass; ++y)
            for (std::size_t z = 0; z < dim && rep.pass; ++z) {
              Vec ex = unit_vec(dim, x), ey = unit_vec(dim, y), ez = unit_vec(dim, z);
              Vec a1(dim), a2(dim), a3(dim);
              for (std::size_t i = 0; i <= n; ++i) {
                std::size_t j = n - i;
                const NSFamily &fi = d.terms[i], &fj = d.terms[j];
                // (x <a y) <b z - x <ab (y <b z + y >a z + y v_ab z)
                a1 = a1 + fi.prec[be].eval(fj.prec[al].eval(ex, ey), ez) -
                     fi.prec[ab].eval(ex, fj.prec[be].eval(ey, ez) + fj.succ[al].eval(ey, ez) +
                                              fj.vee_at(al, be).eval(ey, ez));
                // (x >a y) <b z - x >a (y <b z)
                a2 = a2 + fi.prec[be].eval(fj.succ[al].eval(ex, ey), ez) -
                     fi.succ[al].eval(ex, fj.prec[be].eval(ey, ez));
                // (x <b y + x >a y + x v_ab y) >ab z - x >a (y >b z)
                a3 = a3 + fi.succ[ab].eval(fj.prec[be].eval(ex, ey) + fj.succ[al].eval(ex, ey) +
                                                   fj.vee_at(al, be).eval(ex, ey),
                                           ez) -
                     fi.succ[al].eval(ex, fj.succ[be].eval(ey, ez));
              }
              if (!is_zero(a1)) { fail("axiom 1", {al, be, x, y, z}); break; }
              if (!is_zero(a2)) { fail("axiom 2", {al, be, x, y, z}); break; }
              if (!is_zero(a3)) { fail("axiom 3", {al, be, x, y, z}); break; }
            }
      }

    for (std::size_t al = 0; al < s.size && rep.pass; ++al)
      for (std::size_t be = 0; be < s.size && rep.pass; ++be)
        for (std::size_t ga = 0; ga < s.size && rep.pass; ++ga) {
          std::size_t ab = s.product(al, be), bg = s.product(be, ga);
          for (std::size_t x = 0; x < dim && rep.pass; ++x)
            for (std::size_t y = 0; y < dim && rep.pass; ++y)
              for (std::size_t z = 0; z < dim && rep.pass; ++z) {
                Vec ex = unit_vec(dim, x), ey = unit_vec(dim, y), ez = unit_vec(dim, z);
                Vec a4(dim);
                for (std::size_t i = 0; i <= n; ++i) {
                  std::size_t j = n - i;
                  const NSFamily &fi = d.terms[i], &fj = d.terms[j];
                  a4 = a4 +
                       fi.vee_at(ab, ga).eval(fj.prec[be].eval(ex, ey) + fj.succ[al].eval(ex, ey) +
                                                      fj.vee_at(al, be).eval(ex, ey),
                                              ez) +
                       fi.prec[ga].eval(fj.vee_at(al, be).eval(ex, ey), ez) -
                       fi.succ[al].eval(ex, fj.vee_at(be, ga).eval(ey, ez)) -
                       fi.vee_at(al, bg).eval(ex, fj.prec[ga].eval(ey, ez) +
                                                      fj.succ[be].eval(ey, ez) +
                                                      fj.vee_at(be, ga).eval(ey, ez));
                }
                if (!is_zero(a4)) { fail("axiom 4", {al, be, ga, x, y, z}); break; }
              }
        }
    out.push_back({n, rep});
  }
  return out;
}

namespace {

Matrix bilinear_matrix(const Tensor3& t) {
  const std::size_t d = t.dim3();
  Matrix m(d, t.dim1() * t.dim2());
  for (std::size_t i = 0; i < t.dim1(); ++i)
    for (std::size_t j = 0; j < t.dim2(); ++j)
      for (std::size_t k = 0; k < d; ++k) m.at(k, i * t.dim2() + j) = t.at(i, j, k);
  return m;
}

}  // namespace

NSfamCochain ns_infinitesimal_cochain(const TruncatedNSDeformation& d) {
  if (d.order < 1) throw std::invalid_argument("NS infinitesimal: order >= 1 required");
  const NSFamily& p1 = d.terms[1];
  const auto& s = p1.semigroup;
  NSfamCochain c;
  c.degree = 2;
  c.comps.assign(3, {});
  // [1] drops alpha_1: table over beta holds prec^1_beta
  c.comps[0].resize(s.size);
  for (std::size_t be = 0; be < s.size; ++be) c.comps[0][be] = bilinear_matrix(p1.prec[be]);
  // [2] drops alpha_2: table over alpha holds succ^1_alpha
  c.comps[1].resize(s.size);
  for (std::size_t al = 0; al < s.size; ++al) c.comps[1][al] = bilinear_matrix(p1.succ[al]);
  // [3] full pair table holds vee^1
  c.comps[2].resize(s.size * s.size);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be)
      c.comps[2][al * s.size + be] = bilinear_matrix(p1.vee_at(al, be));
  return c;
}

bool ns_infinitesimal_cocycle_check(const TruncatedNSDeformation& d) {
  auto reports = check_ns_deformation(d);
  if (!deformation_valid_to_order(reports, 1))
    throw std::invalid_argument("ns_infinitesimal_cocycle_check: deformation invalid to order 1");
  NSfamCochain image = delta_nsfam(ns_infinitesimal_cochain(d), d.terms[0]);
  for (const auto& comp : image.comps)
    for (const auto& m : comp)
      if (!m.is_zero()) return false;
  return true;
}

std::vector<Matrix> series_multiply(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                                    std::size_t order) {
  std::vector<Matrix> out;
  for (std::size_t n = 0; n <= order; ++n) {
    Matrix acc(a[0].rows(), b[0].cols());
    for (std::size_t i = 0; i <= n; ++i) {
      if (i >= a.size() || n - i >= b.size()) continue;
      acc += a[i] * b[n - i];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Matrix> series_inverse(const std::vector<Matrix>& a, std::size_t order) {
  auto inv0 = a[0].inverse();
  if (!inv0) throw std::invalid_argument("series_inverse: constant term is singular");
  std::vector<Matrix> out{*inv0};
  for (std::size_t n = 1; n <= order; ++n) {
    Matrix acc(a[0].rows(), a[0].cols());
    for (std::size_t k = 1; k <= n; ++k) {
      if (k >= a.size()) continue;
      acc += a[k] * out[n - k];
    }
    out.push_back(-Rational(1) * (*inv0 * acc));
  }
  return out;
}

TruncatedFamilyDeformation apply_equivalence(const TruncatedFamilyDeformation& d,
                                             const EquivalenceData& e) {
  if (d.terms.empty()) throw std::invalid_argument("apply_equivalence: empty deformation");
  const auto& base = d.terms[0];
  const auto& s = base.semigroup;
  const std::size_t da = d.algebra.dim, dm = d.bimodule.module_dim;
  if (e.theta.size() != da) throw std::invalid_argument("apply_equivalence: theta length mismatch");
  const Cocycle2* h = d.h();

  // phi^t = id + t(l_theta - r_theta) + sum t^i phi_i
  std::vector<Matrix> phi{Matrix::identity(da)};
  {
    Matrix phi1(da, da);
    for (std::size_t j = 0; j < da; ++j) {
      Vec ej = unit_vec(da, j);
      phi1.set_col(j, d.algebra.product(e.theta, ej) - d.algebra.product(ej, e.theta));
    }
    phi.push_back(std::move(phi1));
    for (const auto& m : e.phi_higher) phi.push_back(m);
  }

  TruncatedFamilyDeformation out;
  out.order = d.order;
  out.algebra = d.algebra;
  out.bimodule = d.bimodule;
  out.cocycle = d.cocycle;
  out.terms.assign(d.order + 1, OperatorFamily{});
  for (std::size_t i = 0; i <= d.order; ++i) {
    out.terms[i].semigroup = s;
    out.terms[i].domain_dim = base.domain_dim;
    out.terms[i].codomain_dim = base.codomain_dim;
  }

  for (std::size_t al = 0; al < s.size; ++al) {
    // psi^t_alpha = id + t(l_theta - r_theta + H(theta, T_alpha -) - H(T_alpha -, theta)) + ...
    std::vector<Matrix> psi{Matrix::identity(dm)};
    {
      Matrix psi1(dm, dm);
      for (std::size_t p = 0; p < dm; ++p) {
        Vec u = unit_vec(dm, p);
        Vec col = d.bimodule.act_left(e.theta, u) - d.bimodule.act_right(u, e.theta);
        if (h) {
          Vec tu = base.apply(al, u);
          col = col + h->eval(e.theta, tu) - h->eval(tu, e.theta);
        }
        psi1.set_col(p, col);
      }
      psi.push_back(std::move(psi1));
      for (const auto& m : e.psi_higher) psi.push_back(m);
    }

    std::vector<Matrix> t_series;
    for (std::size_t i = 0; i <= d.order; ++i) t_series.push_back(d.terms[i].map(al));
    auto transported = series_multiply(series_multiply(phi, t_series, d.order),
                                       series_inverse(psi, d.order), d.order);
    for (std::size_t i = 0; i <= d.order; ++i) out.terms[i].maps.push_back(transported[i]);
  }
  return out;
}

TruncatedFamilyDeformation trivialization_step(const TruncatedFamilyDeformation& d,
                                               const Vec& theta) {
  if (d.order < 1) throw std::invalid_argument("trivialization_step: order >= 1 required");
  auto image = twooperf_element_image(theta, d.terms[0], d.algebra, d.bimodule, d.h());
  for (std::size_t al = 0; al < d.terms[0].semigroup.size; ++al)
    if (!(image[al] == d.terms[1].map(al)))
      throw std::invalid_argument("trivialization_step: theta does not cobound the order-1 term");

  EquivalenceData e;
  e.theta = theta;
  TruncatedFamilyDeformation out = apply_equivalence(d, e);
  for (const auto& m : out.terms[1].maps)
    if (!m.is_zero())
      throw std::logic_error("trivialization_step: order-1 term failed to vanish");
  return out;
}

namespace {

// psi(P(xi x, xi y)) for one series coefficient combination
Tensor3 conjugate_bilinear(const Tensor3& p, const Matrix& out_map, const Matrix& in1,
                           const Matrix& in2) {
  const std::size_t d = p.dim1();
  Tensor3 r(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec val = out_map.apply(p.eval(in1.col(i), in2.col(j)));
      for (std::size_t k = 0; k < d; ++k) r.at(i, j, k) = val[k];
    }
  return r;
}

}  // namespace

TruncatedNSDeformation apply_ns_equivalence(const TruncatedNSDeformation& d,
                                            const std::vector<Matrix>& psi_terms) {
  check_ns_term_shapes(d);
  const NSFamily& base = d.terms[0];
  const auto& s = base.semigroup;
  const std::size_t dim = base.dim;

  std::vector<Matrix> psi{Matrix::identity(dim)};
  for (const auto& m : psi_terms) psi.push_back(m);
  auto xi = series_inverse(psi, d.order);

  TruncatedNSDeformation out;
  out.order = d.order;
  out.terms.assign(d.order + 1, NSFamily::zero(s, dim));

  // bar P^n = sum_{a+b+c+e=n} psi_a o P^b o (xi_c (x) xi_e), per operation table
  auto transport = [&](auto&& table_of, auto&& table_ref) {
    for (std::size_t n = 0; n <= d.order; ++n)
      for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; a + b <= n; ++b)
          for (std::size_t c = 0; a + b + c <= n; ++c) {
            std::size_t e2 = n - a - b - c;
            if (a >= psi.size()) continue;
            const Tensor3& p = table_of(d.terms[b]);
            table_ref(out.terms[n]) += conjugate_bilinear(p, psi[a], xi[c], xi[e2]);
          }
  };

  for (std::size_t al = 0; al < s.size; ++al) {
    transport([al](const NSFamily& f) -> const Tensor3& { return f.prec[al]; },
              [al](NSFamily& f) -> Tensor3& { return f.prec[al]; });
    transport([al](const NSFamily& f) -> const Tensor3& { return f.succ[al]; },
              [al](NSFamily& f) -> Tensor3& { return f.succ[al]; });
    for (std::size_t be = 0; be < s.size; ++be) {
      transport([al, be](const NSFamily& f) -> const Tensor3& { return f.vee_at(al, be); },
                [al, be](NSFamily& f) -> Tensor3& { return f.vee_at(al, be); });
    }
  }
  return out;
}

}  // namespace famalg
