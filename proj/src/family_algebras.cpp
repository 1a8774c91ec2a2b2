#include "famalg/family_algebras.hpp"

#include <stdexcept>

namespace famalg {

namespace {

std::vector<Tensor3> zero_tensors(std::size_t count, std::size_t d) {
  return std::vector<Tensor3>(count, Tensor3(d, d, d));
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

DendriformFamily DendriformFamily::zero(const FiniteSemigroup& s, std::size_t dim) {
  return {s, dim, zero_tensors(s.size, dim), zero_tensors(s.size, dim)};
}

void DendriformFamily::check_shapes() const {
  require(prec.size() == semigroup.size && succ.size() == semigroup.size,
          "dendriform family: one tensor per semigroup element required");
  for (const auto* ops : {&prec, &succ})
    for (const auto& t : *ops)
      require(t.dim1() == dim && t.dim2() == dim && t.dim3() == dim,
              "dendriform family: tensor shape mismatch");
}

void TridendriformFamily::check_shapes() const {
  require(prec.size() == semigroup.size && succ.size() == semigroup.size,
          "tridendriform family: one tensor per semigroup element required");
  for (const auto* ops : {&prec, &succ})
    for (const auto& t : *ops)
      require(t.dim1() == dim && t.dim2() == dim && t.dim3() == dim,
              "tridendriform family: tensor shape mismatch");
  require(odot.dim1() == dim && odot.dim2() == dim && odot.dim3() == dim,
          "tridendriform family: odot shape mismatch");
}

NSFamily NSFamily::zero(const FiniteSemigroup& s, std::size_t dim) {
  return {s, dim, zero_tensors(s.size, dim), zero_tensors(s.size, dim),
          zero_tensors(s.size * s.size, dim)};
}

NSFamily NSFamily::from_dendriform(const DendriformFamily& d) {
  NSFamily n;
  n.semigroup = d.semigroup;
  n.dim = d.dim;
  n.prec = d.prec;
  n.succ = d.succ;
  n.vee = zero_tensors(d.semigroup.size * d.semigroup.size, d.dim);
  return n;
}

bool NSFamily::vee_is_zero() const {
  for (const auto& t : vee)
    if (!t.is_zero()) return false;
  return true;
}

void NSFamily::check_shapes() const {
  require(prec.size() == semigroup.size && succ.size() == semigroup.size,
          "NS family: one tensor per semigroup element required");
  require(vee.size() == semigroup.size * semigroup.size,
          "NS family: one vee tensor per ordered pair required");
  for (const auto* ops : {&prec, &succ, &vee})
    for (const auto& t : *ops)
      require(t.dim1() == dim && t.dim2() == dim && t.dim3() == dim,
              "NS family: tensor shape mismatch");
}

void OmegaAssocAlgebra::check_shapes() const {
  require(mult.size() == semigroup.size * semigroup.size,
          "omega algebra: one product per ordered pair required");
  for (const auto& t : mult)
    require(t.dim1() == dim && t.dim2() == dim && t.dim3() == dim,
            "omega algebra: tensor shape mismatch");
}

OmegaBimodule OmegaBimodule::regular(const OmegaAssocAlgebra& o) {
  OmegaBimodule m;
  m.semigroup = o.semigroup;
  m.algebra_dim = o.dim;
  m.module_dim = o.dim;
  m.left = o.mult;
  m.right = o.mult;
  return m;
}

void OmegaBimodule::check_shapes() const {
  require(left.size() == semigroup.size * semigroup.size &&
              right.size() == semigroup.size * semigroup.size,
          "omega bimodule: one action per ordered pair required");
  for (const auto& t : left)
    require(t.dim1() == algebra_dim && t.dim2() == module_dim && t.dim3() == module_dim,
            "omega bimodule: left action shape mismatch");
  for (const auto& t : right)
    require(t.dim1() == module_dim && t.dim2() == algebra_dim && t.dim3() == module_dim,
            "omega bimodule: right action shape mismatch");
}

ValidationReport validate_dendriform_family(const DendriformFamily& d) {
  d.check_shapes();
  const auto& s = d.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j)
          for (std::size_t l = 0; l < d.dim; ++l) {
            Vec x = unit_vec(d.dim, i), y = unit_vec(d.dim, j), z = unit_vec(d.dim, l);
            const Tensor3 &pa = d.prec[al], &pb = d.prec[be], &pab = d.prec[ab];
            const Tensor3 &sa = d.succ[al], &sb = d.succ[be], &sab = d.succ[ab];
            if (pb.eval(pa.eval(x, y), z) != pab.eval(x, pb.eval(y, z) + sa.eval(y, z)))
              return ValidationReport::fail("(x<a y)<b z = x<ab(y<b z + y>a z)", {al, be, i, j, l});
            if (pb.eval(sa.eval(x, y), z) != sa.eval(x, pb.eval(y, z)))
              return ValidationReport::fail("(x>a y)<b z = x>a(y<b z)", {al, be, i, j, l});
            if (sab.eval(pb.eval(x, y) + sa.eval(x, y), z) != sa.eval(x, sb.eval(y, z)))
              return ValidationReport::fail("(x<b y + x>a y)>ab z = x>a(y>b z)", {al, be, i, j, l});
          }
    }
  return ValidationReport::ok();
}

ValidationReport validate_tridendriform_family(const TridendriformFamily& t) {
  t.check_shapes();
  const auto& s = t.semigroup;
  const Tensor3& od = t.odot;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
          for (std::size_t l = 0; l < t.dim; ++l) {
            Vec x = unit_vec(t.dim, i), y = unit_vec(t.dim, j), z = unit_vec(t.dim, l);
            const Tensor3 &pa = t.prec[al], &pb = t.prec[be], &pab = t.prec[ab];
            const Tensor3 &sa = t.succ[al], &sb = t.succ[be], &sab = t.succ[ab];
            if (pb.eval(pa.eval(x, y), z) !=
                pab.eval(x, pb.eval(y, z) + sa.eval(y, z) + od.eval(y, z)))
              return ValidationReport::fail("(x<a y)<b z = x<ab(y<b z + y>a z + y.z)",
                                            {al, be, i, j, l});
            if (pb.eval(sa.eval(x, y), z) != sa.eval(x, pb.eval(y, z)))
              return ValidationReport::fail("(x>a y)<b z = x>a(y<b z)", {al, be, i, j, l});
            if (sab.eval(pb.eval(x, y) + sa.eval(x, y) + od.eval(x, y), z) !=
                sa.eval(x, sb.eval(y, z)))
              return ValidationReport::fail("(x<b y + x>a y + x.y)>ab z = x>a(y>b z)",
                                            {al, be, i, j, l});
          }
    }
  // the odot compatibilities carry a single family index (or none)
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j)
        for (std::size_t l = 0; l < t.dim; ++l) {
          Vec x = unit_vec(t.dim, i), y = unit_vec(t.dim, j), z = unit_vec(t.dim, l);
          const Tensor3 &pa = t.prec[al], &sa = t.succ[al];
          if (od.eval(sa.eval(x, y), z) != sa.eval(x, od.eval(y, z)))
            return ValidationReport::fail("(x>a y).z = x>a(y.z)", {al, i, j, l});
          if (od.eval(pa.eval(x, y), z) != od.eval(x, sa.eval(y, z)))
            return ValidationReport::fail("(x<a y).z = x.(y>a z)", {al, i, j, l});
          if (pa.eval(od.eval(x, y), z) != od.eval(x, pa.eval(y, z)))
            return ValidationReport::fail("(x.y)<a z = x.(y<a z)", {al, i, j, l});
          if (al == 0 && od.eval(od.eval(x, y), z) != od.eval(x, od.eval(y, z)))
            return ValidationReport::fail("(x.y).z = x.(y.z)", {i, j, l});
        }
  return ValidationReport::ok();
}

ValidationReport validate_ns_family(const NSFamily& n) {
  n.check_shapes();
  const auto& s = n.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      const Tensor3 &pa = n.prec[al], &pb = n.prec[be], &pab = n.prec[ab];
      const Tensor3 &sa = n.succ[al], &sb = n.succ[be], &sab = n.succ[ab];
      const Tensor3& vab = n.vee_at(al, be);
      for (std::size_t i = 0; i < n.dim; ++i)
        for (std::size_t j = 0; j < n.dim; ++j)
          for (std::size_t l = 0; l < n.dim; ++l) {
            Vec x = unit_vec(n.dim, i), y = unit_vec(n.dim, j), z = unit_vec(n.dim, l);
            if (pb.eval(pa.eval(x, y), z) !=
                pab.eval(x, pb.eval(y, z) + sa.eval(y, z) + vab.eval(y, z)))
              return ValidationReport::fail("(x<a y)<b z = x<ab(y<b z + y>a z + y v_ab z)",
                                            {al, be, i, j, l});
            if (pb.eval(sa.eval(x, y), z) != sa.eval(x, pb.eval(y, z)))
              return ValidationReport::fail("(x>a y)<b z = x>a(y<b z)", {al, be, i, j, l});
            if (sab.eval(pb.eval(x, y) + sa.eval(x, y) + vab.eval(x, y), z) !=
                sa.eval(x, sb.eval(y, z)))
              return ValidationReport::fail("(x<b y + x>a y + x v_ab y)>ab z = x>a(y>b z)",
                                            {al, be, i, j, l});
          }
      for (std::size_t ga = 0; ga < s.size; ++ga) {
        std::size_t bg = s.product(be, ga);
        const Tensor3 &pg = n.prec[ga];
        const Tensor3 &vabg = n.vee_at(ab, ga), &vbg = n.vee_at(be, ga), &vabg2 = n.vee_at(al, bg);
        for (std::size_t i = 0; i < n.dim; ++i)
          for (std::size_t j = 0; j < n.dim; ++j)
            for (std::size_t l = 0; l < n.dim; ++l) {
              Vec x = unit_vec(n.dim, i), y = unit_vec(n.dim, j), z = unit_vec(n.dim, l);
              Vec lhs = vabg.eval(pb.eval(x, y) + sa.eval(x, y) + vab.eval(x, y), z) +
                        pg.eval(vab.eval(x, y), z);
              Vec rhs = sa.eval(x, vbg.eval(y, z)) +
                        vabg2.eval(x, pg.eval(y, z) + sb.eval(y, z) + vbg.eval(y, z));
              if (lhs != rhs)
                return ValidationReport::fail(
                    "(x<b y + x>a y + x v_ab y) v_{ab,g} z + (x v_ab y)<g z = "
                    "x>a(y v_bg z) + x v_{a,bg}(y<g z + y>b z + y v_bg z)",
                    {al, be, ga, i, j, l});
            }
      }
    }
  return ValidationReport::ok();
}

ValidationReport validate_ns_algebra(const NSAlgebra& n) {
  NSFamily f;
  f.semigroup = FiniteSemigroup::trivial();
  f.dim = n.dim;
  f.prec = {n.prec};
  f.succ = {n.succ};
  f.vee = {n.vee};
  return validate_ns_family(f);
}

ValidationReport validate_omega_associative(const OmegaAssocAlgebra& o) {
  o.check_shapes();
  const auto& s = o.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be)
      for (std::size_t ga = 0; ga < s.size; ++ga) {
        std::size_t ab = s.product(al, be), bg = s.product(be, ga);
        for (std::size_t i = 0; i < o.dim; ++i)
          for (std::size_t j = 0; j < o.dim; ++j)
            for (std::size_t l = 0; l < o.dim; ++l) {
              Vec x = unit_vec(o.dim, i), y = unit_vec(o.dim, j), z = unit_vec(o.dim, l);
              if (o.product(ab, ga, o.product(al, be, x, y), z) !=
                  o.product(al, bg, x, o.product(be, ga, y, z)))
                return ValidationReport::fail("(x *_{a,b} y) *_{ab,g} z = x *_{a,bg} (y *_{b,g} z)",
                                              {al, be, ga, i, j, l});
            }
      }
  return ValidationReport::ok();
}

ValidationReport validate_omega_bimodule(const OmegaAssocAlgebra& o, const OmegaBimodule& m) {
  m.check_shapes();
  require(m.algebra_dim == o.dim, "omega bimodule: algebra dim mismatch");
  const auto& s = o.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be)
      for (std::size_t ga = 0; ga < s.size; ++ga) {
        std::size_t ab = s.product(al, be), bg = s.product(be, ga);
        for (std::size_t i = 0; i < o.dim; ++i)
          for (std::size_t j = 0; j < o.dim; ++j)
            for (std::size_t p = 0; p < m.module_dim; ++p) {
              Vec x = unit_vec(o.dim, i), y = unit_vec(o.dim, j), u = unit_vec(m.module_dim, p);
              if (m.act_left(ab, ga, o.product(al, be, x, y), u) !=
                  m.act_left(al, bg, x, m.act_left(be, ga, y, u)))
                return ValidationReport::fail("(x *_{a,b} y) . u mixed axiom", {al, be, ga, i, j, p});
              if (m.act_right(ab, ga, m.act_left(al, be, x, u), y) !=
                  m.act_left(al, bg, x, m.act_right(be, ga, u, y)))
                return ValidationReport::fail("(x . u) . y mixed axiom", {al, be, ga, i, p, j});
              if (m.act_right(ab, ga, m.act_right(al, be, u, x), y) !=
                  m.act_right(al, bg, u, o.product(be, ga, x, y)))
                return ValidationReport::fail("(u . x) . y mixed axiom", {al, be, ga, p, i, j});
            }
      }
  return ValidationReport::ok();
}

ValidationReport check_weighted_rb_family(const OperatorFamily& r, const Algebra& a,
                                          const Rational& lambda) {
  r.check_shapes();
  require(r.domain_dim == a.dim && r.codomain_dim == a.dim,
          "check_weighted_rb_family: square maps on A required");
  const auto& s = r.semigroup;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
          Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
          Vec rx = r.apply(al, x), ry = r.apply(be, y);
          Vec lhs = a.product(rx, ry);
          Vec rhs = r.apply(ab, a.product(rx, y) + a.product(x, ry) + lambda * a.product(x, y));
          if (lhs != rhs)
            return ValidationReport::fail(
                "R_a(x).R_b(y) = R_ab(R_a(x).y + x.R_b(y) + lambda x.y)", {al, be, i, j});
        }
    }
  return ValidationReport::ok();
}

namespace {

// prec[alpha](u,v) = u.T_alpha(v), succ[alpha](u,v) = T_alpha(u).v
void induced_prec_succ(const OperatorFamily& t, const Bimodule& m, std::vector<Tensor3>& prec,
                       std::vector<Tensor3>& succ) {
  const std::size_t d = m.module_dim;
  const auto& s = t.semigroup;
  prec.assign(s.size, Tensor3(d, d, d));
  succ.assign(s.size, Tensor3(d, d, d));
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        Vec u = unit_vec(d, p), v = unit_vec(d, q);
        Vec pv = m.act_right(u, t.apply(al, v));
        Vec sv = m.act_left(t.apply(al, u), v);
        for (std::size_t k = 0; k < d; ++k) {
          prec[al].at(p, q, k) = pv[k];
          succ[al].at(p, q, k) = sv[k];
        }
      }
}

}  // namespace

DendriformFamily dendriform_from_o_family(const OperatorFamily& t, const Algebra& a,
                                          const Bimodule& m) {
  if (auto rep = check_twisted_o_family(t, a, m); !rep)
    throw std::invalid_argument("dendriform_from_o_family: invalid O-operator family: " +
                                rep.describe());
  DendriformFamily d;
  d.semigroup = t.semigroup;
  d.dim = m.module_dim;
  induced_prec_succ(t, m, d.prec, d.succ);
  return d;
}

NsSource NsSource::twisted_o(const OperatorFamily& t, const Algebra& a, const Bimodule& m,
                             const Cocycle2* h) {
  NsSource s;
  s.kind = Kind::twisted_o;
  s.family = &t;
  s.algebra = &a;
  s.bimodule = &m;
  s.cocycle = h;
  return s;
}

NsSource NsSource::nijenhuis(const OperatorFamily& n, const Algebra& a) {
  NsSource s;
  s.kind = Kind::nijenhuis;
  s.family = &n;
  s.algebra = &a;
  return s;
}

NsSource NsSource::tridendriform(const TridendriformFamily& t) {
  NsSource s;
  s.kind = Kind::tridendriform;
  s.trid = &t;
  return s;
}

NsSource NsSource::weighted_rb(const OperatorFamily& r, const Algebra& a, const Rational& lambda) {
  NsSource s;
  s.kind = Kind::weighted_rb;
  s.family = &r;
  s.algebra = &a;
  s.lambda = lambda;
  return s;
}

NSFamily induce_ns_family(const NsSource& src) {
  switch (src.kind) {
    case NsSource::Kind::twisted_o: {
      const OperatorFamily& t = *src.family;
      const Algebra& a = *src.algebra;
      const Bimodule& m = *src.bimodule;
      if (auto rep = check_twisted_o_family(t, a, m, src.cocycle); !rep)
        throw std::invalid_argument("induce_ns_family: invalid twisted family: " + rep.describe());
      NSFamily n;
      n.semigroup = t.semigroup;
      n.dim = m.module_dim;
      induced_prec_succ(t, m, n.prec, n.succ);
      n.vee = zero_tensors(n.semigroup.size * n.semigroup.size, n.dim);
      if (src.cocycle) {
        // u vee_{a,b} v = H(T_a(u), T_b(v))
        for (std::size_t al = 0; al < n.semigroup.size; ++al)
          for (std::size_t be = 0; be < n.semigroup.size; ++be)
            for (std::size_t p = 0; p < n.dim; ++p)
              for (std::size_t q = 0; q < n.dim; ++q) {
                Vec val = src.cocycle->eval(t.apply(al, unit_vec(n.dim, p)),
                                            t.apply(be, unit_vec(n.dim, q)));
                for (std::size_t k = 0; k < n.dim; ++k) n.vee_at(al, be).at(p, q, k) = val[k];
              }
      }
      return n;
    }
    case NsSource::Kind::nijenhuis: {
      const OperatorFamily& nf = *src.family;
      const Algebra& a = *src.algebra;
      if (auto rep = check_nijenhuis_family(nf, *src.algebra); !rep)
        throw std::invalid_argument("induce_ns_family: invalid Nijenhuis family: " +
                                    rep.describe());
      NSFamily n;
      n.semigroup = nf.semigroup;
      n.dim = a.dim;
      n.prec.assign(n.semigroup.size, Tensor3(a.dim, a.dim, a.dim));
      n.succ.assign(n.semigroup.size, Tensor3(a.dim, a.dim, a.dim));
      n.vee = zero_tensors(n.semigroup.size * n.semigroup.size, a.dim);
      for (std::size_t al = 0; al < n.semigroup.size; ++al)
        for (std::size_t i = 0; i < a.dim; ++i)
          for (std::size_t j = 0; j < a.dim; ++j) {
            Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
            Vec pv = a.product(x, nf.apply(al, y));
            Vec sv = a.product(nf.apply(al, x), y);
            for (std::size_t k = 0; k < a.dim; ++k) {
              n.prec[al].at(i, j, k) = pv[k];
              n.succ[al].at(i, j, k) = sv[k];
            }
          }
      for (std::size_t al = 0; al < n.semigroup.size; ++al)
        for (std::size_t be = 0; be < n.semigroup.size; ++be) {
          std::size_t ab = n.semigroup.product(al, be);
          for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
              Vec val = nf.apply(ab, a.product(unit_vec(a.dim, i), unit_vec(a.dim, j)));
              for (std::size_t k = 0; k < a.dim; ++k) n.vee_at(al, be).at(i, j, k) = -val[k];
            }
        }
      return n;
    }
    case NsSource::Kind::tridendriform: {
      const auto& t = *src.trid;
      if (auto rep = validate_tridendriform_family(t); !rep)
        throw std::invalid_argument("induce_ns_family: invalid tridendriform family: " +
                                    rep.describe());
      NSFamily n;
      n.semigroup = t.semigroup;
      n.dim = t.dim;
      n.prec = t.prec;
      n.succ = t.succ;
      n.vee.assign(t.semigroup.size * t.semigroup.size, t.odot);
      return n;
    }
    case NsSource::Kind::weighted_rb: {
      const OperatorFamily& r = *src.family;
      const Algebra& a = *src.algebra;
      if (auto rep = check_weighted_rb_family(r, a, src.lambda); !rep)
        throw std::invalid_argument("induce_ns_family: invalid weighted Rota-Baxter family: " +
                                    rep.describe());
      NSFamily n;
      n.semigroup = r.semigroup;
      n.dim = a.dim;
      n.prec.assign(n.semigroup.size, Tensor3(a.dim, a.dim, a.dim));
      n.succ.assign(n.semigroup.size, Tensor3(a.dim, a.dim, a.dim));
      for (std::size_t al = 0; al < n.semigroup.size; ++al)
        for (std::size_t i = 0; i < a.dim; ++i)
          for (std::size_t j = 0; j < a.dim; ++j) {
            Vec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
            Vec pv = a.product(x, r.apply(al, y));
            Vec sv = a.product(r.apply(al, x), y);
            for (std::size_t k = 0; k < a.dim; ++k) {
              n.prec[al].at(i, j, k) = pv[k];
              n.succ[al].at(i, j, k) = sv[k];
            }
          }
      n.vee.assign(n.semigroup.size * n.semigroup.size, src.lambda * a.mult);
      return n;
    }
  }
  throw std::logic_error("induce_ns_family: unreachable");
}

NSAlgebra ns_family_to_ns_algebra(const NSFamily& n, const FiniteSemigroup& s) {
  if (auto rep = validate_ns_family(n); !rep)
    throw std::invalid_argument("ns_family_to_ns_algebra: invalid NS family: " + rep.describe());
  require(n.semigroup.size == s.size, "ns_family_to_ns_algebra: semigroup mismatch");

  const std::size_t d = n.dim, dd = d * s.size;
  NSAlgebra out;
  out.dim = dd;
  out.prec = Tensor3(dd, dd, dd);
  out.succ = Tensor3(dd, dd, dd);
  out.vee = Tensor3(dd, dd, dd);
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            std::size_t fi = extended_index(al, i, d), fj = extended_index(be, j, d),
                        fk = extended_index(ab, k, d);
            out.prec.at(fi, fj, fk) = n.prec[be].at(i, j, k);
            out.succ.at(fi, fj, fk) = n.succ[al].at(i, j, k);
            out.vee.at(fi, fj, fk) = n.vee_at(al, be).at(i, j, k);
          }
    }
  return out;
}

OmegaAssocAlgebra total_omega_assoc_from_ns(const NSFamily& n) {
  if (auto rep = validate_ns_family(n); !rep)
    throw std::invalid_argument("total_omega_assoc_from_ns: invalid NS family: " + rep.describe());
  OmegaAssocAlgebra o;
  o.semigroup = n.semigroup;
  o.dim = n.dim;
  o.mult.reserve(n.vee.size());
  for (std::size_t al = 0; al < n.semigroup.size; ++al)
    for (std::size_t be = 0; be < n.semigroup.size; ++be)
      o.mult.push_back(n.prec[be] + n.succ[al] + n.vee_at(al, be));
  if (auto rep = validate_omega_associative(o); !rep)
    throw std::logic_error("total_omega_assoc_from_ns: output not relatively associative: " +
                           rep.describe());
  return o;
}

OmegaContext omega_bimodule_from_twisted_family(const OperatorFamily& t, const Algebra& a,
                                                const Bimodule& m, const Cocycle2* h) {
  if (auto rep = check_twisted_o_family(t, a, m, h); !rep)
    throw std::invalid_argument("omega_bimodule_from_twisted_family: invalid family: " +
                                rep.describe());

  const auto& s = t.semigroup;
  const std::size_t dm = m.module_dim, da = a.dim;

  OmegaContext ctx;
  ctx.algebra.semigroup = s;
  ctx.algebra.dim = dm;
  ctx.bimodule.semigroup = s;
  ctx.bimodule.algebra_dim = dm;
  ctx.bimodule.module_dim = da;
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      Tensor3 mult(dm, dm, dm), left(dm, da, da), right(da, dm, da);
      for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t q = 0; q < dm; ++q) {
          Vec u = unit_vec(dm, p), v = unit_vec(dm, q);
          Vec tu = t.apply(al, u), tv = t.apply(be, v);
          Vec star = m.act_left(tu, v) + m.act_right(u, tv);
          if (h) star = star + h->eval(tu, tv);
          for (std::size_t k = 0; k < dm; ++k) mult.at(p, q, k) = star[k];
        }
      for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t i = 0; i < da; ++i) {
          Vec u = unit_vec(dm, p), x = unit_vec(da, i);
          Vec tu = t.apply(al, u);
          Vec lv = a.product(tu, x) - t.apply(ab, m.act_right(u, x));
          if (h) lv = lv - t.apply(ab, h->eval(tu, x));
          Vec tv = t.apply(be, u);
          Vec rv = a.product(x, tv) - t.apply(ab, m.act_left(x, u));
          if (h) rv = rv - t.apply(ab, h->eval(x, tv));
          for (std::size_t k = 0; k < da; ++k) {
            left.at(p, i, k) = lv[k];
            right.at(i, p, k) = rv[k];
          }
        }
      ctx.algebra.mult.push_back(std::move(mult));
      ctx.bimodule.left.push_back(std::move(left));
      ctx.bimodule.right.push_back(std::move(right));
    }

  if (auto rep = validate_omega_associative(ctx.algebra); !rep)
    throw std::logic_error("omega_bimodule_from_twisted_family: algebra fails: " + rep.describe());
  if (auto rep = validate_omega_bimodule(ctx.algebra, ctx.bimodule); !rep)
    throw std::logic_error("omega_bimodule_from_twisted_family: bimodule fails: " + rep.describe());
  return ctx;
}

ValidationReport is_algebra_morphism(const Matrix& phi, const Algebra& a1, const Algebra& a2) {
  require(phi.rows() == a2.dim && phi.cols() == a1.dim, "is_algebra_morphism: shape mismatch");
  for (std::size_t i = 0; i < a1.dim; ++i)
    for (std::size_t j = 0; j < a1.dim; ++j) {
      Vec x = unit_vec(a1.dim, i), y = unit_vec(a1.dim, j);
      if (phi.apply(a1.product(x, y)) != a2.product(phi.apply(x), phi.apply(y)))
        return ValidationReport::fail("phi(xy) = phi(x)phi(y)", {i, j});
    }
  return ValidationReport::ok();
}

ValidationReport is_dendriform_morphism(const Matrix& f, const DendriformFamily& d1,
                                        const DendriformFamily& d2) {
  require(f.rows() == d2.dim && f.cols() == d1.dim, "is_dendriform_morphism: shape mismatch");
  require(d1.semigroup.size == d2.semigroup.size, "is_dendriform_morphism: semigroup mismatch");
  for (std::size_t al = 0; al < d1.semigroup.size; ++al)
    for (std::size_t i = 0; i < d1.dim; ++i)
      for (std::size_t j = 0; j < d1.dim; ++j) {
        Vec x = unit_vec(d1.dim, i), y = unit_vec(d1.dim, j);
        if (f.apply(d1.prec[al].eval(x, y)) != d2.prec[al].eval(f.apply(x), f.apply(y)))
          return ValidationReport::fail("f(x <a y) = f(x) <a f(y)", {al, i, j});
        if (f.apply(d1.succ[al].eval(x, y)) != d2.succ[al].eval(f.apply(x), f.apply(y)))
          return ValidationReport::fail("f(x >a y) = f(x) >a f(y)", {al, i, j});
      }
  return ValidationReport::ok();
}

ValidationReport is_ns_morphism(const Matrix& f, const NSFamily& n1, const NSFamily& n2) {
  require(f.rows() == n2.dim && f.cols() == n1.dim, "is_ns_morphism: shape mismatch");
  require(n1.semigroup.size == n2.semigroup.size, "is_ns_morphism: semigroup mismatch");
  for (std::size_t al = 0; al < n1.semigroup.size; ++al)
    for (std::size_t i = 0; i < n1.dim; ++i)
      for (std::size_t j = 0; j < n1.dim; ++j) {
        Vec x = unit_vec(n1.dim, i), y = unit_vec(n1.dim, j);
        if (f.apply(n1.prec[al].eval(x, y)) != n2.prec[al].eval(f.apply(x), f.apply(y)))
          return ValidationReport::fail("f(x <a y) = f(x) <a f(y)", {al, i, j});
        if (f.apply(n1.succ[al].eval(x, y)) != n2.succ[al].eval(f.apply(x), f.apply(y)))
          return ValidationReport::fail("f(x >a y) = f(x) >a f(y)", {al, i, j});
      }
  for (std::size_t al = 0; al < n1.semigroup.size; ++al)
    for (std::size_t be = 0; be < n1.semigroup.size; ++be)
      for (std::size_t i = 0; i < n1.dim; ++i)
        for (std::size_t j = 0; j < n1.dim; ++j) {
          Vec x = unit_vec(n1.dim, i), y = unit_vec(n1.dim, j);
          if (f.apply(n1.vee_at(al, be).eval(x, y)) !=
              n2.vee_at(al, be).eval(f.apply(x), f.apply(y)))
            return ValidationReport::fail("f(x v_ab y) = f(x) v_ab f(y)", {al, be, i, j});
        }
  return ValidationReport::ok();
}

ValidationReport is_o_family_morphism(const Matrix& phi, const Matrix& psi,
                                      const OperatorFamily& t1, const Algebra& a1,
                                      const Bimodule& m1, const Cocycle2* h1,
                                      const OperatorFamily& t2, const Algebra& a2,
                                      const Bimodule& m2, const Cocycle2* h2) {
  require(phi.rows() == a2.dim && phi.cols() == a1.dim, "is_o_family_morphism: phi shape mismatch");
  require(psi.rows() == m2.module_dim && psi.cols() == m1.module_dim,
          "is_o_family_morphism: psi shape mismatch");
  require(t1.semigroup.size == t2.semigroup.size, "is_o_family_morphism: semigroup mismatch");

  if (auto rep = is_algebra_morphism(phi, a1, a2); !rep) return rep;

  for (std::size_t i = 0; i < a1.dim; ++i)
    for (std::size_t p = 0; p < m1.module_dim; ++p) {
      Vec x = unit_vec(a1.dim, i), u = unit_vec(m1.module_dim, p);
      if (psi.apply(m1.act_left(x, u)) != m2.act_left(phi.apply(x), psi.apply(u)))
        return ValidationReport::fail("psi(a.u) = phi(a).psi(u)", {i, p});
      if (psi.apply(m1.act_right(u, x)) != m2.act_right(psi.apply(u), phi.apply(x)))
        return ValidationReport::fail("psi(u.a) = psi(u).phi(a)", {p, i});
    }
  for (std::size_t al = 0; al < t1.semigroup.size; ++al)
    if (!(phi * t1.map(al) == t2.map(al) * psi))
      return ValidationReport::fail("phi T_a = T'_a psi", {al});
  if (h1 && h2) {
    for (std::size_t i = 0; i < a1.dim; ++i)
      for (std::size_t j = 0; j < a1.dim; ++j) {
        Vec x = unit_vec(a1.dim, i), y = unit_vec(a1.dim, j);
        if (psi.apply(h1->eval(x, y)) != h2->eval(phi.apply(x), phi.apply(y)))
          return ValidationReport::fail("psi H = H'(phi,phi)", {i, j});
      }
  }
  return ValidationReport::ok();
}

ValidationReport check_morphism_transport(const Matrix& phi, const Matrix& psi,
                                          const OperatorFamily& t1, const Algebra& a1,
                                          const Bimodule& m1, const Cocycle2* h1,
                                          const OperatorFamily& t2, const Algebra& a2,
                                          const Bimodule& m2, const Cocycle2* h2) {
  if (auto rep = is_o_family_morphism(phi, psi, t1, a1, m1, h1, t2, a2, m2, h2); !rep) return rep;
  NSFamily from = induce_ns_family(NsSource::twisted_o(t1, a1, m1, h1));
  NSFamily to = induce_ns_family(NsSource::twisted_o(t2, a2, m2, h2));
  return is_ns_morphism(psi, from, to);
}

TotContext total_context(const NSFamily& n) {
  if (auto rep = validate_ns_family(n); !rep)
    throw std::invalid_argument("total_context: invalid NS family: " + rep.describe());
  const auto& s = n.semigroup;
  const std::size_t d = n.dim, dd = d * s.size;

  TotContext ctx;
  ctx.tot.dim = dd;
  ctx.tot.mult = Tensor3(dd, dd, dd);
  ctx.bimodule.algebra_dim = dd;
  ctx.bimodule.module_dim = d;
  ctx.bimodule.left = Tensor3(dd, d, d);
  ctx.bimodule.right = Tensor3(d, dd, d);
  ctx.cocycle.algebra_dim = dd;
  ctx.cocycle.module_dim = d;
  ctx.cocycle.h = Tensor3(dd, dd, d);

  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t be = 0; be < s.size; ++be) {
      std::size_t ab = s.product(al, be);
      Tensor3 star = n.prec[be] + n.succ[al] + n.vee_at(al, be);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            ctx.tot.mult.at(extended_index(al, i, d), extended_index(be, j, d),
                            extended_index(ab, k, d)) = star.at(i, j, k);
            ctx.cocycle.h.at(extended_index(al, i, d), extended_index(be, j, d), k) =
                n.vee_at(al, be).at(i, j, k);
          }
    }
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          // (x (x) alpha).y = x >_alpha y and y.(x (x) alpha) = y <_alpha x
          ctx.bimodule.left.at(extended_index(al, i, d), j, k) = n.succ[al].at(i, j, k);
          ctx.bimodule.right.at(j, extended_index(al, i, d), k) = n.prec[al].at(j, i, k);
        }

  if (auto rep = validate_algebra(ctx.tot); !rep)
    throw std::logic_error("total_context: total product not associative: " + rep.describe());
  if (auto rep = validate_bimodule(ctx.tot, ctx.bimodule); !rep)
    throw std::logic_error("total_context: bimodule axioms fail: " + rep.describe());
  if (auto rep = validate_2cocycle(ctx.tot, ctx.bimodule, ctx.cocycle); !rep)
    throw std::logic_error("total_context: vee cocycle identity fails: " + rep.describe());

  ctx.id_family.semigroup = s;
  ctx.id_family.domain_dim = d;
  ctx.id_family.codomain_dim = dd;
  for (std::size_t al = 0; al < s.size; ++al) {
    Matrix id_al(dd, d);
    for (std::size_t i = 0; i < d; ++i) id_al.at(extended_index(al, i, d), i) = Rational(1);
    ctx.id_family.maps.push_back(std::move(id_al));
  }
  if (auto rep = check_twisted_o_family(ctx.id_family, ctx.tot, ctx.bimodule, &ctx.cocycle); !rep)
    throw std::logic_error("total_context: Id family fails the twisted check: " + rep.describe());
  return ctx;
}

MorphismPair adjunction_transport(const NSFamily& d, const OperatorFamily& t, const Algebra& a,
                                  const Bimodule& m, const Cocycle2* h, const Matrix& f) {
  NSFamily induced = induce_ns_family(NsSource::twisted_o(t, a, m, h));
  if (auto rep = is_ns_morphism(f, d, induced); !rep)
    throw std::invalid_argument("adjunction_transport: f is not a family-algebra morphism: " +
                                rep.describe());

  TotContext tc = total_context(d);
  const std::size_t dd = d.dim * d.semigroup.size;

  // T^f(x (x) alpha) = T_alpha(f(x))
  Matrix tf(a.dim, dd);
  for (std::size_t al = 0; al < d.semigroup.size; ++al)
    for (std::size_t i = 0; i < d.dim; ++i)
      tf.set_col(extended_index(al, i, d.dim), t.apply(al, f.apply(unit_vec(d.dim, i))));

  if (auto rep = is_algebra_morphism(tf, tc.tot, a); !rep)
    throw std::logic_error("adjunction_transport: T^f is not an algebra morphism: " +
                           rep.describe());
  Cocycle2 zero_h = Cocycle2::zero(a.dim, m.module_dim);
  const Cocycle2* h_eff = h ? h : &zero_h;
  if (auto rep = is_o_family_morphism(tf, f, tc.id_family, tc.tot, tc.bimodule, &tc.cocycle, t, a,
                                      m, h_eff);
      !rep)
    throw std::logic_error("adjunction_transport: (T^f, f) fails the morphism equations: " +
                           rep.describe());
  return {tf, f};
}

}  // namespace famalg
