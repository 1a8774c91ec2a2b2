#include "famalg/cohomology.hpp"

#include <random>

namespace famalg {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

namespace {

std::size_t flat_tuple(const std::vector<std::size_t>& t, std::size_t base) {
  std::size_t f = 0;
  for (auto x : t) f = f * base + x;
  return f;
}

std::vector<std::size_t> drop_slot(const std::vector<std::size_t>& t, std::size_t slot) {
  std::vector<std::size_t> r;
  r.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != slot) r.push_back(t[i]);
  return r;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

// f is a multilinear map (target x d^k) on the tensor power basis; evaluate on
// arbitrary coordinate vectors.
Vec eval_multilinear(const Matrix& f, const std::vector<const Vec*>& args, std::size_t d) {
  const std::size_t k = args.size();
  Vec out(f.rows());
  if (k == 0) return f.col(0);
  std::vector<std::size_t> j(k, 0);
  do {
    Rational coeff(1);
    bool zero = false;
    for (std::size_t i = 0; i < k && !zero; ++i) {
      const Rational& c = (*args[i])[j[i]];
      if (c.is_zero()) zero = true;
      else coeff *= c;
    }
    if (!zero) {
      std::size_t col = flat_tuple(j, d);
      for (std::size_t r = 0; r < f.rows(); ++r)
        if (!f.at(r, col).is_zero()) out[r] += coeff * f.at(r, col);
    }
  } while (next_tuple(j, d));
  return out;
}

}  // namespace

IndexMaps index_maps(std::size_t m, std::size_t i, std::size_t n, std::size_t r) {
  if (i < 1 || i > m || r < 1 || r > m + n - 1)
    throw std::invalid_argument("index_maps: label out of domain");
  IndexMaps out{};
  if (r <= i - 1) {
    out.r_label = r;
    out.s_is_full_sum = true;
  } else if (r <= i + n - 1) {
    out.r_label = i;
    out.s_is_full_sum = false;
    out.s_label = r - i + 1;
  } else {
    out.r_label = r - n + 1;
    out.s_is_full_sum = true;
  }
  return out;
}

bool NSfamCochain::top_component_is_zero() const {
  if (degree < 2) return true;
  for (const auto& m : comps.at(degree))
    if (!m.is_zero()) return false;
  return true;
}

ComplexDescriptor ComplexDescriptor::omega_hoch(OmegaHochContext ctx) {
  if (auto rep = validate_omega_associative(ctx.algebra); !rep)
    throw std::invalid_argument("omega_hoch context: algebra invalid: " + rep.describe());
  if (auto rep = validate_omega_bimodule(ctx.algebra, ctx.bimodule); !rep)
    throw std::invalid_argument("omega_hoch context: bimodule invalid: " + rep.describe());
  ComplexDescriptor d;
  d.tag = ComplexTag::omega_hoch;
  d.omega = std::move(ctx);
  return d;
}

ComplexDescriptor ComplexDescriptor::twooperf(TwFamilyContext ctx) {
  if (auto rep = check_twisted_o_family(ctx.family, ctx.algebra, ctx.bimodule, ctx.h()); !rep)
    throw std::invalid_argument("twooperf context: family invalid: " + rep.describe());
  ComplexDescriptor d;
  d.tag = ComplexTag::twooperf;
  d.tw = std::move(ctx);
  return d;
}

ComplexDescriptor ComplexDescriptor::nsfam(NSFamily n) {
  if (auto rep = validate_ns_family(n); !rep)
    throw std::invalid_argument("nsfam context: family invalid: " + rep.describe());
  ComplexDescriptor d;
  d.tag = ComplexTag::nsfam;
  d.ns = std::move(n);
  return d;
}

ComplexDescriptor ComplexDescriptor::dendfam(NSFamily n) {
  if (!n.vee_is_zero())
    throw std::invalid_argument("dendfam context: vee operations must vanish");
  if (auto rep = validate_ns_family(n); !rep)
    throw std::invalid_argument("dendfam context: family invalid: " + rep.describe());
  ComplexDescriptor d;
  d.tag = ComplexTag::dendfam;
  d.ns = std::move(n);
  return d;
}

const FiniteSemigroup& ComplexDescriptor::semigroup() const {
  switch (tag) {
    case ComplexTag::omega_hoch: return omega->algebra.semigroup;
    case ComplexTag::twooperf: return tw->family.semigroup;
    default: return ns->semigroup;
  }
}

std::size_t ComplexDescriptor::start_degree() const {
  switch (tag) {
    case ComplexTag::omega_hoch:
    case ComplexTag::twooperf:
      return semigroup().is_unital() ? 0 : 1;
    default:
      return 1;
  }
}

namespace {

struct TupleDims {
  std::size_t src;  // dimension of the argument space
  std::size_t tgt;  // dimension of the value space
};

TupleDims tuple_dims(const ComplexDescriptor& ctx) {
  if (ctx.tag == ComplexTag::omega_hoch)
    return {ctx.omega->algebra.dim, ctx.omega->bimodule.module_dim};
  return {ctx.tw->bimodule.module_dim, ctx.tw->algebra.dim};
}

}  // namespace

std::size_t ComplexDescriptor::cochain_dim(std::size_t degree) const {
  const std::size_t omega_size = semigroup().size;
  if (tag == ComplexTag::omega_hoch || tag == ComplexTag::twooperf) {
    TupleDims d = tuple_dims(*this);
    if (degree == 0) return d.tgt;
    return ipow(omega_size, degree) * ipow(d.src, degree) * d.tgt;
  }
  const std::size_t d = ns->dim;
  if (degree == 0) throw std::invalid_argument("NS complex starts at degree 1");
  std::size_t per_map = ipow(d, degree) * d;
  std::size_t count = degree * ipow(omega_size, degree - 1);
  if (degree >= 2 && tag == ComplexTag::nsfam) count += ipow(omega_size, degree);
  return count * per_map;
}

TupleCochain delta_omega_hoch(const TupleCochain& c, const OmegaAssocAlgebra& o,
                              const OmegaBimodule& b) {
  const auto& s = o.semigroup;
  const std::size_t src = o.dim, tgt = b.module_dim;

  TupleCochain out;
  out.degree = c.degree + 1;

  if (c.degree == 0) {
    if (!s.unit) throw std::invalid_argument("delta at degree 0 requires a unital semigroup");
    std::size_t e = *s.unit;
    out.maps.assign(s.size, Matrix(tgt, src));
    for (std::size_t al = 0; al < s.size; ++al)
      for (std::size_t j = 0; j < src; ++j) {
        Vec x = unit_vec(src, j);
        Vec val = b.act_left(al, e, x, c.value0) - b.act_right(e, al, c.value0, x);
        out.maps[al].set_col(j, val);
      }
    return out;
  }

  const std::size_t n = c.degree;
  out.maps.assign(ipow(s.size, n + 1), Matrix(tgt, ipow(src, n + 1)));

  std::vector<std::size_t> omega(n + 1, 0);
  do {
    Matrix& target = out.maps[flat_tuple(omega, s.size)];
    std::vector<std::size_t> tail(omega.begin() + 1, omega.end());
    std::vector<std::size_t> head(omega.begin(), omega.end() - 1);
    std::size_t prod_tail = s.product_all(tail);
    std::size_t prod_head = s.product_all(head);
    const Matrix& f_tail = c.maps[flat_tuple(tail, s.size)];
    const Matrix& f_head = c.maps[flat_tuple(head, s.size)];

    std::vector<std::size_t> jj(n + 1, 0);
    do {
      std::vector<Vec> basis_args;
      basis_args.reserve(n + 1);
      for (std::size_t i = 0; i <= n; ++i) basis_args.push_back(unit_vec(src, jj[i]));

      // a_1 . f(a_2,...,a_{n+1})
      Vec f_val = f_tail.col(flat_tuple(std::vector<std::size_t>(jj.begin() + 1, jj.end()), src));
      Vec val = b.act_left(omega[0], prod_tail, basis_args[0], f_val);

      // alternating merged products through the i-th slot
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::size_t> merged = omega;
        merged[i - 1] = s.product(omega[i - 1], omega[i]);
        merged.erase(merged.begin() + i);
        Vec w = o.product(omega[i - 1], omega[i], basis_args[i - 1], basis_args[i]);
        std::vector<const Vec*> args;
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == i - 1) args.push_back(&w);
          else if (k != i) args.push_back(&basis_args[k]);
        }
        Vec term = eval_multilinear(c.maps[flat_tuple(merged, s.size)], args, src);
        if (i % 2 == 1) val = val - term;
        else val = val + term;
      }

      // f(a_1,...,a_n) . a_{n+1}
      Vec f_val2 = f_head.col(flat_tuple(std::vector<std::size_t>(jj.begin(), jj.end() - 1), src));
      Vec last = b.act_right(prod_head, omega[n], f_val2, basis_args[n]);
      if ((n + 1) % 2 == 1) val = val - last;
      else val = val + last;

      target.set_col(flat_tuple(jj, src), val);
    } while (next_tuple(jj, src));
  } while (next_tuple(omega, s.size));
  return out;
}

std::vector<Matrix> twooperf_element_image(const Vec& theta, const OperatorFamily& t,
                                           const Algebra& a, const Bimodule& m,
                                           const Cocycle2* h) {
  const auto& s = t.semigroup;
  const std::size_t src = m.module_dim, tgt = a.dim;
  std::vector<Matrix> maps(s.size, Matrix(tgt, src));
  for (std::size_t al = 0; al < s.size; ++al)
    for (std::size_t p = 0; p < src; ++p) {
      Vec u = unit_vec(src, p);
      Vec tu = t.apply(al, u);
      Vec val = a.product(tu, theta) - t.apply(al, m.act_right(u, theta)) -
                a.product(theta, tu) + t.apply(al, m.act_left(theta, u));
      if (h) val = val - t.apply(al, h->eval(tu, theta)) + t.apply(al, h->eval(theta, tu));
      maps[al].set_col(p, val);
    }
  return maps;
}

TupleCochain delta_twooperf(const TupleCochain& c, const OperatorFamily& t, const Algebra& a,
                            const Bimodule& m, const Cocycle2* h) {
  const auto& s = t.semigroup;
  const std::size_t src = m.module_dim, tgt = a.dim;

  TupleCochain out;
  out.degree = c.degree + 1;

  if (c.degree == 0) {
    if (!s.unit) throw std::invalid_argument("delta at degree 0 requires a unital semigroup");
    out.maps = twooperf_element_image(c.value0, t, a, m, h);
    return out;
  }

  const std::size_t n = c.degree;
  out.maps.assign(ipow(s.size, n + 1), Matrix(tgt, ipow(src, n + 1)));

  std::vector<std::size_t> omega(n + 1, 0);
  do {
    Matrix& target = out.maps[flat_tuple(omega, s.size)];
    std::vector<std::size_t> tail(omega.begin() + 1, omega.end());
    std::vector<std::size_t> head(omega.begin(), omega.end() - 1);
    std::size_t prod_all = s.product_all(omega);
    const Matrix& f_tail = c.maps[flat_tuple(tail, s.size)];
    const Matrix& f_head = c.maps[flat_tuple(head, s.size)];

    std::vector<std::size_t> jj(n + 1, 0);
    do {
      std::vector<Vec> basis_args;
      basis_args.reserve(n + 1);
      for (std::size_t i = 0; i <= n; ++i) basis_args.push_back(unit_vec(src, jj[i]));

      Vec u1 = basis_args[0];
      Vec tu1 = t.apply(omega[0], u1);
      Vec f_val = f_tail.col(flat_tuple(std::vector<std::size_t>(jj.begin() + 1, jj.end()), src));

      // T_{a1}(u1).f(...) - T_{a1...}(u1.f(...)) - T_{a1...}(H(T_{a1} u1, f(...)))
      Vec val = a.product(tu1, f_val) - t.apply(prod_all, m.act_right(u1, f_val));
      if (h) val = val - t.apply(prod_all, h->eval(tu1, f_val));

      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::size_t> merged = omega;
        merged[i - 1] = s.product(omega[i - 1], omega[i]);
        merged.erase(merged.begin() + i);
        Vec tui = t.apply(omega[i - 1], basis_args[i - 1]);
        Vec tui1 = t.apply(omega[i], basis_args[i]);
        Vec w = m.act_left(tui, basis_args[i]) + m.act_right(basis_args[i - 1], tui1);
        if (h) w = w + h->eval(tui, tui1);
        std::vector<const Vec*> args;
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == i - 1) args.push_back(&w);
          else if (k != i) args.push_back(&basis_args[k]);
        }
        Vec term = eval_multilinear(c.maps[flat_tuple(merged, s.size)], args, src);
        if (i % 2 == 1) val = val - term;
        else val = val + term;
      }

      // +- [ f(...).T(u_{n+1}) - T_{a1...}(f(...).u_{n+1}) - T_{a1...}(H(f(...), T u_{n+1})) ]
      Vec g = f_head.col(flat_tuple(std::vector<std::size_t>(jj.begin(), jj.end() - 1), src));
      Vec tun = t.apply(omega[n], basis_args[n]);
      Vec last = a.product(g, tun) - t.apply(prod_all, m.act_left(g, basis_args[n]));
      if (h) last = last - t.apply(prod_all, h->eval(g, tun));
      if ((n + 1) % 2 == 1) val = val - last;
      else val = val + last;

      target.set_col(flat_tuple(jj, src), val);
    } while (next_tuple(jj, src));
  } while (next_tuple(omega, s.size));
  return out;
}

namespace {

// pi^{[1]}_{a,b} = prec_b, pi^{[2]}_{a,b} = succ_a, pi^{[3]}_{a,b} = vee_{a,b}
Vec eval_pi(const NSFamily& fam, std::size_t label, std::size_t alpha, std::size_t beta,
            const Vec& x, const Vec& y) {
  switch (label) {
    case 1: return fam.prec[beta].eval(x, y);
    case 2: return fam.succ[alpha].eval(x, y);
    case 3: return fam.vee_at(alpha, beta).eval(x, y);
  }
  throw std::logic_error("eval_pi: bad label");
}

Vec eval_pi_maps(const NSFamily& fam, const IndexMaps& im, std::size_t alpha, std::size_t beta,
                 const Vec& x, const Vec& y) {
  if (!im.s_is_full_sum) return eval_pi(fam, im.s_label, alpha, beta, x, y);
  return eval_pi(fam, 1, alpha, beta, x, y) + eval_pi(fam, 2, alpha, beta, x, y) +
         eval_pi(fam, 3, alpha, beta, x, y);
}

// component [label] of f at the full tuple; labels above the stored range are zero
Vec eval_f_comp(const NSfamCochain& f, std::size_t label, const std::vector<std::size_t>& omega,
                const std::vector<const Vec*>& args, std::size_t d, std::size_t omega_size) {
  const std::size_t n = f.degree;
  if (label <= n) {
    const auto& table = f.comps[label - 1];
    return eval_multilinear(table[flat_tuple(drop_slot(omega, label - 1), omega_size)], args, d);
  }
  if (label == n + 1 && n >= 2)
    return eval_multilinear(f.comps[n][flat_tuple(omega, omega_size)], args, d);
  return Vec(d);
}

Vec eval_f_sum(const NSfamCochain& f, const std::vector<std::size_t>& omega,
               const std::vector<const Vec*>& args, std::size_t d, std::size_t omega_size) {
  Vec out(d);
  for (std::size_t label = 1; label <= f.degree + 1; ++label)
    out = out + eval_f_comp(f, label, omega, args, d, omega_size);
  return out;
}

Vec eval_f_maps(const NSfamCochain& f, const IndexMaps& im, const std::vector<std::size_t>& omega,
                const std::vector<const Vec*>& args, std::size_t d, std::size_t omega_size) {
  if (im.s_is_full_sum) return eval_f_sum(f, omega, args, d, omega_size);
  return eval_f_comp(f, im.s_label, omega, args, d, omega_size);
}

}  // namespace

NSfamCochain delta_nsfam(const NSfamCochain& c, const NSFamily& fam) {
  const auto& s = fam.semigroup;
  const std::size_t d = fam.dim;
  const std::size_t n = c.degree;
  const std::size_t out_deg = n + 1;

  NSfamCochain out;
  out.degree = out_deg;
  out.comps.assign(out_deg + 1, {});
  for (std::size_t c2 = 0; c2 < out_deg; ++c2)
    out.comps[c2].assign(ipow(s.size, out_deg - 1), Matrix(d, ipow(d, out_deg)));
  out.comps[out_deg].assign(ipow(s.size, out_deg), Matrix(d, ipow(d, out_deg)));

  std::vector<std::size_t> omega(out_deg, 0);
  do {
    std::vector<std::size_t> tail(omega.begin() + 1, omega.end());
    std::vector<std::size_t> head(omega.begin(), omega.end() - 1);
    std::size_t prod_tail = s.product_all(tail);
    std::size_t prod_head = s.product_all(head);

    std::vector<std::size_t> jj(out_deg, 0);
    do {
      std::vector<Vec> basis_args;
      basis_args.reserve(out_deg);
      for (std::size_t i = 0; i < out_deg; ++i) basis_args.push_back(unit_vec(d, jj[i]));
      std::vector<const Vec*> tail_args, head_args;
      for (std::size_t i = 1; i < out_deg; ++i) tail_args.push_back(&basis_args[i]);
      for (std::size_t i = 0; i + 1 < out_deg; ++i) head_args.push_back(&basis_args[i]);

      // middle terms are shared between the generic and top formulas via index_maps
      auto middle_term = [&](std::size_t r) {
        Vec acc(d);
        for (std::size_t i = 1; i <= n; ++i) {
          IndexMaps im = index_maps(n, i, 2, r);
          std::vector<std::size_t> merged = omega;
          merged[i - 1] = s.product(omega[i - 1], omega[i]);
          merged.erase(merged.begin() + i);
          Vec w = eval_pi_maps(fam, im, omega[i - 1], omega[i], basis_args[i - 1], basis_args[i]);
          std::vector<const Vec*> args;
          for (std::size_t k = 0; k < out_deg; ++k) {
            if (k == i - 1) args.push_back(&w);
            else if (k != i) args.push_back(&basis_args[k]);
          }
          Vec term = eval_f_comp(c, im.r_label, merged, args, d, s.size);
          if (i % 2 == 1) acc = acc - term;
          else acc = acc + term;
        }
        return acc;
      };

      for (std::size_t r = 1; r <= out_deg; ++r) {
        // pi o_2 f part
        IndexMaps im1 = index_maps(2, 2, n, r);
        Vec fv1 = eval_f_maps(c, im1, tail, tail_args, d, s.size);
        Vec val = eval_pi(fam, im1.r_label, omega[0], prod_tail, basis_args[0], fv1);
        val = val + middle_term(r);
        // pi o_1 f part
        IndexMaps im2 = index_maps(2, 1, n, r);
        Vec fv2 = eval_f_maps(c, im2, head, head_args, d, s.size);
        Vec last = eval_pi(fam, im2.r_label, prod_head, omega[out_deg - 1], fv2,
                           basis_args[out_deg - 1]);
        if (out_deg % 2 == 1) val = val - last;
        else val = val + last;

        // component [r] may not depend on alpha_r: write at the representative
        // alpha_r = 0, compare at every other value
        std::size_t idx = flat_tuple(drop_slot(omega, r - 1), s.size);
        std::size_t col = flat_tuple(jj, d);
        Matrix& target = out.comps[r - 1][idx];
        if (omega[r - 1] == 0) {
          target.set_col(col, val);
        } else if (target.col(col) != val) {
          throw std::logic_error("delta_nsfam: component depends on its constrained index");
        }
      }

      // top component [n+2]
      {
        Vec f_top_tail = eval_f_comp(c, n + 1, tail, tail_args, d, s.size);
        Vec f_sum_tail = eval_f_sum(c, tail, tail_args, d, s.size);
        Vec val = eval_pi(fam, 2, omega[0], prod_tail, basis_args[0], f_top_tail) +
                  eval_pi(fam, 3, omega[0], prod_tail, basis_args[0], f_sum_tail);

        for (std::size_t i = 1; i <= n; ++i) {
          std::vector<std::size_t> merged = omega;
          merged[i - 1] = s.product(omega[i - 1], omega[i]);
          merged.erase(merged.begin() + i);
          Vec w3 = eval_pi(fam, 3, omega[i - 1], omega[i], basis_args[i - 1], basis_args[i]);
          Vec wsum = eval_pi(fam, 1, omega[i - 1], omega[i], basis_args[i - 1], basis_args[i]) +
                     eval_pi(fam, 2, omega[i - 1], omega[i], basis_args[i - 1], basis_args[i]) +
                     w3;
          std::vector<const Vec*> args3, argss;
          for (std::size_t k = 0; k < out_deg; ++k) {
            if (k == i - 1) {
              args3.push_back(&w3);
              argss.push_back(&wsum);
            } else if (k != i) {
              args3.push_back(&basis_args[k]);
              argss.push_back(&basis_args[k]);
            }
          }
          Vec term = eval_f_comp(c, i, merged, args3, d, s.size) +
                     eval_f_comp(c, n + 1, merged, argss, d, s.size);
          if (i % 2 == 1) val = val - term;
          else val = val + term;
        }

        Vec f_top_head = eval_f_comp(c, n + 1, head, head_args, d, s.size);
        Vec f_sum_head = eval_f_sum(c, head, head_args, d, s.size);
        Vec last = eval_pi(fam, 1, prod_head, omega[out_deg - 1], f_top_head,
                           basis_args[out_deg - 1]) +
                   eval_pi(fam, 3, prod_head, omega[out_deg - 1], f_sum_head,
                           basis_args[out_deg - 1]);
        if (out_deg % 2 == 1) val = val - last;
        else val = val + last;

        out.comps[out_deg][flat_tuple(omega, s.size)].set_col(flat_tuple(jj, d), val);
      }
    } while (next_tuple(jj, d));
  } while (next_tuple(omega, s.size));
  return out;
}

NSfamCochain delta_dendfam(const NSfamCochain& c, const NSFamily& fam) {
  if (!fam.vee_is_zero())
    throw std::invalid_argument("delta_dendfam: context is not a dendriform family");
  if (!c.top_component_is_zero())
    throw std::invalid_argument("delta_dendfam: input lies outside the subcomplex");
  NSfamCochain out = delta_nsfam(c, fam);
  if (!out.top_component_is_zero())
    throw std::logic_error("delta_dendfam: subcomplex is not closed");
  return out;
}

TupleCochain apply_delta(const ComplexDescriptor& ctx, const TupleCochain& c) {
  switch (ctx.tag) {
    case ComplexTag::omega_hoch:
      return delta_omega_hoch(c, ctx.omega->algebra, ctx.omega->bimodule);
    case ComplexTag::twooperf:
      return delta_twooperf(c, ctx.tw->family, ctx.tw->algebra, ctx.tw->bimodule, ctx.tw->h());
    default:
      throw std::invalid_argument("apply_delta: tuple cochain on an NS-type complex");
  }
}

NSfamCochain apply_delta(const ComplexDescriptor& ctx, const NSfamCochain& c) {
  switch (ctx.tag) {
    case ComplexTag::nsfam:
      return delta_nsfam(c, *ctx.ns);
    case ComplexTag::dendfam:
      return delta_dendfam(c, *ctx.ns);
    default:
      throw std::invalid_argument("apply_delta: NS cochain on a tuple complex");
  }
}

namespace {

bool is_tuple_complex(const ComplexDescriptor& ctx) {
  return ctx.tag == ComplexTag::omega_hoch || ctx.tag == ComplexTag::twooperf;
}

// Component layout of an NS cochain basis: labelled components in order, the
// top (full) table last; within a component: tuple major, then input
// multi-index, then target coordinate.
struct NsLayout {
  std::size_t degree;
  std::size_t d;
  std::size_t omega;
  std::size_t reduced_tables;   // |Omega|^{degree-1}
  std::size_t full_tables;      // |Omega|^{degree}, 0 when degree == 1
  std::size_t per_map;          // d^{degree} * d
  std::size_t reduced_comp_size() const { return reduced_tables * per_map; }
};

NsLayout ns_layout(const ComplexDescriptor& ctx, std::size_t degree) {
  NsLayout l;
  l.degree = degree;
  l.d = ctx.ns->dim;
  l.omega = ctx.semigroup().size;
  l.reduced_tables = ipow(l.omega, degree - 1);
  l.full_tables = degree >= 2 ? ipow(l.omega, degree) : 0;
  l.per_map = ipow(l.d, degree) * l.d;
  return l;
}

bool ns_has_top(const ComplexDescriptor& ctx, std::size_t degree) {
  return degree >= 2 && ctx.tag == ComplexTag::nsfam;
}

}  // namespace

TupleCochain tuple_basis_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                 std::size_t index) {
  TupleDims dims = tuple_dims(ctx);
  TupleCochain c;
  c.degree = degree;
  if (degree == 0) {
    c.value0 = Vec(dims.tgt);
    c.value0.at(index) = Rational(1);
    return c;
  }
  std::size_t per_tuple = ipow(dims.src, degree) * dims.tgt;
  std::size_t tuple = index / per_tuple;
  std::size_t rest = index % per_tuple;
  std::size_t col = rest / dims.tgt;
  std::size_t k = rest % dims.tgt;
  c.maps.assign(ipow(ctx.semigroup().size, degree), Matrix(dims.tgt, ipow(dims.src, degree)));
  c.maps[tuple].at(k, col) = Rational(1);
  return c;
}

NSfamCochain nsfam_basis_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                 std::size_t index) {
  NsLayout l = ns_layout(ctx, degree);
  NSfamCochain c;
  c.degree = degree;
  c.comps.assign(degree >= 2 ? degree + 1 : degree, {});
  for (std::size_t comp = 0; comp < degree; ++comp)
    c.comps[comp].assign(l.reduced_tables, Matrix(l.d, ipow(l.d, degree)));
  if (degree >= 2) c.comps[degree].assign(ipow(l.omega, degree), Matrix(l.d, ipow(l.d, degree)));

  std::size_t comp = index / l.reduced_comp_size();
  if (comp < degree) {
    std::size_t rest = index % l.reduced_comp_size();
    std::size_t table = rest / l.per_map;
    std::size_t inside = rest % l.per_map;
    c.comps[comp][table].at(inside % l.d, inside / l.d) = Rational(1);
    return c;
  }
  if (!ns_has_top(ctx, degree))
    throw std::out_of_range("nsfam_basis_cochain: index out of range");
  std::size_t rest = index - degree * l.reduced_comp_size();
  std::size_t table = rest / l.per_map;
  std::size_t inside = rest % l.per_map;
  if (table >= l.full_tables) throw std::out_of_range("nsfam_basis_cochain: index out of range");
  c.comps[degree][table].at(inside % l.d, inside / l.d) = Rational(1);
  return c;
}

Vec flatten_cochain(const ComplexDescriptor& ctx, const TupleCochain& c) {
  TupleDims dims = tuple_dims(ctx);
  if (c.degree == 0) return c.value0;
  Vec out;
  out.reserve(ctx.cochain_dim(c.degree));
  for (const auto& m : c.maps)
    for (std::size_t col = 0; col < m.cols(); ++col)
      for (std::size_t k = 0; k < dims.tgt; ++k) out.push_back(m.at(k, col));
  return out;
}

Vec flatten_cochain(const ComplexDescriptor& ctx, const NSfamCochain& c) {
  NsLayout l = ns_layout(ctx, c.degree);
  Vec out;
  std::size_t comps = c.degree;
  bool top = ns_has_top(ctx, c.degree);
  for (std::size_t comp = 0; comp < comps + (top ? 1 : 0); ++comp)
    for (const auto& m : c.comps[comp])
      for (std::size_t col = 0; col < m.cols(); ++col)
        for (std::size_t k = 0; k < l.d; ++k) out.push_back(m.at(k, col));
  return out;
}

Matrix assemble_delta(const ComplexDescriptor& ctx, std::size_t degree, std::size_t entry_budget) {
  bool tuple = is_tuple_complex(ctx);
  std::size_t cols = ctx.cochain_dim(degree);
  std::size_t rows = ctx.cochain_dim(degree + 1);
  if (rows * cols > entry_budget)
    throw resource_bound_error("assemble_delta: matrix of " + std::to_string(rows) + "x" +
                               std::to_string(cols) + " entries exceeds the budget");

  Matrix delta(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Vec image;
    if (tuple)
      image = flatten_cochain(ctx, apply_delta(ctx, tuple_basis_cochain(ctx, degree, j)));
    else
      image = flatten_cochain(ctx, apply_delta(ctx, nsfam_basis_cochain(ctx, degree, j)));
    delta.set_col(j, image);
  }
  return delta;
}

std::vector<CohomologyRow> cohomology_dimensions(const ComplexDescriptor& ctx, std::size_t n_max,
                                                 std::size_t entry_budget) {
  std::size_t start = ctx.start_degree();
  if (n_max < start) throw std::invalid_argument("cohomology_dimensions: n_max below start degree");

  std::vector<CohomologyRow> rows;
  std::size_t prev_rank = 0;
  for (std::size_t n = start; n <= n_max; ++n) {
    std::size_t dim_n = ctx.cochain_dim(n);
    Matrix delta = assemble_delta(ctx, n, entry_budget);
    std::size_t r = rank(delta);
    std::size_t z = kernel_basis(delta).size();
    if (r + z != dim_n)
      throw std::logic_error("cohomology_dimensions: rank-nullity mismatch");
    CohomologyRow row;
    row.degree = n;
    row.dim_cochain = dim_n;
    row.rank_delta = r;
    row.dim_cocycles = z;
    row.dim_coboundaries = prev_rank;
    if (z < prev_rank)
      throw std::logic_error("cohomology_dimensions: coboundaries escape the cocycles");
    row.dim_cohomology = z - prev_rank;
    rows.push_back(row);
    prev_rank = r;
  }
  return rows;
}

namespace {

Rational small_random_rational(std::mt19937_64& eng) {
  // numerators in [-9,9], denominators in {1,2,3}; stdlib distributions are
  // avoided so streams are identical across platforms
  long num = static_cast<long>(eng() % 19) - 9;
  long den = static_cast<long>(eng() % 3) + 1;
  return Rational(num, den);
}

}  // namespace

TupleCochain random_tuple_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                  std::uint64_t seed) {
  TupleDims dims = tuple_dims(ctx);
  std::mt19937_64 eng(seed);
  TupleCochain c;
  c.degree = degree;
  if (degree == 0) {
    c.value0 = Vec(dims.tgt);
    for (auto& x : c.value0) x = small_random_rational(eng);
    return c;
  }
  c.maps.assign(ipow(ctx.semigroup().size, degree),
                Matrix(dims.tgt, ipow(dims.src, degree)));
  for (auto& m : c.maps)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = small_random_rational(eng);
  return c;
}

NSfamCochain random_nsfam_cochain(const ComplexDescriptor& ctx, std::size_t degree,
                                  std::uint64_t seed) {
  NsLayout l = ns_layout(ctx, degree);
  std::mt19937_64 eng(seed);
  NSfamCochain c;
  c.degree = degree;
  c.comps.assign(degree >= 2 ? degree + 1 : degree, {});
  for (std::size_t comp = 0; comp < degree; ++comp) {
    c.comps[comp].assign(l.reduced_tables, Matrix(l.d, ipow(l.d, degree)));
    for (auto& m : c.comps[comp])
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = small_random_rational(eng);
  }
  if (degree >= 2) {
    c.comps[degree].assign(l.full_tables, Matrix(l.d, ipow(l.d, degree)));
    if (ctx.tag == ComplexTag::nsfam) {
      for (auto& m : c.comps[degree])
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = small_random_rational(eng);
    }
  }
  return c;
}

bool verify_dsquared_zero(const ComplexDescriptor& ctx, std::size_t n, std::size_t trials,
                          std::uint64_t seed) {
  bool tuple = is_tuple_complex(ctx);
  if (n < ctx.start_degree())
    throw std::invalid_argument("verify_dsquared_zero: degree below start degree");

  auto dd_is_zero_tuple = [&](const TupleCochain& c) {
    return is_zero(flatten_cochain(ctx, apply_delta(ctx, apply_delta(ctx, c))));
  };
  auto dd_is_zero_ns = [&](const NSfamCochain& c) {
    return is_zero(flatten_cochain(ctx, apply_delta(ctx, apply_delta(ctx, c))));
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    if (tuple) {
      if (!dd_is_zero_tuple(random_tuple_cochain(ctx, n, seed + trial))) return false;
    } else {
      if (!dd_is_zero_ns(random_nsfam_cochain(ctx, n, seed + trial))) return false;
    }
  }

  std::size_t dim = ctx.cochain_dim(n);
  if (dim <= 512) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (tuple) {
        if (!dd_is_zero_tuple(tuple_basis_cochain(ctx, n, j))) return false;
      } else {
        if (!dd_is_zero_ns(nsfam_basis_cochain(ctx, n, j))) return false;
      }
    }
  }
  return true;
}

}  // namespace famalg
