#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "famalg/deformation.hpp"
#include "support/corpus.hpp"

using namespace famalg;

namespace {

TruncatedFamilyDeformation base_deformation(const corpus::FamilyInstance& inst,
                                            std::size_t order) {
  return TruncatedFamilyDeformation::constant(inst.t, inst.a, inst.m, inst.cocycle(), order);
}

// any kernel vector of the assembled degree-1 coboundary, unflattened into a
// family shape; falls back to a coboundary when the kernel is trivial
OperatorFamily some_cocycle(const ComplexDescriptor& ctx) {
  Matrix d1 = assemble_delta(ctx, 1);
  auto basis = kernel_basis(d1);
  OperatorFamily f;
  f.semigroup = ctx.tw->family.semigroup;
  f.domain_dim = ctx.tw->bimodule.module_dim;
  f.codomain_dim = ctx.tw->algebra.dim;
  std::size_t src = f.domain_dim, tgt = f.codomain_dim;
  Vec flat = basis.empty() ? Vec(ctx.cochain_dim(1)) : basis.front();
  std::size_t pos = 0;
  for (std::size_t al = 0; al < f.semigroup.size; ++al) {
    Matrix m(tgt, src);
    for (std::size_t col = 0; col < src; ++col)
      for (std::size_t k = 0; k < tgt; ++k) m.at(k, col) = flat[pos++];
    f.maps.push_back(std::move(m));
  }
  return f;
}

}  // namespace

TEST_CASE("constant deformations pass to every order") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    auto reports = check_family_deformation(base_deformation(inst, 2));
    for (const auto& r : reports) CHECK_MESSAGE(r.report.pass, inst.name);
    CHECK(infinitesimal_cocycle_check(base_deformation(inst, 2)));
  }
  // an invalid base family fails at order 0
  Algebra k = Algebra::ground_field();
  TruncatedFamilyDeformation bad = TruncatedFamilyDeformation::constant(
      OperatorFamily::identity(FiniteSemigroup::trivial(), 1), k, adjoint_bimodule(k), nullptr, 1);
  auto reports = check_family_deformation(bad);
  CHECK_FALSE(reports[0].report.pass);
}

TEST_CASE("order-1 validity is exactly the cocycle condition") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    if (inst.a.dim > 2 || inst.t.semigroup.size > 2) continue;
    TwFamilyContext fam{inst.t, inst.a, inst.m, inst.h};
    ComplexDescriptor ctx = ComplexDescriptor::twooperf(fam);

    // a 1-cocycle as infinitesimal: order 1 passes and delta kills it
    TruncatedFamilyDeformation d = base_deformation(inst, 1);
    d.terms[1] = some_cocycle(ctx);
    auto reports = check_family_deformation(d);
    CHECK_MESSAGE(reports[1].report.pass, inst.name);
    CHECK(infinitesimal_cocycle_check(d));
  }

  // a non-cocycle fails order 1, with a named witness
  Algebra u2 = corpus::lowered_unital(2);
  auto s1 = FiniteSemigroup::trivial();
  OperatorFamily rb = OperatorFamily::constant(s1, corpus::shift_matrix(2));
  TruncatedFamilyDeformation d =
      TruncatedFamilyDeformation::constant(rb, u2, adjoint_bimodule(u2), nullptr, 1);
  d.terms[1] = OperatorFamily::identity(s1, 2);
  TwFamilyContext fam{rb, u2, adjoint_bimodule(u2), std::nullopt};
  ComplexDescriptor ctx = ComplexDescriptor::twooperf(fam);
  TupleCochain inf = infinitesimal_cochain(d);
  bool delta_vanishes = is_zero(flatten_cochain(ctx, apply_delta(ctx, inf)));
  auto reports = check_family_deformation(d);
  CHECK(reports[1].report.pass == delta_vanishes);
  CHECK_FALSE(reports[1].report.pass);
  CHECK_FALSE(reports[1].report.witness.empty());
}

TEST_CASE("coboundary infinitesimals: order 1 passes and trivialization zeroes them") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    if (inst.a.dim > 2 || inst.t.semigroup.size > 2) continue;
    // theta = first basis vector of A
    Vec theta = unit_vec(inst.a.dim, 0);
    auto image = twooperf_element_image(theta, inst.t, inst.a, inst.m, inst.cocycle());

    TruncatedFamilyDeformation d = base_deformation(inst, 2);
    d.terms[1].maps = image;
    auto reports = check_family_deformation(d);
    CHECK_MESSAGE(reports[1].report.pass, inst.name);
    CHECK(infinitesimal_cocycle_check(d));

    TruncatedFamilyDeformation trivial = trivialization_step(d, theta);
    for (const auto& m : trivial.terms[1].maps) CHECK(m.is_zero());
  }
}

TEST_CASE("apply_equivalence shifts the infinitesimal by exactly delta(theta)") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    if (inst.a.dim > 2 || inst.t.semigroup.size > 2) continue;
    TwFamilyContext fam{inst.t, inst.a, inst.m, inst.h};
    ComplexDescriptor ctx = ComplexDescriptor::twooperf(fam);

    TruncatedFamilyDeformation d = base_deformation(inst, 2);
    d.terms[1] = some_cocycle(ctx);

    for (std::size_t basis = 0; basis < inst.a.dim; ++basis) {
      Vec theta = unit_vec(inst.a.dim, basis);
      EquivalenceData e;
      e.theta = theta;
      TruncatedFamilyDeformation moved = apply_equivalence(d, e);

      auto dtheta = twooperf_element_image(theta, inst.t, inst.a, inst.m, inst.cocycle());
      for (std::size_t al = 0; al < inst.t.semigroup.size; ++al)
        CHECK(d.terms[1].map(al) - moved.terms[1].map(al) == dtheta[al]);
      // order-0 term is untouched
      for (std::size_t al = 0; al < inst.t.semigroup.size; ++al)
        CHECK(moved.terms[0].map(al) == inst.t.map(al));
    }
  }
}

TEST_CASE("identity transport leaves the deformation unchanged") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    TruncatedFamilyDeformation d = base_deformation(inst, 2);
    EquivalenceData e;
    e.theta = Vec(inst.a.dim);
    TruncatedFamilyDeformation same = apply_equivalence(d, e);
    for (std::size_t i = 0; i <= 2; ++i)
      for (std::size_t al = 0; al < inst.t.semigroup.size; ++al)
        CHECK(same.terms[i].map(al) == d.terms[i].map(al));
    break;
  }
}

TEST_CASE("equivalence transport is functorial in composition") {
  const auto insts = corpus::valid_twisted_instances();
  const auto& inst = insts.front();
  TruncatedFamilyDeformation d = base_deformation(inst, 2);

  Vec theta1 = unit_vec(inst.a.dim, 0);
  Vec theta2 = inst.a.dim > 1 ? unit_vec(inst.a.dim, 1) : Rational(2) * unit_vec(inst.a.dim, 0);
  EquivalenceData e1, e2;
  e1.theta = theta1;
  e2.theta = theta2;
  TruncatedFamilyDeformation one_then_two = apply_equivalence(apply_equivalence(d, e1), e2);

  // composing the two power series by hand: phi = phi2 phi1, psi_a = psi2_a psi1_a
  // mod t^3; transporting by the composite must agree
  auto phi_series = [&](const Vec& th) {
    Matrix p1(inst.a.dim, inst.a.dim);
    for (std::size_t j = 0; j < inst.a.dim; ++j) {
      Vec ej = unit_vec(inst.a.dim, j);
      p1.set_col(j, inst.a.product(th, ej) - inst.a.product(ej, th));
    }
    return std::vector<Matrix>{Matrix::identity(inst.a.dim), p1};
  };
  auto psi_series = [&](const Vec& th, std::size_t al) {
    Matrix p1(inst.m.module_dim, inst.m.module_dim);
    for (std::size_t p = 0; p < inst.m.module_dim; ++p) {
      Vec u = unit_vec(inst.m.module_dim, p);
      Vec col = inst.m.act_left(th, u) - inst.m.act_right(u, th);
      if (inst.cocycle()) {
        Vec tu = inst.t.apply(al, u);
        col = col + inst.cocycle()->eval(th, tu) - inst.cocycle()->eval(tu, th);
      }
      p1.set_col(p, col);
    }
    return std::vector<Matrix>{Matrix::identity(inst.m.module_dim), p1};
  };

  for (std::size_t al = 0; al < inst.t.semigroup.size; ++al) {
    auto phi = series_multiply(phi_series(theta2), phi_series(theta1), 2);
    auto psi = series_multiply(psi_series(theta2, al), psi_series(theta1, al), 2);
    std::vector<Matrix> t_series;
    for (std::size_t i = 0; i <= 2; ++i) t_series.push_back(d.terms[i].map(al));
    auto direct = series_multiply(series_multiply(phi, t_series, 2), series_inverse(psi, 2), 2);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(one_then_two.terms[i].map(al) == direct[i]);
  }
}

TEST_CASE("theta-only transports stay valid deformations") {
  // with no free higher terms the transported series satisfies the deformation
  // equations again; arbitrary phi_2/psi_2 break them (the transport only
  // guarantees the intertwining equation in that case)
  for (const auto& inst : corpus::valid_twisted_instances()) {
    if (inst.a.dim > 2 || inst.t.semigroup.size > 2) continue;
    TruncatedFamilyDeformation d = base_deformation(inst, 3);
    EquivalenceData e;
    e.theta = unit_vec(inst.a.dim, 0);
    TruncatedFamilyDeformation moved = apply_equivalence(d, e);
    auto reports = check_family_deformation(moved);
    for (const auto& r : reports) CHECK_MESSAGE(r.report.pass, inst.name);
  }
}

TEST_CASE("trivialization rejects a theta that does not cobound") {
  const auto insts = corpus::valid_twisted_instances();
  const auto& inst = insts.front();
  TruncatedFamilyDeformation d = base_deformation(inst, 1);
  // T^(1) = 0 but theta with delta(theta) != 0 must be refused
  Vec theta = unit_vec(inst.a.dim, 0);
  auto image = twooperf_element_image(theta, inst.t, inst.a, inst.m, inst.cocycle());
  bool nonzero = false;
  for (const auto& m : image) nonzero = nonzero || !m.is_zero();
  if (nonzero) CHECK_THROWS_AS(trivialization_step(d, theta), std::invalid_argument);
  // theta = 0 with T^(1) = 0 is the no-op
  TruncatedFamilyDeformation same = trivialization_step(d, Vec(inst.a.dim));
  for (const auto& m : same.terms[1].maps) CHECK(m.is_zero());
}

TEST_CASE("NS deformations: constant and zero-base cases") {
  for (const auto& inst : corpus::ns_instances()) {
    auto d = TruncatedNSDeformation::constant(inst.value, 2);
    auto reports = check_ns_deformation(d);
    for (const auto& r : reports) CHECK_MESSAGE(r.report.pass, inst.name);
    CHECK(ns_infinitesimal_cocycle_check(d));
  }
  // zero base: order-1 equations are vacuous but the delta check still applies
  NSFamily zero = NSFamily::zero(FiniteSemigroup::trivial(), 1);
  auto d = TruncatedNSDeformation::constant(zero, 1);
  d.terms[1].prec[0].at(0, 0, 0) = Rational(1);
  auto reports = check_ns_deformation(d);
  CHECK(reports[1].report.pass);
  CHECK(ns_infinitesimal_cocycle_check(d));
}

TEST_CASE("NS deformation by a coboundary passes order 1 and transports back") {
  for (const auto& inst : corpus::ns_instances()) {
    if (inst.value.dim > 2 || inst.value.semigroup.size > 2) continue;
    const NSFamily& base = inst.value;
    ComplexDescriptor ctx = ComplexDescriptor::nsfam(base);

    // psi^1: a fixed linear map D -> D
    Matrix psi1(base.dim, base.dim);
    psi1.at(0, 0) = Rational(1, 2);
    if (base.dim > 1) psi1.at(1, 0) = Rational(1);

    // delta of psi^1 as a degree-2 cochain gives the infinitesimal tables
    NSfamCochain one;
    one.degree = 1;
    one.comps.assign(1, {psi1});
    NSfamCochain image = delta_nsfam(one, base);

    TruncatedNSDeformation d = TruncatedNSDeformation::constant(base, 1);
    const auto& s = base.semigroup;
    for (std::size_t al = 0; al < s.size; ++al)
      for (std::size_t be = 0; be < s.size; ++be)
        for (std::size_t i = 0; i < base.dim; ++i)
          for (std::size_t j = 0; j < base.dim; ++j) {
            std::size_t col = i * base.dim + j;
            for (std::size_t k = 0; k < base.dim; ++k) {
              d.terms[1].prec[be].at(i, j, k) = image.comps[0][be].at(k, col);
              d.terms[1].succ[al].at(i, j, k) = image.comps[1][al].at(k, col);
              d.terms[1].vee_at(al, be).at(i, j, k) =
                  image.comps[2][al * s.size + be].at(k, col);
            }
          }

    auto reports = check_ns_deformation(d);
    CHECK_MESSAGE(reports[1].report.pass, inst.name);
    CHECK(ns_infinitesimal_cocycle_check(d));

    // transporting the constant deformation by id + t psi^1 realizes pi^1 - bar(pi)^1
    // = delta(psi^1) with bar(pi)^1 read off the transport
    TruncatedNSDeformation constant = TruncatedNSDeformation::constant(base, 1);
    TruncatedNSDeformation moved = apply_ns_equivalence(constant, {psi1});
    for (std::size_t al = 0; al < s.size; ++al) {
      CHECK(moved.terms[0].prec[al] == base.prec[al]);
      // bar(pi)^1 = -delta(psi^1) when the source is constant
      Tensor3 expect = -Rational(1) * d.terms[1].prec[al];
      CHECK(moved.terms[1].prec[al] == expect);
    }
  }
}

TEST_CASE("series helpers invert exactly") {
  Matrix a1(2, 2);
  a1.at(0, 1) = Rational(3);
  Matrix a2(2, 2);
  a2.at(1, 0) = Rational(-2);
  std::vector<Matrix> series{Matrix::identity(2), a1, a2};
  auto inv = series_inverse(series, 4);
  auto prod = series_multiply(series, inv, 4);
  CHECK(prod[0] == Matrix::identity(2));
  for (std::size_t i = 1; i <= 4; ++i) CHECK(prod[i].is_zero());
}
