#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "famalg/cohomology.hpp"
#include "support/corpus.hpp"

using namespace famalg;

namespace {

ComplexDescriptor ground_zero_family_ctx() {
  TwFamilyContext ctx;
  ctx.algebra = Algebra::ground_field();
  ctx.bimodule = adjoint_bimodule(ctx.algebra);
  ctx.family = OperatorFamily::zero(FiniteSemigroup::trivial(), 1, 1);
  return ComplexDescriptor::twooperf(std::move(ctx));
}

std::vector<ComplexDescriptor> twooperf_contexts() {
  std::vector<ComplexDescriptor> out;
  out.push_back(ground_zero_family_ctx());
  for (const auto& inst : corpus::valid_twisted_instances()) {
    // keep assembled sizes small; the 3-element left-zero instance stays in
    if (inst.a.dim > 3 || inst.t.semigroup.size > 3) continue;
    if (inst.a.dim * inst.t.semigroup.size > 9) continue;
    TwFamilyContext ctx;
    ctx.family = inst.t;
    ctx.algebra = inst.a;
    ctx.bimodule = inst.m;
    ctx.cocycle = inst.h;
    out.push_back(ComplexDescriptor::twooperf(std::move(ctx)));
  }
  {
    Algebra u2 = corpus::lowered_unital(2);
    TwFamilyContext ctx;
    ctx.family = OperatorFamily::constant(FiniteSemigroup::mult_mod2(), corpus::shift_matrix(2));
    ctx.algebra = u2;
    ctx.bimodule = adjoint_bimodule(u2);
    out.push_back(ComplexDescriptor::twooperf(std::move(ctx)));
  }
  return out;
}

std::vector<ComplexDescriptor> omega_hoch_contexts() {
  std::vector<ComplexDescriptor> out;
  for (const auto& inst : corpus::ns_instances()) {
    if (inst.value.dim > 2 || inst.value.semigroup.size > 2) continue;
    OmegaHochContext ctx;
    ctx.algebra = total_omega_assoc_from_ns(inst.value);
    ctx.bimodule = OmegaBimodule::regular(ctx.algebra);
    out.push_back(ComplexDescriptor::omega_hoch(std::move(ctx)));
  }
  for (const auto& inst : corpus::valid_twisted_instances()) {
    if (inst.a.dim > 3 || inst.t.semigroup.size > 3) continue;
    if (inst.a.dim * inst.t.semigroup.size > 9) continue;
    OmegaContext oc = omega_bimodule_from_twisted_family(inst.t, inst.a, inst.m, inst.cocycle());
    OmegaHochContext ctx{std::move(oc.algebra), std::move(oc.bimodule)};
    out.push_back(ComplexDescriptor::omega_hoch(std::move(ctx)));
    if (out.size() >= 8) break;
  }
  return out;
}

std::vector<ComplexDescriptor> ns_contexts() {
  std::vector<ComplexDescriptor> out;
  for (const auto& inst : corpus::ns_instances()) {
    if (inst.value.dim > 2 || inst.value.semigroup.size > 2) continue;
    out.push_back(ComplexDescriptor::nsfam(inst.value));
  }
  return out;
}

std::vector<ComplexDescriptor> dend_contexts() {
  std::vector<ComplexDescriptor> out;
  for (const auto& inst : corpus::dendriform_instances())
    out.push_back(ComplexDescriptor::dendfam(inst.value));
  return out;
}

}  // namespace

TEST_CASE("index_maps piecewise values") {
  // R_{2;1,n}([1]) = [1] and S_{2;1,n}([1]) = [1] (middle case)
  for (std::size_t n = 1; n <= 4; ++n) {
    IndexMaps im = index_maps(2, 1, n, 1);
    CHECK(im.r_label == 1);
    CHECK_FALSE(im.s_is_full_sum);
    CHECK(im.s_label == 1);
  }
  // R_{n;i,2}([r]) = [r] for r < i (first case), with the full sum on S
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i = 2; i <= n; ++i)
      for (std::size_t r = 1; r < i; ++r) {
        IndexMaps im = index_maps(n, i, 2, r);
        CHECK(im.r_label == r);
        CHECK(im.s_is_full_sum);
      }
  // last case: r - n + 1
  IndexMaps im = index_maps(2, 1, 2, 3);
  CHECK(im.r_label == 2);
  CHECK(im.s_is_full_sum);
  CHECK_THROWS_AS(index_maps(2, 1, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(index_maps(2, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("zero cochains map to zero in all complexes") {
  for (const auto& ctx : twooperf_contexts()) {
    TupleCochain zero;
    zero.degree = 1;
    std::size_t src = ctx.tw->bimodule.module_dim, tgt = ctx.tw->algebra.dim;
    zero.maps.assign(ctx.semigroup().size, Matrix(tgt, src));
    CHECK(is_zero(flatten_cochain(ctx, apply_delta(ctx, zero))));
  }
  for (const auto& ctx : ns_contexts()) {
    NSfamCochain zero;
    zero.degree = 1;
    zero.comps.assign(1, {Matrix(ctx.ns->dim, ctx.ns->dim)});
    CHECK(is_zero(flatten_cochain(ctx, apply_delta(ctx, zero))));
  }
}

TEST_CASE("degree-0 twooperf coboundary vanishes when T = 0") {
  ComplexDescriptor ctx = ground_zero_family_ctx();
  for (std::size_t j = 0; j < ctx.cochain_dim(0); ++j) {
    TupleCochain c = tuple_basis_cochain(ctx, 0, j);
    CHECK(is_zero(flatten_cochain(ctx, apply_delta(ctx, c))));
  }
}

TEST_CASE("delta squared is zero: twooperf") {
  for (const auto& ctx : twooperf_contexts()) {
    for (std::size_t n = ctx.start_degree(); n <= 1; ++n)
      CHECK(verify_dsquared_zero(ctx, n, 4, 17));
    // assembled at consecutive degrees: matrix product vanishes
    Matrix d1 = assemble_delta(ctx, 1);
    Matrix d2 = assemble_delta(ctx, 2);
    CHECK((d2 * d1).is_zero());
    if (ctx.start_degree() == 0) {
      Matrix d0 = assemble_delta(ctx, 0);
      CHECK((d1 * d0).is_zero());
    }
  }
}

TEST_CASE("delta squared is zero: omega_hoch") {
  for (const auto& ctx : omega_hoch_contexts()) {
    CHECK(verify_dsquared_zero(ctx, ctx.start_degree(), 3, 5));
    Matrix d1 = assemble_delta(ctx, 1);
    Matrix d2 = assemble_delta(ctx, 2);
    CHECK((d2 * d1).is_zero());
    if (ctx.start_degree() == 0) CHECK((d1 * assemble_delta(ctx, 0)).is_zero());
  }
}

TEST_CASE("delta squared is zero: nsfam and dendfam") {
  for (const auto& ctx : ns_contexts()) {
    CHECK(verify_dsquared_zero(ctx, 1, 3, 23));
    Matrix d1 = assemble_delta(ctx, 1);
    Matrix d2 = assemble_delta(ctx, 2);
    CHECK((d2 * d1).is_zero());
  }
  for (const auto& ctx : dend_contexts()) {
    CHECK(verify_dsquared_zero(ctx, 1, 3, 29));
    Matrix d1 = assemble_delta(ctx, 1);
    Matrix d2 = assemble_delta(ctx, 2);
    CHECK((d2 * d1).is_zero());
  }
}

TEST_CASE("degree-1 NS coboundary matches its closed form") {
  // hand expansion: for a single map f the three output components are the
  // alternations of f through prec, succ and vee respectively
  for (const auto& inst : corpus::ns_instances()) {
    if (inst.value.dim > 2 || inst.value.semigroup.size > 2) continue;
    const NSFamily& fam = inst.value;
    ComplexDescriptor ctx = ComplexDescriptor::nsfam(fam);
    NSfamCochain f = random_nsfam_cochain(ctx, 1, 321);
    const Matrix& fm = f.comps[0][0];
    NSfamCochain image = apply_delta(ctx, f);

    const std::size_t d = fam.dim;
    auto apply_f = [&](const Vec& x) { return fm.apply(x); };
    for (std::size_t al = 0; al < fam.semigroup.size; ++al)
      for (std::size_t be = 0; be < fam.semigroup.size; ++be)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            Vec x = unit_vec(d, i), y = unit_vec(d, j);
            std::size_t col = i * d + j;
            Vec prec_expect = fam.prec[be].eval(x, apply_f(y)) -
                              apply_f(fam.prec[be].eval(x, y)) +
                              fam.prec[be].eval(apply_f(x), y);
            Vec succ_expect = fam.succ[al].eval(x, apply_f(y)) -
                              apply_f(fam.succ[al].eval(x, y)) +
                              fam.succ[al].eval(apply_f(x), y);
            Vec vee_expect = fam.vee_at(al, be).eval(x, apply_f(y)) -
                             apply_f(fam.vee_at(al, be).eval(x, y)) +
                             fam.vee_at(al, be).eval(apply_f(x), y);
            CHECK(image.comps[0][be].col(col) == prec_expect);
            CHECK(image.comps[1][al].col(col) == succ_expect);
            CHECK(image.comps[2][al * fam.semigroup.size + be].col(col) == vee_expect);
          }
  }
}

TEST_CASE("dendriform subcomplex is closed") {
  for (const auto& inst : corpus::dendriform_instances()) {
    ComplexDescriptor ctx = ComplexDescriptor::dendfam(inst.value);
    // delta of degree-1 and degree-2 subcomplex cochains keeps the top zero
    NSfamCochain c = random_nsfam_cochain(ctx, 1, 99);
    NSfamCochain image = apply_delta(ctx, c);
    CHECK(image.top_component_is_zero());
    NSfamCochain c2 = random_nsfam_cochain(ctx, 2, 100);
    CHECK(c2.top_component_is_zero());
    CHECK(apply_delta(ctx, c2).top_component_is_zero());
  }
  // a cochain outside the subcomplex is rejected
  const NSFamily dend = corpus::dendriform_instances()[1].value;
  NSfamCochain outside;
  outside.degree = 2;
  std::size_t d = dend.dim, omega = dend.semigroup.size;
  outside.comps.assign(3, {});
  outside.comps[0].assign(omega, Matrix(d, d * d));
  outside.comps[1].assign(omega, Matrix(d, d * d));
  outside.comps[2].assign(omega * omega, Matrix(d, d * d));
  outside.comps[2][0].at(0, 0) = Rational(1);
  CHECK_THROWS_AS(delta_dendfam(outside, dend), std::invalid_argument);
}

TEST_CASE("twooperf coboundary equals the omega-Hochschild coboundary of its context") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    if (inst.a.dim > 2 || inst.t.semigroup.size > 2) continue;
    TwFamilyContext fam{inst.t, inst.a, inst.m, inst.h};
    ComplexDescriptor tw = ComplexDescriptor::twooperf(fam);
    OmegaContext oc = omega_bimodule_from_twisted_family(inst.t, inst.a, inst.m, inst.cocycle());
    ComplexDescriptor oh = ComplexDescriptor::omega_hoch({oc.algebra, oc.bimodule});
    for (std::size_t n = tw.start_degree(); n <= 1; ++n) {
      for (std::size_t trial = 0; trial < 3; ++trial) {
        TupleCochain c = random_tuple_cochain(tw, n, 7 * trial + n);
        Vec via_tw = flatten_cochain(tw, apply_delta(tw, c));
        Vec via_oh = flatten_cochain(oh, apply_delta(oh, c));
        CHECK(via_tw == via_oh);
      }
    }
  }
}

TEST_CASE("cohomology dimensions: the one-dimensional zero-family context") {
  ComplexDescriptor ctx = ground_zero_family_ctx();
  auto rows = cohomology_dimensions(ctx, 3);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.dim_cochain == 1);
    CHECK(r.rank_delta == 0);
    CHECK(r.dim_cohomology == 1);
  }
}

TEST_CASE("cohomology dimensions: rank-nullity consistency everywhere") {
  for (const auto& ctx : twooperf_contexts()) {
    auto rows = cohomology_dimensions(ctx, 2);
    for (const auto& r : rows) {
      CHECK(r.dim_cocycles + r.rank_delta == r.dim_cochain);
      CHECK(r.dim_cohomology == r.dim_cocycles - r.dim_coboundaries);
    }
  }
  for (const auto& ctx : ns_contexts()) {
    auto rows = cohomology_dimensions(ctx, 2);
    CHECK(rows.front().degree == 1);
    CHECK(rows.front().dim_coboundaries == 0);  // the complex starts at degree 1
    for (const auto& r : rows) CHECK(r.dim_cocycles + r.rank_delta == r.dim_cochain);
  }
}

TEST_CASE("zero NS-family: cohomology equals the whole cochain space") {
  ComplexDescriptor ctx = ComplexDescriptor::nsfam(NSFamily::zero(FiniteSemigroup::trivial(), 1));
  auto rows = cohomology_dimensions(ctx, 2);
  for (const auto& r : rows) {
    CHECK(r.rank_delta == 0);
    CHECK(r.dim_cohomology == r.dim_cochain);
  }
}

TEST_CASE("non-unital semigroups start the tuple complexes at degree 1") {
  Algebra u2 = corpus::lowered_unital(2);
  TwFamilyContext fam;
  fam.family = OperatorFamily::constant(FiniteSemigroup::left_zero(2), corpus::shift_matrix(2));
  fam.algebra = u2;
  fam.bimodule = adjoint_bimodule(u2);
  ComplexDescriptor ctx = ComplexDescriptor::twooperf(std::move(fam));
  CHECK(ctx.start_degree() == 1);
  auto rows = cohomology_dimensions(ctx, 2);
  CHECK(rows.front().degree == 1);
  CHECK(rows.front().dim_coboundaries == 0);
  CHECK_THROWS_AS(assemble_delta(ctx, 0), std::invalid_argument);
}

TEST_CASE("resource bound raises the dedicated error") {
  ComplexDescriptor ctx = ground_zero_family_ctx();
  CHECK_THROWS_AS(assemble_delta(ctx, 2, 0), resource_bound_error);
}

TEST_CASE("descriptor factories validate their structures") {
  Algebra k = Algebra::ground_field();
  TwFamilyContext bad;
  bad.family = OperatorFamily::identity(FiniteSemigroup::trivial(), 1);
  bad.algebra = k;
  bad.bimodule = adjoint_bimodule(k);
  CHECK_THROWS_AS(ComplexDescriptor::twooperf(std::move(bad)), std::invalid_argument);

  NSFamily not_dend = corpus::ns_instances()[2].value;  // has nonzero vee
  CHECK_THROWS_AS(ComplexDescriptor::dendfam(not_dend), std::invalid_argument);
}
