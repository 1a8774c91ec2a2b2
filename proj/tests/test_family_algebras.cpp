#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "famalg/family_algebras.hpp"
#include "support/corpus.hpp"

using namespace famalg;

TEST_CASE("dendriform family validation") {
  auto lz2 = FiniteSemigroup::left_zero(2);
  CHECK(validate_dendriform_family(DendriformFamily::zero(lz2, 2)).pass);

  for (const auto& inst : corpus::untwisted_instances()) {
    if (!inst.valid) continue;
    DendriformFamily d = dendriform_from_o_family(inst.t, inst.a, inst.m);
    CHECK_MESSAGE(validate_dendriform_family(d).pass, inst.name);
  }

  // breaking one entry breaks an axiom
  Algebra u2 = corpus::lowered_unital(2);
  DendriformFamily d = dendriform_from_o_family(
      OperatorFamily::constant(lz2, corpus::shift_matrix(2)), u2, adjoint_bimodule(u2));
  d.prec[0].at(0, 0, 0) = Rational(5);
  CHECK_FALSE(validate_dendriform_family(d).pass);
}

TEST_CASE("tridendriform and weighted Rota-Baxter families") {
  Algebra a = corpus::left_unit2();
  auto lz2 = FiniteSemigroup::left_zero(2);
  Rational lambda(3, 2);

  // R = -lambda id satisfies the weight-lambda identity on any algebra
  OperatorFamily r = OperatorFamily::constant(lz2, -lambda * Matrix::identity(2));
  CHECK(check_weighted_rb_family(r, a, lambda).pass);
  // weight 0 reduces to the plain check
  CHECK(check_weighted_rb_family(OperatorFamily::zero(lz2, 2, 2), a, Rational(0)).pass);
  CHECK(check_weighted_rb_family(OperatorFamily::zero(lz2, 2, 2), a, lambda).pass);
  CHECK_FALSE(check_weighted_rb_family(OperatorFamily::identity(lz2, 2), a, lambda).pass);

  // the induced tridendriform family validates; degenerate odot stays valid
  NSFamily ns = induce_ns_family(NsSource::weighted_rb(r, a, lambda));
  CHECK(validate_ns_family(ns).pass);
  TridendriformFamily td;
  td.semigroup = lz2;
  td.dim = 2;
  td.prec = ns.prec;
  td.succ = ns.succ;
  td.odot = lambda * a.mult;
  CHECK(validate_tridendriform_family(td).pass);

  // degenerate odot on top of a valid dendriform family
  Algebra u2 = corpus::lowered_unital(2);
  DendriformFamily dd = dendriform_from_o_family(
      OperatorFamily::constant(lz2, corpus::shift_matrix(2)), u2, adjoint_bimodule(u2));
  TridendriformFamily td0;
  td0.semigroup = lz2;
  td0.dim = 2;
  td0.prec = dd.prec;
  td0.succ = dd.succ;
  td0.odot = Tensor3(2, 2, 2);
  CHECK(validate_tridendriform_family(td0).pass);
}

TEST_CASE("NS-family validation across the corpus") {
  for (const auto& inst : corpus::ns_instances())
    CHECK_MESSAGE(validate_ns_family(inst.value).pass, inst.name);
  for (const auto& inst : corpus::dendriform_instances())
    CHECK_MESSAGE(validate_ns_family(inst.value).pass, inst.name);

  // Nijenhuis-induced example on the ground field: prec = succ = mu, vee = -mu
  NSFamily n = induce_ns_family(
      NsSource::nijenhuis(OperatorFamily::identity(FiniteSemigroup::trivial(), 1),
                          Algebra::ground_field()));
  CHECK(n.prec[0].at(0, 0, 0) == Rational(1));
  CHECK(n.succ[0].at(0, 0, 0) == Rational(1));
  CHECK(n.vee_at(0, 0).at(0, 0, 0) == Rational(-1));
}

TEST_CASE("twisted family with h = 0 induces the dendriform structure") {
  Algebra u2 = corpus::lowered_unital(2);
  auto z2 = FiniteSemigroup::cyclic_group(2);
  OperatorFamily rb;
  rb.semigroup = z2;
  rb.domain_dim = 2;
  rb.codomain_dim = 2;
  rb.maps = {Matrix(2, 2), corpus::shift_matrix(2)};

  NSFamily ns = induce_ns_family(NsSource::twisted_o(rb, u2, adjoint_bimodule(u2), nullptr));
  CHECK(ns.vee_is_zero());
  DendriformFamily d = dendriform_from_o_family(rb, u2, adjoint_bimodule(u2));
  for (std::size_t al = 0; al < 2; ++al) {
    CHECK(ns.prec[al] == d.prec[al]);
    CHECK(ns.succ[al] == d.succ[al]);
  }
}

TEST_CASE("induce_ns_family rejects invalid sources") {
  auto s1 = FiniteSemigroup::trivial();
  Algebra k = Algebra::ground_field();
  CHECK_THROWS_AS(
      induce_ns_family(NsSource::twisted_o(OperatorFamily::identity(s1, 1), k,
                                           adjoint_bimodule(k), nullptr)),
      std::invalid_argument);
  Matrix lower(2, 2);
  lower.at(0, 1) = Rational(1);  // x -> 1 is not Nijenhuis on k[x]/(x^2)
  CHECK_THROWS_AS(induce_ns_family(NsSource::nijenhuis(
                      OperatorFamily::constant(s1, lower), corpus::lowered_unital(2))),
                  std::invalid_argument);
}

TEST_CASE("ns_family_to_ns_algebra") {
  // |Omega| = 1 keeps the structure
  NSFamily one = corpus::ns_instances()[2].value;  // nijenhuis/id-ground
  NSAlgebra alg = ns_family_to_ns_algebra(one, FiniteSemigroup::trivial());
  CHECK(alg.prec == one.prec[0]);
  CHECK(validate_ns_algebra(alg).pass);

  for (const auto& inst : corpus::ns_instances()) {
    NSAlgebra out = ns_family_to_ns_algebra(inst.value, inst.value.semigroup);
    CHECK_MESSAGE(validate_ns_algebra(out).pass, inst.name);
  }

  NSAlgebra zero = ns_family_to_ns_algebra(NSFamily::zero(FiniteSemigroup::left_zero(2), 1),
                                           FiniteSemigroup::left_zero(2));
  CHECK(zero.prec.is_zero());
  CHECK(zero.vee.is_zero());
}

TEST_CASE("the dendriform collapse reproduces the dendriform-algebra rule") {
  // (x (x) a) prec (y (x) b) = (x prec_b y) (x) ab with vee = 0
  for (const auto& inst : corpus::dendriform_instances()) {
    NSAlgebra out = ns_family_to_ns_algebra(inst.value, inst.value.semigroup);
    CHECK(out.vee.is_zero());
    CHECK(validate_ns_algebra(out).pass);
  }
}

TEST_CASE("total omega-associative algebra from NS families") {
  for (const auto& inst : corpus::ns_instances()) {
    OmegaAssocAlgebra o = total_omega_assoc_from_ns(inst.value);
    CHECK_MESSAGE(validate_omega_associative(o).pass, inst.name);
    CHECK(validate_omega_bimodule(o, OmegaBimodule::regular(o)).pass);
  }
  // dendriform specialization: *_{a,b} = prec_b + succ_a
  const NSFamily d = corpus::dendriform_instances()[1].value;
  OmegaAssocAlgebra o = total_omega_assoc_from_ns(d);
  for (std::size_t al = 0; al < d.semigroup.size; ++al)
    for (std::size_t be = 0; be < d.semigroup.size; ++be)
      CHECK(o.mult_at(al, be) == d.prec[be] + d.succ[al]);
}

TEST_CASE("omega bimodule attached to a twisted family") {
  for (const auto& inst : corpus::valid_twisted_instances()) {
    OmegaContext ctx = omega_bimodule_from_twisted_family(inst.t, inst.a, inst.m, inst.cocycle());
    CHECK_MESSAGE(validate_omega_associative(ctx.algebra).pass, inst.name);
    CHECK_MESSAGE(validate_omega_bimodule(ctx.algebra, ctx.bimodule).pass, inst.name);
    // the omega product equals the total product of the induced NS family
    NSFamily ns = induce_ns_family(NsSource::twisted_o(inst.t, inst.a, inst.m, inst.cocycle()));
    OmegaAssocAlgebra total = total_omega_assoc_from_ns(ns);
    for (std::size_t p = 0; p < ctx.algebra.mult.size(); ++p)
      CHECK(ctx.algebra.mult[p] == total.mult[p]);
  }

  // H = 0: the actions lose their correction terms
  Algebra u2 = corpus::lowered_unital(2);
  auto s1 = FiniteSemigroup::trivial();
  OperatorFamily rb = OperatorFamily::constant(s1, corpus::shift_matrix(2));
  OmegaContext ctx = omega_bimodule_from_twisted_family(rb, u2, adjoint_bimodule(u2), nullptr);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t i = 0; i < 2; ++i) {
      Vec u = unit_vec(2, p), x = unit_vec(2, i);
      Vec expect = u2.product(rb.apply(0, u), x) - rb.apply(0, u2.product(u, x));
      CHECK(ctx.bimodule.act_left(0, 0, u, x) == expect);
    }
}

TEST_CASE("zero family gives the zero omega bimodule") {
  Algebra k = Algebra::ground_field();
  auto s1 = FiniteSemigroup::trivial();
  OmegaContext ctx = omega_bimodule_from_twisted_family(OperatorFamily::zero(s1, 1, 1), k,
                                                        adjoint_bimodule(k), nullptr);
  CHECK(ctx.algebra.mult[0].is_zero());
  CHECK(ctx.bimodule.left[0].is_zero());
  CHECK(ctx.bimodule.right[0].is_zero());
}

TEST_CASE("total_context: the Id family is a (twisted) O-operator family") {
  for (const auto& inst : corpus::ns_instances()) {
    TotContext tc = total_context(inst.value);
    CHECK_MESSAGE(
        check_twisted_o_family(tc.id_family, tc.tot, tc.bimodule, &tc.cocycle).pass, inst.name);
  }
  for (const auto& inst : corpus::dendriform_instances()) {
    TotContext tc = total_context(inst.value);
    CHECK(tc.cocycle.h.is_zero());
    CHECK_MESSAGE(check_twisted_o_family(tc.id_family, tc.tot, tc.bimodule).pass, inst.name);
  }
}

TEST_CASE("adjunction transport and its round trip") {
  // instance 1: the counit at a dendriform family induced by a Rota-Baxter family
  Algebra u2 = corpus::lowered_unital(2);
  auto lz2 = FiniteSemigroup::left_zero(2);
  OperatorFamily rb = OperatorFamily::constant(lz2, corpus::shift_matrix(2));
  Bimodule adj = adjoint_bimodule(u2);
  NSFamily induced = induce_ns_family(NsSource::twisted_o(rb, u2, adj, nullptr));

  MorphismPair pair = adjunction_transport(induced, rb, u2, adj, nullptr, Matrix::identity(2));
  // round trip: extracting psi and transporting again returns the same pair
  MorphismPair again = adjunction_transport(induced, rb, u2, adj, nullptr, pair.psi);
  CHECK(again.phi == pair.phi);
  CHECK(again.psi == pair.psi);
  // T^f on x (x) alpha equals T_alpha(f(x))
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t i = 0; i < 2; ++i) {
      Vec expect = rb.apply(al, unit_vec(2, i));
      CHECK(pair.phi.col(extended_index(al, i, 2)) == expect);
    }

  // instance 2: the zero morphism is always transportable
  MorphismPair zero_pair = adjunction_transport(induced, rb, u2, adj, nullptr, Matrix(2, 2));
  CHECK(zero_pair.phi.is_zero());

  // instance 3: a twisted context (Reynolds family with h = -mu)
  Algebra n2 = corpus::nilpotent2();
  OperatorFamily rey = OperatorFamily::constant(
      FiniteSemigroup::trivial(), Matrix::identity(2) - corpus::nilpotent2_derivation());
  Cocycle2 h = Cocycle2::multiplication(n2);
  h.h *= Rational(-1);
  NSFamily tw_induced =
      induce_ns_family(NsSource::twisted_o(rey, n2, adjoint_bimodule(n2), &h));
  MorphismPair tw_pair =
      adjunction_transport(tw_induced, rey, n2, adjoint_bimodule(n2), &h, Matrix::identity(2));
  MorphismPair tw_again =
      adjunction_transport(tw_induced, rey, n2, adjoint_bimodule(n2), &h, tw_pair.psi);
  CHECK(tw_again.phi == tw_pair.phi);

  // a non-morphism is rejected with the first violated equation
  Matrix bad = Matrix::identity(2);
  bad.at(0, 1) = Rational(1);
  CHECK_THROWS_AS(adjunction_transport(induced, rb, u2, adj, nullptr, bad),
                  std::invalid_argument);
}

TEST_CASE("family morphisms transport to induced-structure morphisms") {
  // the adjoint pair (T^f, f) is a family morphism from the Id-family context
  // into (T, A, M); transport says f is then a morphism of the induced
  // family algebras
  Algebra u2 = corpus::lowered_unital(2);
  auto lz2 = FiniteSemigroup::left_zero(2);
  OperatorFamily rb = OperatorFamily::constant(lz2, corpus::shift_matrix(2));
  Bimodule adj = adjoint_bimodule(u2);
  NSFamily induced = induce_ns_family(NsSource::twisted_o(rb, u2, adj, nullptr));
  TotContext tc = total_context(induced);
  MorphismPair pair = adjunction_transport(induced, rb, u2, adj, nullptr, Matrix::identity(2));

  Cocycle2 zero_h = Cocycle2::zero(u2.dim, adj.module_dim);
  CHECK(check_morphism_transport(pair.phi, pair.psi, tc.id_family, tc.tot, tc.bimodule,
                                 &tc.cocycle, rb, u2, adj, &zero_h)
            .pass);

  // a pair failing the intertwining equation is reported as such
  Matrix wrong = pair.phi;
  wrong.at(0, 0) += Rational(1);
  CHECK_FALSE(check_morphism_transport(wrong, pair.psi, tc.id_family, tc.tot, tc.bimodule,
                                       &tc.cocycle, rb, u2, adj, &zero_h)
                  .pass);

  // identity pair on a twisted context transports trivially
  Algebra n2 = corpus::nilpotent2();
  OperatorFamily rey = OperatorFamily::constant(
      FiniteSemigroup::trivial(), Matrix::identity(2) - corpus::nilpotent2_derivation());
  Cocycle2 hneg = Cocycle2::multiplication(n2);
  hneg.h *= Rational(-1);
  CHECK(check_morphism_transport(Matrix::identity(2), Matrix::identity(2), rey, n2,
                                 adjoint_bimodule(n2), &hneg, rey, n2, adjoint_bimodule(n2),
                                 &hneg)
            .pass);
}

TEST_CASE("morphism predicates") {
  Algebra u2 = corpus::lowered_unital(2);
  CHECK(is_algebra_morphism(Matrix::identity(2), u2, u2).pass);
  CHECK_FALSE(is_algebra_morphism(corpus::shift_matrix(2), u2, u2).pass);

  auto lz2 = FiniteSemigroup::left_zero(2);
  DendriformFamily d = dendriform_from_o_family(
      OperatorFamily::constant(lz2, corpus::shift_matrix(2)), u2, adjoint_bimodule(u2));
  CHECK(is_dendriform_morphism(Matrix::identity(2), d, d).pass);
  CHECK(is_dendriform_morphism(Matrix(2, 2), d, d).pass);
}
