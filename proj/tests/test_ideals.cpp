#include <gtest/gtest.h>

#include <random>

#include "qtlie/errors.hpp"
#include "qtlie/ideals.hpp"
#include "qtlie/lie_hom.hpp"
#include "test_support.hpp"

using namespace qtlie;
using qtlie::testing::random_torus;

namespace {

QTorusElem X(const std::string& s, const TorusParams& p) { return QTorusElem::parse(s, p); }

// poly(t1^m) or poly(t2^m) as a torus element
QTorusElem lifted(const Poly& f, const TorusParams& p, bool second) {
  QTorusElem out(p);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    auto e = static_cast<std::int64_t>(k) * p.m();
    out += QTorusElem::monomial(p, second ? 0 : e, second ? e : 0, f.coeffs()[k]);
  }
  return out;
}

// An element of J(f,g): x f(t1^m) y + z g(t2^m) w.
QTorusElem random_in_ideal(std::mt19937_64& rng, const IdealFG& j) {
  const TorusParams& p = j.params();
  return random_torus(rng, p, 2, 2) * lifted(j.f(), p, false) * random_torus(rng, p, 2, 2) +
         random_torus(rng, p, 2, 2) * lifted(j.g(), p, true);
}

TorusMat random_lie_element(std::mt19937_64& rng, const TorusLie& lie, int terms) {
  std::uniform_int_distribution<int> idx(1, lie.n()), kind(0, 2);
  TorusMat m = lie.zero();
  for (int t = 0; t < terms; ++t) {
    int i = idx(rng), j = idx(rng);
    GenKind k = static_cast<GenKind>(kind(rng));
    while (k == GenKind::F && i == j) j = idx(rng);
    m += lie.embed(GenSym<QTorusElem>{k, i, j, random_torus(rng, lie.ring().params(), 2, 2)});
  }
  return m;
}

// A member of the overline ideal built from generators with coefficients in J.
TorusMat random_ovl_member(std::mt19937_64& rng, const TorusLie& lie, const IdealFG& j) {
  QTorusElem y = random_in_ideal(rng, j), z = random_in_ideal(rng, j);
  TorusMat m = lie.f(1, 1, y + qt_involution(y)) + lie.f(2, 2, z) - lie.f(1, 1, z);
  m += lie.f(1, 2, random_in_ideal(rng, j)) + lie.g(1, 3, random_in_ideal(rng, j)) + lie.h(2, 2, random_in_ideal(rng, j));
  return m;
}

Subspace span_of_elems(const FinAlgPtr& alg, const std::vector<FinAlgElem>& xs) { return span_in(*alg, xs); }

}  // namespace

TEST(Overline, Examples) {
  TorusParams p(1, 1, 1);
  IdealFG j(p, Poly::parse("T - 2"), Poly::parse("T - 3"));
  TorusLie lie(TorusRing(p), 3, -1);
  EXPECT_FALSE(ovl_membership(lie, lie.f(1, 2, X("t1", p)), j));
  EXPECT_TRUE(ovl_membership(lie, lie.f(1, 2, X("t1 - 2", p) * X("t2^-1 + 5*t1^3", p)), j));
  EXPECT_TRUE(ovl_membership(lie, lie.g(2, 3, X("t2*t1 - 3*t1", p)), j));
  // f_11(t1 - 2) has its f_11-part in J, f_11(1) does not
  EXPECT_TRUE(ovl_membership(lie, lie.f(1, 1, X("t1 - 2", p)), j));
  EXPECT_FALSE(ovl_membership(lie, lie.f(1, 1, X("1", p)) - lie.f(2, 2, X("1", p)), j));

  QuotientRing qr(j);
  FinMat img = quotient_map(lie.f(1, 2, X("t1", p)), qr);
  FinLieAlg ql = quotient_lie(lie, qr);
  EXPECT_EQ(img, ql.f(1, 2, qr.t1()));
  EXPECT_EQ(qr.t1(), FinAlgElem::scalar(qr.algebra(), GaussRat(2)));

  TorusParams other(-1, 1, 1);
  EXPECT_THROW(ovl_membership(TorusLie(TorusRing(other), 3, -1), TorusLie(TorusRing(other), 3, -1).zero(), j),
               std::invalid_argument);
  EXPECT_THROW(quotient_map(TorusLie(TorusRing(other), 3, -1).f(1, 2, X("t1", other)), j), std::invalid_argument);
  EXPECT_THROW(ovl_membership(lie, lie.unit(0, 1, X("t1", p)), j), std::invalid_argument);
}

TEST(Overline, KernelOfQuotientMap) {
  std::mt19937_64 rng(101);
  for (const auto& p : TorusParams::all()) {
    IdealFG j = ideal_alpha_beta(p, GaussRat(2), GaussRat(3));
    QuotientRing qr(j);
    TorusLie lie(TorusRing(p), 3, -1);
    int members = 0;
    for (int trial = 0; trial < 40; ++trial) {
      TorusMat a = trial % 2 == 0 ? random_ovl_member(rng, lie, j) : random_lie_element(rng, lie, 3);
      bool in = ovl_membership(lie, a, qr);
      members += in;
      EXPECT_EQ(in, quotient_map(a, qr).is_zero()) << p.to_string() << " " << a.to_string();
    }
    EXPECT_GE(members, 20);
    EXPECT_LT(members, 40);
  }
}

TEST(QuotientMap, PreservesBrackets) {
  std::mt19937_64 rng(103);
  for (const auto& p : TorusParams::all()) {
    QuotientRing qr(ideal_alpha_beta(p, GaussRat(2), GaussRat(3)));
    TorusLie lie(TorusRing(p), 3, 1);
    FinLieAlg ql = quotient_lie(lie, qr);
    for (int trial = 0; trial < 17; ++trial) {
      TorusMat a = random_lie_element(rng, lie, 3), b = random_lie_element(rng, lie, 3);
      EXPECT_EQ(quotient_map(lie.bracket(a, b), qr), ql.bracket(quotient_map(a, qr), quotient_map(b, qr)));
    }
  }
}

TEST(QuotientMap, ImageSpansTheQuotientAlgebra) {
  struct Case {
    TorusParams p;
    const char* f;
    const char* g;
  };
  for (const Case& c : {Case{TorusParams(1, 1, 1), "(T-2)*(T-3)", "T-5"}, Case{TorusParams(-1, 1, 1), "T-4", "T-9"},
                        Case{TorusParams(1, 1, -1), "T-2", "T^2-9"}}) {
    IdealFG j(c.p, Poly::parse(c.f), Poly::parse(c.g));
    QuotientRing qr(j);
    TorusLie lie(TorusRing(c.p), 2, -1);
    FinLieAlg ql = quotient_lie(lie, qr);
    LieBasis target = enumerate_basis(ql);
    Subspace img(target.ambient_dim());
    std::vector<TorusMat> gens;
    for (const auto& [a, b] : qr.basis_exponents())
      for (GenKind k : {GenKind::F, GenKind::G, GenKind::H})
        for (int i = 1; i <= 2; ++i)
          for (int l = 1; l <= 2; ++l)
            if (!(k == GenKind::F && i == l)) gens.push_back(lie.embed({k, i, l, QTorusElem::monomial(c.p, a, b)}));
    for (const auto& x : gens) img.insert(target.flat(quotient_map(x, qr)));
    for (std::size_t x = 0; x < gens.size(); x += 2)
      for (std::size_t y = 0; y < gens.size(); y += 3) img.insert(target.flat(quotient_map(lie.bracket(gens[x], gens[y]), qr)));
    EXPECT_EQ(img.dim(), target.size()) << c.p.to_string();
  }
}

TEST(RingSubspaces, SmallAlgebras) {
  FinAlgPtr m2 = matrix_algebra(2);
  EXPECT_EQ(center_of(*m2).dim(), 1u);
  EXPECT_EQ(trace_space(*m2).dim(), 4u);
  EXPECT_EQ(hat_plus(*m2, Subspace(4)).dim(), antisymmetric_part(*m2).dim());
  EXPECT_EQ(hat_ideal(*m2, Subspace(4)).dim(), 1u);
  FinAlgPtr k4 = klein_algebra();
  EXPECT_EQ(center_of(*k4).dim(), 4u);
  EXPECT_EQ(trace_space(*k4).dim(), 2u);  // 1 and τγ

  Subspace j1 = span_of_elems(k4, {FinAlgElem::parse("1 + tau*gamma", k4), FinAlgElem::parse("tau + gamma", k4)});
  EXPECT_TRUE(is_two_sided_ideal(*k4, j1));
  EXPECT_TRUE(is_involutive(*k4, j1));
  EXPECT_EQ(plus_part(*k4, j1).dim(), 1u);
  EXPECT_EQ(commutator_with(*k4, j1).dim(), 0u);

  FinAlgPtr sp = scalar_pair_algebra();
  Subspace e1 = span_of_elems(sp, {FinAlgElem::parse("e1", sp)});
  EXPECT_TRUE(is_two_sided_ideal(*sp, e1));
  EXPECT_FALSE(is_involutive(*sp, e1));
  Subspace e11 = span_of_elems(m2, {FinAlgElem::parse("E11", m2)});
  EXPECT_FALSE(is_two_sided_ideal(*m2, e11));

  // preimage of span(e_0) under x -> (x_0 + x_1) e_0 is everything
  Subspace t(1);
  t.insert(SparseVec::unit(0));
  EXPECT_EQ(preimage(2, {SparseVec::unit(0), SparseVec::unit(0)}, t).dim(), 2u);
  EXPECT_EQ(preimage(2, {SparseVec::unit(0), SparseVec::unit(0)}, Subspace(1)).dim(), 1u);
}

TEST(Flavors, RejectBadIdeals) {
  FinAlgPtr sp = scalar_pair_algebra();
  FinLieAlg lie(FinRing(sp), 2, -1);
  EXPECT_THROW(LieIdealSpec(lie, Flavor::Overline, span_of_elems(sp, {FinAlgElem::parse("e1", sp)})),
               std::invalid_argument);
  FinAlgPtr m2 = matrix_algebra(2);
  EXPECT_THROW(LieIdealSpec(FinLieAlg(FinRing(m2), 2, 1), Flavor::Tilde, span_of_elems(m2, {FinAlgElem::parse("E12", m2)})),
               std::invalid_argument);
  TorusParams p(1, 1, 1);
  TorusLie tl(TorusRing(p), 2, -1);
  IdealFG j(p, Poly::parse("T-2"), Poly::parse("T-3"));
  EXPECT_THROW(flavored_membership(tl, tl.zero(), j, Flavor::Tilde), UnsupportedError);
  EXPECT_THROW(flavored_membership(tl, tl.zero(), j, Flavor::Underline), UnsupportedError);
  EXPECT_TRUE(flavored_membership(tl, tl.f(1, 2, X("t1-2", p)), j, Flavor::Overline));
}

TEST(Flavors, NestedOnRandomMembers) {
  std::mt19937_64 rng(107);
  FinAlgPtr k4 = klein_algebra();
  QuotientRing qr(IdealFG(TorusParams(1, 1, 1), Poly::parse("(T-2)^2"), Poly::parse("T-3")));
  struct Case {
    FinAlgPtr alg;
    std::vector<FinAlgElem> gens;
  };
  std::vector<Case> cases{
      {k4, {FinAlgElem::parse("1 + tau*gamma", k4), FinAlgElem::parse("tau + gamma", k4)}},
      {qr.algebra(), {qr.t1() - FinAlgElem::scalar(qr.algebra(), GaussRat(2))}},
  };
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& c : cases)
    for (int rho : {-1, 1}) {
      FinLieAlg lie(FinRing(c.alg), 2, rho);
      Subspace j = ideal_generated(*c.alg, c.gens);
      LieIdealSpec under(lie, Flavor::Underline, j), over(lie, Flavor::Overline, j), tilde(lie, Flavor::Tilde, j);
      EXPECT_TRUE(over.span().contains_subspace(under.span()));
      EXPECT_TRUE(tilde.span().contains_subspace(over.span()));
      for (int trial = 0; trial < 50; ++trial) {
        FinMat m = lie.zero();
        for (const auto& e : under.elems()) m += GaussRat(coef(rng)) * e;
        EXPECT_TRUE(flavored_membership(m, under));
        EXPECT_TRUE(flavored_membership(m, over));
        EXPECT_TRUE(flavored_membership(m, tilde));
        EXPECT_TRUE(lie.grho_check(m));
      }
      for (const auto& e : tilde.elems()) EXPECT_TRUE(lie.grho_check(e));
    }
}

TEST(Flavors, ZeroIdeal) {
  for (FinAlgPtr alg : {matrix_algebra(2), klein_algebra(), tilde_matrix_algebra(), scalar_pair_algebra()}) {
    FinLieAlg lie(FinRing(alg), 2, -1);
    Subspace zero(alg->dim());
    EXPECT_EQ(LieIdealSpec(lie, Flavor::Underline, zero).dim(), 0u);
    EXPECT_EQ(LieIdealSpec(lie, Flavor::Overline, zero).dim(), 0u);
    // tilde(0) = (Σ f_ii)((R_+ + [R,R]) ∩ Z(R) ∩ R_-), computed here by brute force on the center
    Subspace z(alg->dim());
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      FinAlgElem e = FinAlgElem::basis(alg, i);
      bool central = true;
      for (std::size_t k = 0; k < alg->dim(); ++k) central = central && fin_commutator(e, FinAlgElem::basis(alg, k)).is_zero();
      if (central) z.insert(e.to_sparse());
    }
    std::size_t expected = intersect(intersect(trace_space(*alg), center_of(*alg)), antisymmetric_part(*alg)).dim();
    EXPECT_EQ(LieIdealSpec(lie, Flavor::Tilde, zero).dim(), expected);
    EXPECT_TRUE(center_of(*alg).contains_subspace(z));
  }
}

TEST(Flavors, OverlineEqualsUnderlineInQuotients) {
  struct Case {
    TorusParams p;
    const char *big_f, *big_g, *f, *g;
  };
  for (const Case& c : {Case{TorusParams(1, 1, 1), "(T-2)*(T-3)", "T-5", "T-2", "T-5"},
                        Case{TorusParams(1, 1, 1), "(T-2)^2", "(T-3)*(T+1)", "T-2", "T-3"},
                        Case{TorusParams(-1, 1, 1), "(T-4)*(T-9)", "T-1", "T-4", "T-1"},
                        Case{TorusParams(1, -1, -1), "(T^2-4)*(T^2-1)", "T^2-9", "T^2-4", "T^2-9"}}) {
    QuotientRing qr(IdealFG(c.p, Poly::parse(c.big_f), Poly::parse(c.big_g)));
    Poly f = Poly::parse(c.f), g = Poly::parse(c.g);
    FinAlgElem fi = fin_eval_poly(f, qr.t1_m()), gi = fin_eval_poly(g, qr.t2_m());
    Subspace j = ideal_generated(*qr.algebra(), {fi, gi});
    FinLieAlg lie(FinRing(qr.algebra()), 2, -1);
    LieIdealSpec over(lie, Flavor::Overline, j), under(lie, Flavor::Underline, j);
    EXPECT_TRUE(over.span().equals(under.span())) << c.p.to_string() << " " << c.big_f;
    EXPECT_GT(over.dim(), 0u);
  }
}

TEST(Closure, RandomIdealOfSimpleAlgebraIsEverything) {
  FinLieAlg lie(FinRing(matrix_algebra(2)), 3, -1);
  LieBasis basis = enumerate_basis(lie);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    FinMat x = basis.elems()[pick(rng)] + GaussRat(2) * basis.elems()[pick(rng)] - basis.elems()[pick(rng)];
    if (x.is_zero()) x = basis.elems()[0];
    EXPECT_EQ(ideal_closure(basis, {x}).span.dim(), basis.size()) << "seed " << seed;
  }
}

TEST(Closure, ProperIdealStaysProper) {
  QuotientRing qr(IdealFG(TorusParams(1, 1, 1), Poly::parse("(T-2)^2"), Poly::parse("T-3")));
  FinLieAlg lie(FinRing(qr.algebra()), 3, -1);
  LieBasis basis = enumerate_basis(lie);
  ASSERT_EQ(basis.size(), 42u);
  FinAlgElem eps = qr.t1() - FinAlgElem::scalar(qr.algebra(), GaussRat(2));
  auto closure = ideal_closure(basis, {lie.f(1, 2, eps)});
  EXPECT_EQ(closure.span.dim(), 21u);
}

TEST(Extract, RoundTripsInQuotient) {
  TorusParams p(1, 1, 1);
  QuotientRing qr(IdealFG(p, Poly::parse("(T-2)*(T-3)"), Poly::parse("T-5")));
  FinLieAlg lie(FinRing(qr.algebra()), 3, -1);
  FinAlgElem gen = qr.t1() - FinAlgElem::scalar(qr.algebra(), GaussRat(2));
  Subspace j = ideal_generated(*qr.algebra(), {gen});
  ASSERT_EQ(j.dim(), 1u);

  LieIdealSpec over(lie, Flavor::Overline, j);
  ExtractReport rep = extract_ideal(lie, over.elems());
  EXPECT_TRUE(rep.checks.all()) << rep.checks.first_failure();
  EXPECT_TRUE(rep.j.equals(j));
  EXPECT_TRUE(rep.bounds_coincide);

  ExtractReport none = extract_ideal(lie, {});
  EXPECT_EQ(none.j.dim(), 0u);
  EXPECT_TRUE(none.checks.all()) << none.checks.first_failure();

  ExtractReport all = extract_ideal(lie, enumerate_basis(lie).elems());
  EXPECT_EQ(all.j.dim(), qr.dim());
  EXPECT_TRUE(all.checks.all()) << all.checks.first_failure();

  EXPECT_THROW(extract_ideal(lie, {lie.f(1, 2, qr.t1())}), std::invalid_argument);
  EXPECT_THROW(extract_ideal(FinLieAlg(FinRing(qr.algebra()), 2, -1), {}), UnsupportedError);
}

TEST(Extract, KleinIdealsAndUnderline) {
  FinAlgPtr k4 = klein_algebra();
  FinLieAlg lie(FinRing(k4), 3, 1);
  Subspace j1 = span_of_elems(k4, {FinAlgElem::parse("1 + tau*gamma", k4), FinAlgElem::parse("tau + gamma", k4)});
  for (Flavor fl : {Flavor::Underline, Flavor::Overline, Flavor::Tilde}) {
    LieIdealSpec spec(lie, fl, j1);
    ExtractReport rep = extract_ideal(lie, spec.elems());
    EXPECT_TRUE(rep.checks.all()) << flavor_name(fl) << ": " << rep.checks.first_failure();
    EXPECT_TRUE(rep.j.equals(j1));
  }
}

TEST(Extract, DiagonalCoefficientSets) {
  // underline(J) over a non-reduced quotient, where J_+ + [J,R] may be
  // smaller than (R_+ + [R,R]) ∩ J
  QuotientRing qr(IdealFG(TorusParams(1, 1, -1), Poly::parse("(T-2)^2"), Poly::parse("T^2-9")));
  FinLieAlg lie(FinRing(qr.algebra()), 3, -1);
  Subspace j = ideal_generated(*qr.algebra(), {qr.t1() - FinAlgElem::scalar(qr.algebra(), GaussRat(2))});
  LieIdealSpec under(lie, Flavor::Underline, j);
  ExtractReport rep = extract_ideal(lie, under.elems());
  EXPECT_TRUE(rep.checks.all()) << rep.checks.first_failure();
  EXPECT_TRUE(rep.i_space.equals(rep.lower_bound));
}

TEST(HomTables, BuiltinTablesAreIsomorphisms) {
  for (int rho : {-1, 1}) {
    for (const auto& t : builtin_iso_tables(2, rho)) {
      Report r = hom_verify(t);
      EXPECT_TRUE(r.pass) << t.name << ": " << r.witness;
      EXPECT_EQ(r.details["image_rank"].get<std::size_t>(), t.codomain_dim) << t.name;
    }
  }
}

TEST(HomTables, DimensionsAtThree) {
  Report m = hom_verify(matrix_iso_table(3, 1, 2));
  EXPECT_TRUE(m.pass) << m.witness;
  EXPECT_EQ(m.details["domain_dim"].get<std::size_t>(), 66u);
  Report k = hom_verify(klein_iso_table(3, -1));
  EXPECT_TRUE(k.pass) << k.witness;
  EXPECT_EQ(k.details["domain_dim"].get<std::size_t>(), 70u);
  for (int rho : {-1, 1}) {
    LieHomTable t = tilde_iso_table(3, rho);
    EXPECT_EQ(enumerate_basis(t.codomain).size(), t.codomain_dim);
    EXPECT_EQ(t.codomain_dim, static_cast<std::size_t>(8 * 9 + 2 * rho * 3));
  }
}

TEST(HomTables, PairedInverse) {
  for (int rho : {-1, 1}) {
    Report k = op_pair_inverse_check(2, rho, scalar_algebra());
    EXPECT_TRUE(k.pass) << k.witness;
    Report m = op_pair_inverse_check(2, rho, matrix_algebra(2));
    EXPECT_TRUE(m.pass) << m.witness;
  }
}

TEST(HomTables, TildeExampleImages) {
  LieHomTable t = tilde_iso_table(2, -1);
  FinAlgPtr mt = t.codomain.ring().algebra();
  FinAlgPtr m2 = t.domain.ring().algebra();
  // g_12(E_11) -> (-1)^{3-1} g_12(E_12)
  EXPECT_EQ(t.rule(FinGen{GenKind::G, 1, 2, FinAlgElem::parse("E11", m2)}),
            t.codomain.g(1, 2, FinAlgElem::parse("E12", mt)));
  EXPECT_EQ(t.rule(FinGen{GenKind::G, 1, 2, FinAlgElem::parse("E12", m2)}),
            GaussRat(-1) * t.codomain.g(1, 2, FinAlgElem::parse("E11", mt)));
  EXPECT_EQ(t.rule(FinGen{GenKind::F, 2, 1, FinAlgElem::parse("E21", m2)}),
            t.codomain.f(2, 1, FinAlgElem::parse("E21", mt)));
}

TEST(HomTables, CorruptedImageIsLocalized) {
  LieHomTable t = matrix_iso_table(2, -1, 2);
  ASSERT_FALSE(t.images[0].is_zero());
  auto [pos, v] = *t.images[0].entries().begin();
  t.images[0].add(pos.first, pos.second, GaussRat(-2) * v);
  Report r = hom_verify(t);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("F(1,2; E11)"), std::string::npos) << r.witness;
  EXPECT_EQ(r.to_json()["status"], "fail");
}
