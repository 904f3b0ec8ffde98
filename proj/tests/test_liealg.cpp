#include <gtest/gtest.h>

#include <random>

#include "qtlie/errors.hpp"
#include "qtlie/lie.hpp"
#include "qtlie/lie_basis.hpp"
#include "test_support.hpp"

using namespace qtlie;
using qtlie::testing::random_torus;

namespace {

using TLie = GradedLie<TorusRing>;
using TMat = TLie::Mat;
using TGen = TLie::Gen;

QTorusElem X(const std::string& s, const TorusParams& p) { return QTorusElem::parse(s, p); }

// Dense 2n x 2n matrices: the slow, obvious implementation of the same algebra.
struct Dense {
  std::vector<std::vector<QTorusElem>> a;

  Dense(int size, const TorusParams& p) : a(size, std::vector<QTorusElem>(size, QTorusElem(p))) {}
  static Dense of(const TMat& m, const TorusParams& p) {
    Dense d(2 * m.n(), p);
    for (const auto& [pos, v] : m.entries()) d.a[pos.first][pos.second] = v;
    return d;
  }
  int size() const { return static_cast<int>(a.size()); }
  TMat to_sparse() const {
    TMat m(size() / 2);
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c) m.add(r, c, a[r][c]);
    return m;
  }
};

Dense dense_mul(const Dense& x, const Dense& y, const TorusParams& p) {
  Dense r(x.size(), p);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      for (int k = 0; k < x.size(); ++k) r.a[i][j] += x.a[i][k] * y.a[k][j];
  return r;
}

// M^{-1} conj(A)^t M with M built as an actual matrix.
Dense dense_star(const Dense& x, int rho, const TorusParams& p) {
  int n = x.size() / 2;
  Dense m(2 * n, p), minv(2 * n, p), bt(2 * n, p);
  for (int i = 0; i < n; ++i) {
    m.a[i][n + i] = QTorusElem::scalar(p, GaussRat(1));
    m.a[n + i][i] = QTorusElem::scalar(p, GaussRat(rho));
    minv.a[i][n + i] = QTorusElem::scalar(p, GaussRat(rho));
    minv.a[n + i][i] = QTorusElem::scalar(p, GaussRat(1));
  }
  EXPECT_EQ(dense_mul(m, minv, p).to_sparse(), TLie(TorusRing(p), n, rho).f(1, 1, QTorusElem::scalar(p, GaussRat(0))) +
                                                    [&] {
                                                      TMat id(n);
                                                      for (int i = 0; i < 2 * n; ++i) id.add(i, i, QTorusElem::scalar(p, GaussRat(1)));
                                                      return id;
                                                    }());
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) bt.a[r][c] = qt_involution(x.a[c][r]);
  return dense_mul(dense_mul(minv, bt, p), m, p);
}

TGen random_gen(std::mt19937_64& rng, const TLie& lie) {
  std::uniform_int_distribution<int> idx(1, lie.n()), kind(0, 2);
  GenKind k = static_cast<GenKind>(kind(rng));
  int i = idx(rng), j = idx(rng);
  if (k == GenKind::F) {
    while (j == i) j = idx(rng);
  }
  return TGen{k, i, j, random_torus(rng, lie.ring().params(), 2)};
}

TMat random_element(std::mt19937_64& rng, const TLie& lie, int terms = 3) {
  TMat m = lie.zero();
  for (int t = 0; t < terms; ++t) m += lie.embed(random_gen(rng, lie));
  return m;
}

TMat random_dense(std::mt19937_64& rng, const TLie& lie) {
  TMat m = lie.zero();
  for (int r = 0; r < 2 * lie.n(); ++r)
    for (int c = 0; c < 2 * lie.n(); ++c) m.add(r, c, random_torus(rng, lie.ring().params(), 2, 2));
  return m;
}

}  // namespace

TEST(Embed, DefiningMatrices) {
  TorusParams p(-1, 1, 1);
  TLie lie(TorusRing(p), 2, -1);
  TMat f12 = lie.f(1, 2, X("t1*t2", p));
  ASSERT_EQ(f12.entries().size(), 2u);
  EXPECT_EQ(*f12.at(0, 1), X("t1*t2", p));
  EXPECT_EQ(*f12.at(3, 2), X("t1*t2", p));  // -conj(t1 t2) = t1 t2 here

  TLie pos(TorusRing(TorusParams(1, 1, 1)), 3, 1);
  EXPECT_TRUE(pos.g(2, 2, X("t1 + 3", pos.ring().params())).is_zero());

  TMat h12 = lie.h(1, 2, X("t1", p));
  ASSERT_EQ(h12.entries().size(), 2u);
  EXPECT_EQ(*h12.at(2, 1), X("t1", p));
  EXPECT_EQ(*h12.at(3, 0), X("t1", p));
  EXPECT_THROW(lie.f(0, 1, X("1", p)), std::invalid_argument);
  EXPECT_THROW(lie.g(1, 3, X("1", p)), std::invalid_argument);
}

TEST(Bracket, AgreesWithDenseProducts) {
  std::mt19937_64 rng(43);
  for (const auto& p : TorusParams::all()) {
    TLie lie(TorusRing(p), 3, p.q() == 1 ? 1 : -1);
    for (int trial = 0; trial < 20; ++trial) {
      TMat a = random_element(rng, lie), b = random_element(rng, lie);
      Dense da = Dense::of(a, p), db = Dense::of(b, p);
      Dense ab = dense_mul(da, db, p), ba = dense_mul(db, da, p);
      TMat expected = ab.to_sparse() - ba.to_sparse();
      EXPECT_EQ(lie.bracket(a, b), expected);
      EXPECT_TRUE(lie.bracket(a, a).is_zero());
    }
  }
}

TEST(Bracket, Examples) {
  TorusParams p(-1, 1, 1);
  TLie lie(TorusRing(p), 3, -1);
  QTorusElem t1 = X("t1", p), t2 = X("t2", p);
  TMat lhs = lie.bracket(lie.f(1, 2, t1), lie.f(2, 1, t2));
  EXPECT_EQ(lhs, lie.f(1, 1, t1 * t2) - lie.f(2, 2, t2 * t1));
  EXPECT_EQ(lie.f(2, 2, t2 * t1), lie.f(2, 2, X("-t1*t2", p)));

  TLie four(TorusRing(p), 4, 1);
  EXPECT_TRUE(four.bracket(four.g(1, 2, t1), four.g(3, 4, t2)).is_zero());
  EXPECT_TRUE(four.bracket(four.h(1, 2, t1), four.h(1, 2, t2)).is_zero());
}

TEST(SymbolicBracket, Examples) {
  TorusParams p(1, 1, -1);
  TLie lie(TorusRing(p), 3, -1);
  QTorusElem a = X("t1 + 2*t2", p), b = X("t2^-1", p);
  auto r = lie.symbolic_bracket(TGen{GenKind::F, 1, 2, a}, TGen{GenKind::F, 2, 3, b});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (TGen{GenKind::F, 1, 3, a * b}));

  auto gh = lie.symbolic_bracket(TGen{GenKind::G, 1, 2, a}, TGen{GenKind::H, 2, 1, b});
  EXPECT_EQ(lie.embed_sum(gh), lie.f(1, 1, a * b) + lie.f(2, 2, qt_involution(a) * qt_involution(b)));

  EXPECT_TRUE(lie.symbolic_bracket(TGen{GenKind::F, 1, 1, a}, TGen{GenKind::F, 2, 2, b}).empty());
  EXPECT_TRUE(lie.symbolic_bracket(TGen{GenKind::G, 1, 2, a}, TGen{GenKind::G, 1, 3, b}).empty());
}

TEST(SymbolicBracket, MatchesMatrixBracketForAllKindPairs) {
  std::mt19937_64 rng(47);
  for (const auto& p : TorusParams::all()) {
    for (int rho : {-1, 1}) {
      TLie lie(TorusRing(p), 3, rho);
      for (int trial = 0; trial < 150; ++trial) {
        TGen x = random_gen(rng, lie), y = random_gen(rng, lie);
        x.i = y.i == 0 ? 1 : x.i;  // keep indices colliding often
        auto sym = lie.symbolic_bracket(x, y);
        ASSERT_EQ(lie.embed_sum(sym), lie.bracket(lie.embed(x), lie.embed(y)))
            << p.to_string() << " rho=" << rho << " " << x.to_string() << " " << y.to_string();
        for (const auto& s : sym) {
          EXPECT_FALSE(s.coeff.is_zero());
          if (s.kind != GenKind::F) EXPECT_LE(s.i, s.j);
        }
      }
    }
  }
}

TEST(SymbolicBracket, NormalizationKeepsTheMatrix) {
  std::mt19937_64 rng(53);
  for (const auto& p : TorusParams::all()) {
    TLie lie(TorusRing(p), 3, p.theta2());
    for (int trial = 0; trial < 50; ++trial) {
      TGen x = random_gen(rng, lie);
      EXPECT_EQ(lie.embed(lie.normalize(x)), lie.embed(x));
      EXPECT_EQ(lie.normalize(lie.normalize(x)), lie.normalize(x));
    }
  }
}

TEST(Star, AgreesWithDenseConjugation) {
  std::mt19937_64 rng(59);
  for (const auto& p : TorusParams::all()) {
    for (int rho : {-1, 1}) {
      TLie lie(TorusRing(p), 3, rho);
      for (int trial = 0; trial < 5; ++trial) {
        TMat a = random_dense(rng, lie);
        EXPECT_EQ(lie.star(a), dense_star(Dense::of(a, p), rho, p).to_sparse());
      }
    }
  }
}

TEST(Star, InvolutiveAntiAutomorphism) {
  std::mt19937_64 rng(61);
  for (const auto& p : TorusParams::all()) {
    TLie lie(TorusRing(p), 3, -1);
    for (int trial = 0; trial < 20; ++trial) {
      TMat a = random_dense(rng, lie), b = random_dense(rng, lie);
      EXPECT_EQ(lie.star(lie.mul(a, b)), lie.mul(lie.star(b), lie.star(a)));
      EXPECT_EQ(lie.star(lie.star(a)), a);
    }
  }
}

TEST(Star, Examples) {
  TorusParams p(1, 1, -1);
  TLie pos(TorusRing(p), 3, 1);
  QTorusElem a = X("t1*t2 + 2", p);
  EXPECT_EQ(pos.star(pos.unit(0, 3, a)), pos.unit(0, 3, qt_involution(a)));
  EXPECT_TRUE(pos.star(pos.zero()).is_zero());
  std::mt19937_64 rng(67);
  for (int rho : {-1, 1}) {
    TLie lie(TorusRing(p), 3, rho);
    for (int trial = 0; trial < 50; ++trial) {
      TGen x = random_gen(rng, lie);
      EXPECT_TRUE(lie.lrho_check(lie.embed(x))) << x.to_string();
    }
  }
}

TEST(Grho, TraceCriterion) {
  TorusParams p(-1, 1, 1);
  TLie lie(TorusRing(p), 3, -1);
  EXPECT_TRUE(lie.grho_check(lie.f(1, 1, X("1", p))));
  EXPECT_EQ(lie.trace(lie.f(1, 1, X("t1*t2", p))), X("2*t1*t2", p));
  EXPECT_TRUE(lie.grho_check(lie.f(1, 1, X("t1*t2", p))));
  TorusParams c(1, 1, -1);
  TLie com(TorusRing(c), 3, -1);
  EXPECT_EQ(com.trace(com.f(1, 1, X("t2", c))), X("2*t2", c));
  EXPECT_FALSE(com.grho_check(com.f(1, 1, X("t2", c))));
  EXPECT_TRUE(com.lrho_check(com.f(1, 1, X("t2", c))));
  TLie small(TorusRing(c), 1, -1);
  EXPECT_THROW(small.grho_check(small.zero()), std::invalid_argument);
}

TEST(Grho, BracketsStayInside) {
  std::mt19937_64 rng(71);
  for (const auto& p : TorusParams::all()) {
    TLie lie(TorusRing(p), 3, -1);
    for (int trial = 0; trial < 30; ++trial) {
      TMat a = random_element(rng, lie), b = random_element(rng, lie);
      // f_11(c) is in L_ρ for every c but in g only when c̄ - c ∈ [R,R].
      TMat la = a + lie.f(1, 1, random_torus(rng, p, 2));
      TMat lb = b + lie.f(2, 2, random_torus(rng, p, 2));
      EXPECT_TRUE(lie.lrho_check(lie.bracket(la, lb)));
      EXPECT_TRUE(lie.grho_check(lie.bracket(la, lb)));
      EXPECT_TRUE(lie.grho_check(lie.bracket(a, b)));
    }
  }
}

TEST(Roots, DecompositionExamples) {
  TorusParams p(-1, 1, -1);
  TLie lie(TorusRing(p), 3, -1);
  QTorusElem a = X("t1 + t2^2", p);
  auto parts = lie.root_decompose(lie.f(1, 2, a));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.begin()->first.to_string(), "e1-e2");
  auto g11 = lie.root_decompose(lie.g(1, 1, X("t1*t2", p)));
  ASSERT_EQ(g11.size(), 1u);
  EXPECT_EQ(g11.begin()->first.to_string(), "2e1");
  TMat diag = lie.f(1, 1, a) - lie.f(2, 2, a);
  auto d = lie.root_decompose(diag);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.begin()->first.is_zero());
  EXPECT_EQ(d.begin()->second, diag);
  EXPECT_EQ(lie.root_decompose(lie.h(2, 3, a)).begin()->first.to_string(), "-e2-e3");
  EXPECT_THROW(lie.root_decompose(lie.unit(0, 1, a)), std::invalid_argument);
}

TEST(Roots, GradingIsRespected) {
  std::mt19937_64 rng(73);
  for (const auto& p : TorusParams::all()) {
    TLie lie(TorusRing(p), 3, p.theta1());
    for (int trial = 0; trial < 30; ++trial) {
      TMat a = random_element(rng, lie, 4), b = random_element(rng, lie, 4);
      auto pa = lie.root_decompose(a), pb = lie.root_decompose(b);
      TMat sum = lie.zero();
      for (const auto& [r, m] : pa) {
        EXPECT_TRUE(is_root_or_zero(r)) << r.to_string();
        sum += m;
      }
      EXPECT_EQ(sum, a);
      for (const auto& [ra, ma] : pa)
        for (const auto& [rb, mb] : pb) {
          TMat br = lie.bracket(ma, mb);
          if (br.is_zero()) continue;
          RootLabel target = ra + rb;
          EXPECT_TRUE(is_root_or_zero(target));
          auto parts = lie.root_decompose(br);
          ASSERT_EQ(parts.size(), 1u);
          EXPECT_EQ(parts.begin()->first, target);
        }
    }
  }
}

TEST(Perfectness, WitnessExamples) {
  TorusParams p(1, 1, 1);
  TLie lie(TorusRing(p), 3, -1);
  QTorusElem a = X("t1 - t2", p), one = X("1", p);
  auto [x1, y1] = lie.perfectness_witness(TGen{GenKind::F, 1, 3, a});
  EXPECT_EQ(x1, (TGen{GenKind::F, 1, 2, a}));
  EXPECT_EQ(y1, (TGen{GenKind::F, 2, 3, one}));
  auto [x2, y2] = lie.perfectness_witness(TGen{GenKind::G, 1, 2, a});
  EXPECT_EQ(x2, (TGen{GenKind::F, 1, 3, a}));
  EXPECT_EQ(y2, (TGen{GenKind::G, 3, 2, one}));
  auto [x3, y3] = lie.perfectness_witness(TGen{GenKind::H, 1, 2, a});
  EXPECT_EQ(x3, (TGen{GenKind::F, 3, 2, X("-1", p)}));
  EXPECT_EQ(y3, (TGen{GenKind::H, 1, 3, a}));
  TLie two(TorusRing(p), 2, -1);
  EXPECT_THROW(two.perfectness_witness(TGen{GenKind::F, 1, 2, a}), UnsupportedError);
  EXPECT_THROW(lie.perfectness_witness(TGen{GenKind::F, 2, 2, a}), std::invalid_argument);
}

TEST(Perfectness, WitnessesRoundTrip) {
  std::mt19937_64 rng(79);
  for (const auto& p : TorusParams::all()) {
    for (int rho : {-1, 1}) {
      TLie lie(TorusRing(p), 3, rho);
      for (GenKind kind : {GenKind::F, GenKind::G, GenKind::H})
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) {
            if (kind == GenKind::F && i == j) continue;
            TGen s{kind, i, j, random_torus(rng, p)};
            auto [x, y] = lie.perfectness_witness(s);
            EXPECT_EQ(lie.embed_sum(lie.symbolic_bracket(x, y)), lie.embed(s));
            EXPECT_EQ(lie.bracket(lie.embed(x), lie.embed(y)), lie.embed(s));
          }
    }
  }
}

TEST(Jacobi, RandomTriples) {
  std::mt19937_64 rng(83);
  for (const auto& p : TorusParams::all()) {
    TLie lie(TorusRing(p), 3, -1);
    for (int trial = 0; trial < 30; ++trial) {
      TMat a = random_element(rng, lie, 2), b = random_element(rng, lie, 2), c = random_element(rng, lie, 2);
      TMat j = lie.bracket(a, lie.bracket(b, c)) + lie.bracket(b, lie.bracket(c, a)) + lie.bracket(c, lie.bracket(a, b));
      EXPECT_TRUE(j.is_zero());
    }
  }
}

TEST(GenText, ParseGenerators) {
  TorusParams p(-1, 1, 1);
  TLie lie(TorusRing(p), 3, -1);
  TGen g = lie.parse_gen("F(1,2; t1*t2)");
  EXPECT_EQ(g, (TGen{GenKind::F, 1, 2, X("t1*t2", p)}));
  EXPECT_EQ(lie.parse_gen(" G( 1 , 1 ; 2+1/2*i )").coeff, X("2+1/2*i", p));
  EXPECT_EQ(g.to_string(), "F(1,2; t1*t2)");
  EXPECT_THROW(lie.parse_gen("F(1,2 t1)"), ParseError);
  EXPECT_THROW(lie.parse_gen("F(1,4; t1)"), std::invalid_argument);
}

TEST(EnumerateBasis, DimensionCounts) {
  EXPECT_EQ(enumerate_basis(FinLieAlg(FinRing(scalar_algebra()), 3, -1)).size(), 21u);
  EXPECT_EQ(enumerate_basis(FinLieAlg(FinRing(matrix_algebra(2)), 3, 1)).size(), 66u);
  EXPECT_EQ(enumerate_basis(FinLieAlg(FinRing(klein_algebra()), 3, -1)).size(), 70u);
  EXPECT_EQ(enumerate_basis(FinLieAlg(FinRing(klein_algebra()), 3, 1)).size(), 70u);
  for (int rho : {-1, 1})
    for (std::size_t m : {1u, 2u}) {
      auto basis = enumerate_basis(FinLieAlg(FinRing(matrix_algebra(m)), 2, rho));
      EXPECT_EQ(basis.size(), graded_dim(2 * m, rho)) << "m=" << m << " rho=" << rho;
    }
  EXPECT_THROW(enumerate_basis(FinLieAlg(FinRing(scalar_algebra()), 1, -1)), std::invalid_argument);
  EXPECT_THROW(enumerate_basis(TLie(TorusRing(TorusParams(1, 1, 1)), 3, -1)), UnsupportedError);
}

TEST(EnumerateBasis, ClosedUnderBracketAndInsideG) {
  for (auto alg : {scalar_algebra(), tilde_matrix_algebra(), scalar_pair_algebra()}) {
    for (int rho : {-1, 1}) {
      FinLieAlg lie(FinRing(alg), 3, rho);
      LieBasis basis = enumerate_basis(lie);
      for (const auto& e : basis.elems()) EXPECT_TRUE(lie.grho_check(e));
      for (std::size_t x = 0; x < basis.size(); x += 3)
        for (std::size_t y = x + 1; y < basis.size(); ++y) {
          ASSERT_TRUE(basis.coordinates(lie.bracket(basis.elems()[x], basis.elems()[y])).has_value())
              << basis.labels()[x] << " " << basis.labels()[y];
        }
    }
  }
}

TEST(EnumerateBasis, FlattenRoundTrip) {
  FinLieAlg lie(FinRing(klein_algebra()), 2, -1);
  LieBasis basis = enumerate_basis(lie);
  for (const auto& e : basis.elems()) {
    EXPECT_EQ(unflatten(flatten(e, 4), 2, lie.ring().algebra()), e);
  }
}
