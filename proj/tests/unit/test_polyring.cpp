#include "nodalhodge/polyring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nodalhodge;

namespace {

HomoPoly kummer() {
  HomoPoly f(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    ExpVec e(4, 0);
    e[i] = 4;
    f.add_term(e, GaussRat(1));
    for (std::size_t j = i + 1; j < 4; ++j) {
      ExpVec m(4, 0);
      m[i] = 2;
      m[j] = 2;
      f.add_term(m, GaussRat(-1));
    }
  }
  return f;
}

GaussRat gi(long re, long im) { return GaussRat(BigRat(re), BigRat(im)); }

HomoPoly random_poly(std::mt19937_64& rng, std::size_t n_vars, int degree) {
  std::uniform_int_distribution<long> coef(-3, 3);
  HomoPoly p(n_vars, degree);
  for (const ExpVec& e : monomial_basis(n_vars, degree)) {
    if (rng() % 3 == 0) p.add_term(e, gi(coef(rng), coef(rng)));
  }
  return p;
}

}  // namespace

TEST(MonomialBasis, SmallCases) {
  EXPECT_EQ(monomial_basis(2, 3), (std::vector<ExpVec>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  EXPECT_EQ(monomial_basis(4, 0), (std::vector<ExpVec>{{0, 0, 0, 0}}));
  EXPECT_EQ(monomial_basis(4, 8).size(), 165U);
  EXPECT_TRUE(monomial_basis(3, -1).empty());
}

TEST(MonomialBasis, CountsIndicesAndOrder) {
  for (std::size_t n_vars = 1; n_vars <= 6; ++n_vars) {
    for (int k = 0; k <= 7; ++k) {
      const auto basis = monomial_basis(n_vars, k);
      ASSERT_EQ(basis.size(), monomial_count(n_vars, k));
      std::set<ExpVec> seen(basis.begin(), basis.end());
      EXPECT_EQ(seen.size(), basis.size());
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        EXPECT_EQ(exp_degree(basis[idx]), k);
        EXPECT_EQ(monomial_index(basis[idx]), idx);
        if (idx > 0) EXPECT_TRUE(GrlexDesc{}(basis[idx - 1], basis[idx]));
      }
    }
  }
}

TEST(HomoPoly, RejectsWrongDegreeTerms) {
  HomoPoly p(3, 2);
  EXPECT_THROW(p.add_term({1, 0, 0}, GaussRat(1)), DegreeMismatch);
  EXPECT_THROW(p.add_term({1, 1}, GaussRat(1)), DegreeMismatch);
}

TEST(HomoPoly, Partials) {
  const HomoPoly p = HomoPoly::monomial({2, 1});
  EXPECT_EQ(partial(p, 0), HomoPoly::monomial({1, 1}, GaussRat(2)));
  const HomoPoly q = HomoPoly::monomial({3, 0});
  EXPECT_TRUE(partial(q, 1).is_zero());
  EXPECT_EQ(partial(q, 1).degree(), 2);
  EXPECT_TRUE(partial(HomoPoly::monomial({0, 0}), 0).is_zero());
}

TEST(HomoPoly, KummerPartialsMatchClosedForm) {
  const HomoPoly f = kummer();
  for (std::size_t j = 0; j < 4; ++j) {
    // 2 x_j (2 x_j^2 - sum_{i != j} x_i^2)
    HomoPoly inner(4, 2);
    ExpVec sq(4, 0);
    sq[j] = 2;
    inner.add_term(sq, GaussRat(2));
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == j) continue;
      ExpVec e(4, 0);
      e[i] = 2;
      inner.add_term(e, GaussRat(-1));
    }
    ExpVec xj(4, 0);
    xj[j] = 1;
    EXPECT_EQ(partial(f, j), mul(HomoPoly::monomial(xj, GaussRat(2)), inner));
  }
}

TEST(HomoPoly, IteratedPartials) {
  const HomoPoly f = kummer();
  EXPECT_EQ(iterated_partial(f, {0, 0, 0, 0}), f);
  EXPECT_EQ(iterated_partial(HomoPoly::monomial({2, 0}), {2, 0}), HomoPoly::monomial({0, 0}, GaussRat(2)));
  EXPECT_EQ(iterated_partial(f, {1, 1, 0, 0}), HomoPoly::monomial({1, 1, 0, 0}, GaussRat(-4)));
}

TEST(HomoPoly, PartialsCommute) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const HomoPoly p = random_poly(rng, 4, 5);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        EXPECT_EQ(partial(partial(p, a), b), partial(partial(p, b), a));
      }
    }
  }
}

TEST(HomoPoly, Multiplication) {
  EXPECT_EQ(mul(HomoPoly::monomial({1, 0}), HomoPoly::monomial({0, 1})), HomoPoly::monomial({1, 1}));
  EXPECT_TRUE(mul(HomoPoly::monomial({1, 0}), HomoPoly(2, 3)).is_zero());
  const HomoPoly s = HomoPoly::monomial({1, 0}) + HomoPoly::monomial({0, 1});
  HomoPoly expected(2, 2);
  expected.add_term({2, 0}, GaussRat(1));
  expected.add_term({1, 1}, GaussRat(2));
  expected.add_term({0, 2}, GaussRat(1));
  EXPECT_EQ(mul(s, s), expected);
  EXPECT_EQ(pow(s, 2), expected);
}

TEST(HomoPoly, RowRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const HomoPoly p = random_poly(rng, 5, 4);
    EXPECT_EQ(HomoPoly::from_row(5, 4, p.to_row()), p);
  }
}

TEST(HomoPoly, EulerIdentity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const HomoPoly p = random_poly(rng, 4, 4);
    HomoPoly lhs(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      ExpVec e(4, 0);
      e[j] = 1;
      lhs += mul(HomoPoly::monomial(e), partial(p, j));
    }
    EXPECT_EQ(lhs, p * GaussRat(4));
  }
}

TEST(Evaluate, Points) {
  const HomoPoly f = kummer();
  EXPECT_TRUE(evaluate(f, ProjPoint({0, 1, 1, 1})).is_zero());
  EXPECT_EQ(evaluate(HomoPoly::monomial({1, 0, 0}), ProjPoint({1, 0, 0})), GaussRat(1));
  // (x0^2 + ... + x3^2)^3 - (x0^6 + ... + x3^6) at (1, 0, i, i)
  HomoPoly s(4, 2);
  HomoPoly six(4, 6);
  for (std::size_t j = 0; j < 4; ++j) {
    ExpVec e(4, 0);
    e[j] = 2;
    s.add_term(e, GaussRat(1));
    e[j] = 6;
    six.add_term(e, GaussRat(1));
  }
  const HomoPoly g = pow(s, 3) - six;
  EXPECT_TRUE(evaluate(g, ProjPoint({1, 0, gi(0, 1), gi(0, 1)})).is_zero());
}

TEST(Evaluate, RingHomomorphism) {
  std::mt19937_64 rng(9);
  const std::vector<GaussRat> y = {gi(1, 2), gi(-1, 0), gi(0, 3)};
  for (int t = 0; t < 10; ++t) {
    const HomoPoly p = random_poly(rng, 3, 3);
    const HomoPoly q = random_poly(rng, 3, 2);
    const HomoPoly r = random_poly(rng, 3, 3);
    EXPECT_EQ(evaluate(mul(p, q), y), evaluate(p, y) * evaluate(q, y));
    EXPECT_EQ(evaluate(p + r, y), evaluate(p, y) + evaluate(r, y));
  }
}

TEST(ProjPoint, NormalizesAtFirstNonzero) {
  const ProjPoint p({0, gi(0, 2), 4, 0});
  EXPECT_EQ(p.pivot(), 1U);
  EXPECT_EQ(p[1], GaussRat(1));
  EXPECT_EQ(p[2], gi(0, -2));
  EXPECT_THROW(ProjPoint({0, 0}), std::invalid_argument);
}

TEST(Hessian, NodeOfWitnessFamily) {
  // sum_{i>=1} x_i^4/4 - x_0^2 sum_{i>=1} x_i^2/2 at (1,0,0,0)
  HomoPoly f(4, 4);
  for (std::size_t i = 1; i < 4; ++i) {
    ExpVec e(4, 0);
    e[i] = 4;
    f.add_term(e, GaussRat(BigRat::parse("1/4")));
    ExpVec m(4, 0);
    m[0] = 2;
    m[i] = 2;
    f.add_term(m, GaussRat(BigRat::parse("-1/2")));
  }
  EXPECT_EQ(hessian_rank_at(f, ProjPoint({1, 0, 0, 0})), 3U);
}

TEST(Hessian, CuspHasZeroHessian) {
  EXPECT_EQ(hessian_rank_at(HomoPoly::monomial({0, 3}), ProjPoint({1, 0})), 0U);
}

TEST(Hessian, NonCriticalPointThrows) {
  EXPECT_THROW(hessian_rank_at(kummer(), ProjPoint({1, 0, 0, 0})), NotCriticalError);
}

TEST(Hessian, QuinticExampleRankFour) {
  // x0^3 (x1 x4 + x2 x3) - sum_{i>=1} x_i^5 / 5
  HomoPoly f(5, 5);
  f.add_term({3, 1, 0, 0, 1}, GaussRat(1));
  f.add_term({3, 0, 1, 1, 0}, GaussRat(1));
  for (std::size_t i = 1; i < 5; ++i) {
    ExpVec e(5, 0);
    e[i] = 5;
    f.add_term(e, GaussRat(BigRat::parse("-1/5")));
  }
  EXPECT_EQ(hessian_rank_at(f, ProjPoint({1, 0, 0, 0, 0})), 4U);
}
