#include "nodalhodge/linalg.hpp"
#include "nodalhodge/modular.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nodalhodge;

namespace {

GaussRat gi(long re, long im) { return GaussRat(BigRat(re), BigRat(im)); }

// Random matrix of a prescribed rank: product of random rows x cols factors.
ExactMat random_rank_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            std::size_t r, long spread, double zero_fraction = 0.0) {
  std::uniform_int_distribution<long> d(-spread, spread);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ExactMat a(rows, r);
  ExactMat b(r, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < r; ++k) a(i, k) = gi(d(rng), d(rng));
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (u(rng) >= zero_fraction) b(k, j) = GaussRat(BigRat(d(rng)), BigRat(mpz_class(d(rng)), mpz_class(3)));
    }
  }
  ExactMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return m;
}

// Straightforward Gauss-Jordan over Q(i) on a dense copy; used as an oracle.
Echelon naive_rref(const ExactMat& m) {
  std::vector<std::vector<GaussRat>> a(m.rows(), std::vector<GaussRat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  Echelon e;
  e.cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    const GaussRat inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const GaussRat f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!a[i][j].is_zero()) row.emplace_back(static_cast<std::uint32_t>(j), a[i][j]);
    }
    e.rows.push_back(row);
  }
  return e;
}

SparseRow dense_to_row(const std::vector<GaussRat>& v) {
  SparseRow row;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) row.emplace_back(static_cast<std::uint32_t>(j), v[j]);
  }
  return row;
}

GaussRat dot(const SparseRow& a, const SparseRow& b) {
  GaussRat s;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      s += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

}  // namespace

TEST(Modular, PrimesAreOneModFourWithSquareRoots) {
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& f = modular::prime_field(k);
    EXPECT_TRUE(modular::is_prime_u64(f.p));
    EXPECT_EQ(f.p % 4, 1U);
    EXPECT_EQ(f.mul(f.sqrt_minus_one, f.sqrt_minus_one), f.p - 1);
    if (k > 0) EXPECT_LT(f.p, modular::prime_field(k - 1).p);
  }
}

TEST(Modular, RationalReconstruction) {
  const mpz_class m = mpz_class(modular::prime_field(0).p) * mpz_class(modular::prime_field(1).p);
  const mpz_class num = -123456789;
  const mpz_class den = 987654321;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class x = (num * inv) % m;
  if (x < 0) x += m;
  mpz_class n;
  mpz_class d;
  ASSERT_TRUE(modular::rational_reconstruct(x, m, n, d));
  // 123456789/987654321 reduces by 9.
  EXPECT_EQ(n, -13717421);
  EXPECT_EQ(d, 109739369);
}

TEST(Rank, SmallCases) {
  ExactMat id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = GaussRat(1);
  EXPECT_EQ(rank(id), 3U);
  EXPECT_EQ(rank(ExactMat(4, 5)), 0U);
  const ExactMat m = ExactMat::from_rows({{1, gi(0, 1)}, {gi(0, 1), -1}}, 2);
  EXPECT_EQ(rank(m), 1U);
  EXPECT_EQ(rank_fraction_free(m), 1U);
}

TEST(Rank, AgreesWithFractionFreeOnRandomMatrices) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    const ExactMat m = random_rank_matrix(rng, rows, cols, r, 4, 0.3);
    const std::size_t expected = rank_fraction_free(m);
    EXPECT_LE(expected, r);
    EXPECT_EQ(rank(m), expected);
    EXPECT_EQ(rank(m.transpose()), expected);
  }
}

TEST(Echelon, AllMethodsProduceTheNaiveRref) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 2 + rng() % 14;
    const std::size_t cols = 2 + rng() % 14;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    const ExactMat m = random_rank_matrix(rng, rows, cols, r, 5, t % 2 == 0 ? 0.5 : 0.0);
    const Echelon oracle = naive_rref(m);
    const auto rows_sparse = m.sparse_rows();
    for (EchelonMethod method : {EchelonMethod::FractionFree, EchelonMethod::SparseExact,
                                 EchelonMethod::Multimodular, EchelonMethod::Auto}) {
      EXPECT_EQ(echelon(rows_sparse, cols, method), oracle) << "method " << static_cast<int>(method);
    }
  }
}

TEST(Echelon, MultimodularHandlesLargeEntries) {
  std::mt19937_64 rng(3);
  const ExactMat m = random_rank_matrix(rng, 30, 40, 22, 1000000);
  const auto rows = m.sparse_rows();
  const Echelon mm = echelon(rows, 40, EchelonMethod::Multimodular);
  EXPECT_EQ(mm, echelon(rows, 40, EchelonMethod::SparseExact));
  EXPECT_EQ(mm.rank(), 22U);
}

TEST(Kernel, SmallExamples) {
  const ExactMat m = ExactMat::from_rows({{1, 1}}, 2);
  const Subspace k = kernel_basis(m);
  ASSERT_EQ(k.dim(), 1U);
  EXPECT_EQ(k.basis_rows()[0], (SparseRow{{0, GaussRat(1)}, {1, GaussRat(-1)}}));
  const Subspace z = kernel_basis(ExactMat(2, 3));
  EXPECT_EQ(z, Subspace::full(3));
  ExactMat id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = GaussRat(1);
  EXPECT_EQ(kernel_basis(id).dim(), 0U);
}

TEST(Kernel, VectorsAreAnnihilated) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 25; ++t) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 10;
    const ExactMat m = random_rank_matrix(rng, rows, cols, rng() % (std::min(rows, cols) + 1), 3, 0.4);
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim(), cols - rank_fraction_free(m));
    for (const auto& v : k.basis_rows()) {
      for (std::size_t i = 0; i < rows; ++i) EXPECT_TRUE(dot(m.sparse_row(i), v).is_zero());
    }
    // The canonical form must agree with echelonizing the kernel vectors again.
    EXPECT_EQ(span(k.basis_rows(), cols), k);
  }
}

TEST(Subspace, CanonicalRegardlessOfSpanningSet) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng() % 8;
    const ExactMat gens = random_rank_matrix(rng, 1 + rng() % n, n, 1 + rng() % n, 3);
    const Subspace s = span(gens);
    // Random combinations of the generators, plus the generators reversed.
    std::vector<SparseRow> other;
    for (std::size_t k = 0; k < gens.rows() + 2; ++k) {
      std::vector<GaussRat> v(n);
      for (std::size_t i = 0; i < gens.rows(); ++i) {
        const GaussRat c = gi(d(rng), d(rng));
        for (std::size_t j = 0; j < n; ++j) v[j] += c * gens(i, j);
      }
      other.push_back(dense_to_row(v));
    }
    for (std::size_t i = gens.rows(); i-- > 0;) other.push_back(gens.sparse_row(i));
    EXPECT_EQ(span(other, n), s);
  }
}

TEST(Subspace, GrassmannIdentity) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const Subspace a = span(random_rank_matrix(rng, 1 + rng() % n, n, rng() % n + 1, 3, 0.3));
    const Subspace b = span(random_rank_matrix(rng, 1 + rng() % n, n, rng() % n + 1, 3, 0.3));
    const Subspace s = sum(a, b);
    const Subspace i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(contains(s, a));
    EXPECT_TRUE(contains(s, b));
    EXPECT_TRUE(contains(a, i));
    EXPECT_TRUE(contains(b, i));
    EXPECT_EQ(quotient_dim(s, a), s.dim() - a.dim());
  }
}

TEST(Subspace, SharedDirectionIntersection) {
  // span{e0, e1 + e2} and span{e1 + e2, e3} meet in span{e1 + e2}.
  const Subspace a = span({{{0, 1}}, {{1, 1}, {2, 1}}}, 4);
  const Subspace b = span({{{1, 1}, {2, 1}}, {{3, 1}}}, 4);
  const Subspace i = intersect(a, b);
  EXPECT_EQ(i, span({{{1, 1}, {2, 1}}}, 4));
  EXPECT_EQ(sum(a, b).dim(), 3U);
}

TEST(Subspace, QuotientRequiresContainment) {
  const Subspace a = span({{{0, 1}}}, 3);
  const Subspace b = span({{{1, 1}}}, 3);
  EXPECT_FALSE(contains(a, b));
  EXPECT_THROW(quotient_dim(a, b), ContainmentError);
  EXPECT_EQ(quotient_dim(Subspace::full(3), a), 2U);
  EXPECT_EQ(quotient_dim(a, Subspace(3)), 1U);
}

TEST(Subspace, ContainsVector) {
  const Subspace a = span({{{0, 1}, {2, gi(0, 1)}}}, 3);
  EXPECT_TRUE(a.contains_vector({{0, gi(2, 1)}, {2, gi(-1, 2)}}));
  EXPECT_FALSE(a.contains_vector({{0, 1}, {2, 1}}));
}

TEST(Subspace, AnnihilatorIsOrthogonal) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + rng() % 8;
    const Subspace a = span(random_rank_matrix(rng, n, n, rng() % n + 1, 3, 0.3));
    const auto ann = a.annihilator_rows();
    EXPECT_EQ(ann.size(), n - a.dim());
    for (const auto& w : ann) {
      for (const auto& v : a.basis_rows()) EXPECT_TRUE(dot(v, w).is_zero());
    }
    EXPECT_EQ(orthogonal_complement(ann, n), a);
  }
}

TEST(Subspace, DimensionMismatchThrows) {
  EXPECT_THROW(sum(Subspace(2), Subspace(3)), DimensionMismatch);
  EXPECT_THROW(span({{{5, 1}}}, 3), DimensionMismatch);
}
