#include "nodalhodge/catalog.hpp"
#include "nodalhodge/ideals.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nodalhodge;

namespace {

NodeSet coordinate_points(std::size_t n_vars) {
  std::vector<ProjPoint> pts;
  for (std::size_t j = 0; j < n_vars; ++j) {
    std::vector<GaussRat> c(n_vars);
    c[j] = GaussRat(1);
    pts.emplace_back(std::move(c));
  }
  return NodeSet(n_vars, std::move(pts));
}

// For coordinate points, x^nu lies in I^(i) iff |nu| - nu_j >= i for every j.
Subspace monomial_oracle(std::size_t n_vars, int i, int k) {
  const auto basis = monomial_basis(n_vars, k);
  std::vector<SparseRow> rows;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < n_vars; ++j) ok = ok && k - basis[c][j] >= i;
    if (ok) rows.push_back({{static_cast<std::uint32_t>(c), GaussRat(1)}});
  }
  return span(rows, basis.size());
}

GaussRat small_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  return GaussRat(BigRat(dist(rng)), BigRat(dist(rng) / 2));
}

}  // namespace

TEST(NodeSet, RejectsRepeatedAndMisshapenPoints) {
  ProjPoint a({GaussRat(1), GaussRat(2), GaussRat(0)});
  ProjPoint b({GaussRat(2), GaussRat(4), GaussRat(0)});
  EXPECT_THROW(NodeSet(3, {a, b}), std::invalid_argument);
  EXPECT_THROW(NodeSet(4, {a}), DimensionMismatch);
  EXPECT_EQ(NodeSet(3, {a}).size(), 1u);
}

TEST(Ideals, CoordinatePointsSymbolicSquareExceedsOrdinarySquare) {
  for (std::size_t n_vars = 3; n_vars <= 5; ++n_vars) {
    IdealEngine eng(coordinate_points(n_vars));
    const std::size_t c3 = n_vars * (n_vars - 1) * (n_vars - 2) / 6;
    EXPECT_EQ(eng.symbolic(2, 3).dim(), c3);
    EXPECT_EQ(eng.ordinary(2, 3).dim(), 0u);
    EXPECT_NE(eng.symbolic(2, 3).space, eng.ordinary(2, 3).space);
  }
}

TEST(Ideals, CoordinatePointsGenerators) {
  for (std::size_t n_vars = 3; n_vars <= 5; ++n_vars) {
    IdealEngine eng(coordinate_points(n_vars));
    const auto gens = eng.generators(4);
    std::set<ExpVec> seen;
    for (const auto& [deg, g] : gens) {
      EXPECT_EQ(deg, 2);
      ASSERT_EQ(g.terms().size(), 1u);
      const ExpVec& e = g.terms().begin()->first;
      int ones = 0;
      for (int v : e) ones += v == 1;
      EXPECT_EQ(ones, 2);
      seen.insert(e);
    }
    EXPECT_EQ(seen.size(), n_vars * (n_vars - 1) / 2);
  }
}

TEST(Ideals, SinglePointGeneratorsAreLinear) {
  NodeSet one(4, {ProjPoint({GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0)})});
  const auto gens = minimal_generators_up_to(one, 4);
  ASSERT_EQ(gens.size(), 3u);
  std::set<ExpVec> seen;
  for (const auto& [deg, g] : gens) {
    EXPECT_EQ(deg, 1);
    ASSERT_EQ(g.terms().size(), 1u);
    seen.insert(g.terms().begin()->first);
  }
  EXPECT_EQ(seen, (std::set<ExpVec>{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST(Ideals, SymbolicPowersMatchMonomialCriterion) {
  for (std::size_t n_vars = 3; n_vars <= 4; ++n_vars) {
    IdealEngine eng(coordinate_points(n_vars));
    for (int i = 0; i <= 3; ++i) {
      for (int k = 0; k <= 6; ++k) {
        EXPECT_EQ(eng.symbolic(i, k).space, monomial_oracle(n_vars, i, k)) << "i=" << i << " k=" << k;
      }
    }
  }
}

TEST(Ideals, SymbolicDimensionMatchesKernelOfEvaluationMatrix) {
  const auto e = catalog("ex47i");
  const NodeSet& nodes = e.hypersurface.nodes();
  for (int i = 1; i <= 2; ++i) {
    for (int k = 2; k <= 6; ++k) {
      const auto rows = evaluation_rows(nodes, i, k);
      const std::size_t N = monomial_count(4, k);
      const Subspace ker = kernel_basis(ExactMat::from_sparse(rows, N));
      EXPECT_EQ(symbolic_piece(nodes, i, k).space, ker);
      EXPECT_EQ(symbolic_piece(nodes, i, k).dim(), N - rank(rows, N));
    }
  }
}

// Ordinary and symbolic powers agree in degrees k >= 2i for linearly independent nodes.
TEST(Ideals, IndependentNodesPowersAgreeInHighDegree) {
  std::mt19937_64 rng(20241);
  int configs = 0;
  while (configs < 60) {
    std::uniform_int_distribution<int> n_dist(1, 4);
    const std::size_t n_vars = static_cast<std::size_t>(n_dist(rng)) + 1;
    std::uniform_int_distribution<std::size_t> s_dist(1, n_vars);
    const std::size_t s = s_dist(rng);
    std::vector<std::vector<GaussRat>> coords(s, std::vector<GaussRat>(n_vars));
    std::vector<SparseRow> rows;
    for (auto& c : coords) {
      for (auto& x : c) x = small_gauss(rng);
      SparseRow r;
      for (std::size_t j = 0; j < n_vars; ++j) {
        if (!c[j].is_zero()) r.emplace_back(static_cast<std::uint32_t>(j), c[j]);
      }
      rows.push_back(std::move(r));
    }
    if (rank(rows, n_vars) != s) continue;
    std::vector<ProjPoint> pts;
    for (auto& c : coords) pts.emplace_back(std::move(c));
    IdealEngine eng(NodeSet(n_vars, std::move(pts)));
    std::uniform_int_distribution<int> i_dist(1, 3);
    const int i = i_dist(rng);
    for (int k = 2 * i; k <= 2 * i + 1; ++k) {
      if (n_vars == 5 && k > 6) continue;
      const auto& ord = eng.ordinary(i, k);
      const auto& sym = eng.symbolic(i, k);
      EXPECT_TRUE(contains(sym.space, ord.space));
      EXPECT_EQ(ord.space, sym.space) << "n_vars=" << n_vars << " s=" << s << " i=" << i << " k=" << k;
    }
    ++configs;
  }
}

TEST(Ideals, ContainmentChain) {
  const auto e = catalog("ex47i");
  IdealEngine& eng = e.hypersurface.engine();
  for (int k = 3; k <= 8; ++k) {
    EXPECT_TRUE(contains(eng.symbolic(1, k).space, eng.jacobian(k).space));
    for (int i = 1; i <= 3; ++i) {
      EXPECT_TRUE(contains(eng.symbolic(i, k).space, eng.ordinary(i, k).space));
      EXPECT_TRUE(contains(eng.symbolic(i, k).space, eng.symbolic(i + 1, k).space));
      EXPECT_TRUE(contains(eng.symbolic(i, k).space, eng.symbolic_times_jacobian(i - 1, k).space));
    }
  }
}

TEST(Ideals, PolynomialLiesInItsJacobianIdeal) {
  for (const char* name : {"kummer", "ex38ii", "thm1-d4-n3"}) {
    const auto e = catalog(name);
    const auto& h = e.hypersurface;
    EXPECT_TRUE(h.engine().jacobian(h.d()).space.contains_vector(h.f().to_row())) << name;
    EXPECT_EQ(h.engine().jacobian(h.d() - 1).dim(), static_cast<std::size_t>(h.n() + 1)) << name;
  }
}

TEST(Ideals, EngineMatchesFreeFunctions) {
  const auto e = catalog("ex38ii");
  const auto& h = e.hypersurface;
  IdealEngine& eng = h.engine();
  EXPECT_EQ(eng.ring(5).space, ring_piece(4, 5).space);
  EXPECT_EQ(eng.jacobian(5).space, jacobian_piece(h.f(), 5).space);
  EXPECT_EQ(eng.ordinary(2, 6).space, ordinary_power_piece(h.nodes(), 2, 6).space);
  EXPECT_EQ(eng.symbolic_times_jacobian(1, 6).space, ideal_times_jacobian_piece(h.nodes(), h.f(), 1, 6).space);
  EXPECT_EQ(eng.symbolic(2, 6).label, "I^(2)_6");
  EXPECT_EQ(eng.ordinary(2, 6).label, "(I^2)_6");
}

TEST(Ideals, KummerDegreeEightDims) {
  const auto e = catalog("kummer");
  IdealEngine& eng = e.hypersurface.engine();
  EXPECT_EQ(eng.symbolic(2, 8).dim(), 101u);
  EXPECT_EQ(eng.ordinary(2, 8).dim(), 101u);
  EXPECT_EQ(eng.symbolic_times_jacobian(1, 8).dim(), 100u);
  EXPECT_EQ(eng.symbolic(1, 5).dim(), 40u);
}

TEST(Ideals, BasisPolysVanishAtNodes) {
  const auto e = catalog("kummer");
  const auto& h = e.hypersurface;
  for (const auto& p : h.engine().symbolic(1, 4).basis_polys()) {
    for (const auto& y : h.nodes().points()) EXPECT_TRUE(evaluate(p, y).is_zero());
  }
}
