#pragma once

// Graded pieces of the ideals attached to a nodal hypersurface: the Jacobian
// ideal J, the ideal I of the node set, its ordinary powers I^i, its symbolic
// powers I^(i) and the products I^(i) J. Every piece is a subspace of R_k in
// the monomial basis of polyring.

#include "nodalhodge/linalg.hpp"
#include "nodalhodge/polyring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nodalhodge {

/// Projectively distinct points, all with the same number of coordinates.
class NodeSet {
 public:
  explicit NodeSet(std::size_t n_vars = 0) : n_vars_(n_vars) {}
  NodeSet(std::size_t n_vars, std::vector<ProjPoint> points);

  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::size_t n_vars_;
  std::vector<ProjPoint> points_;
};

struct GradedPiece {
  std::size_t n_vars = 0;
  int degree = 0;
  std::string label;
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  std::size_t ambient_dim() const noexcept { return space.ambient_dim(); }
  std::vector<HomoPoly> basis_polys() const;
};

/// Rows (y, mu) with |mu| = i-1, columns the degree-k monomials x^nu; the
/// entry is (d^mu x^nu)(y). Empty for i <= 0.
std::vector<SparseRow> evaluation_rows(const NodeSet& nodes, int i, int k);

/// The degree-k monomial multiples of g's coefficient vector, one row per
/// basis vector of `piece`.
std::vector<SparseRow> multiply_piece(const HomoPoly& g, const GradedPiece& piece);

/// Memoizes the pieces for one node set and (optionally) one polynomial.
class IdealEngine {
 public:
  IdealEngine(NodeSet nodes, std::optional<HomoPoly> f = std::nullopt);

  const NodeSet& nodes() const noexcept { return nodes_; }
  std::size_t n_vars() const noexcept { return nodes_.n_vars(); }

  const GradedPiece& ring(int k);
  const GradedPiece& jacobian(int k);
  /// I^(i)_k; all of R_k for i <= 0 or an empty node set.
  const GradedPiece& symbolic(int i, int k);
  /// Generators of I in degrees <= k_max, each degree completing R_1 I_{j-1} inside I_j.
  std::vector<std::pair<int, HomoPoly>> generators(int k_max);
  /// (I^i)_k; all of R_k for i <= 0.
  const GradedPiece& ordinary(int i, int k);
  /// (I^(i) J)_k = sum_j f_j I^(i)_{k-d+1}; J_k for i <= 0.
  const GradedPiece& symbolic_times_jacobian(int i, int k);
  /// sum_j f_j (I^i)_{k-d+1}; J_k for i <= 0.
  const GradedPiece& ordinary_times_jacobian(int i, int k);

 private:
  enum class Kind { Ring, Jacobian, Symbolic, Ordinary, SymbolicJ, OrdinaryJ };
  using Key = std::tuple<Kind, int, int>;

  const GradedPiece* find(const Key& key) const;
  const GradedPiece& store(const Key& key, GradedPiece piece);
  const HomoPoly& poly() const;
  const std::vector<HomoPoly>& partials();
  const GradedPiece& times_jacobian(const GradedPiece& factor, int k, Kind kind, int i,
                                    const std::string& label);

  NodeSet nodes_;
  std::optional<HomoPoly> f_;
  std::vector<HomoPoly> partials_;
  std::map<Key, std::unique_ptr<GradedPiece>> cache_;
  std::vector<std::pair<int, HomoPoly>> generators_;
  int generators_done_ = -1;
};

GradedPiece ring_piece(std::size_t n_vars, int k);
GradedPiece jacobian_piece(const HomoPoly& f, int k);
GradedPiece symbolic_piece(const NodeSet& nodes, int i, int k);
std::vector<std::pair<int, HomoPoly>> minimal_generators_up_to(const NodeSet& nodes, int k_max);
GradedPiece ordinary_power_piece(const NodeSet& nodes, int i, int k);
GradedPiece ideal_times_jacobian_piece(const NodeSet& nodes, const HomoPoly& f, int i, int k);

}  // namespace nodalhodge
