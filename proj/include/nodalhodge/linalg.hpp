#pragma once

// Exact linear algebra over Q(i): dense matrices, canonical subspaces and the
// subspace lattice operations (sum, intersection, containment, quotients).
//
// Subspaces of Q(i)^N are stored as their reduced row echelon basis, so two
// spanning sets of the same subspace give identical objects.

#include "nodalhodge/exactnum.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nodalhodge {

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, GaussRat>>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by quotient_dim when the denominator is not a subspace of the numerator.
class ContainmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ExactMat {
 public:
  ExactMat() = default;
  ExactMat(std::size_t rows, std::size_t cols);
  static ExactMat from_rows(const std::vector<std::vector<GaussRat>>& rows, std::size_t cols);
  static ExactMat from_sparse(const std::vector<SparseRow>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GaussRat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussRat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  SparseRow sparse_row(std::size_t r) const;
  std::vector<SparseRow> sparse_rows() const;
  ExactMat transpose() const;

  friend bool operator==(const ExactMat& a, const ExactMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRat> data_;
};

/// Reduced row echelon form: rows[j] has a 1 at pivots[j] and zeros in every
/// other pivot column. Pivots are strictly increasing.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::uint32_t> pivots;
  std::vector<SparseRow> rows;

  std::size_t rank() const noexcept { return pivots.size(); }
  friend bool operator==(const Echelon&, const Echelon&) = default;
};

enum class EchelonMethod {
  Auto,          ///< picks one of the exact routes below from the input shape
  FractionFree,  ///< Bareiss elimination over Z[i]
  SparseExact,   ///< Gauss-Jordan directly on sparse Q(i) rows
  Multimodular,  ///< prime images + reconstruction, then an exact membership proof
};

Echelon echelon(const std::vector<SparseRow>& rows, std::size_t cols,
                EchelonMethod method = EchelonMethod::Auto);

/// Rank via fraction-free Bareiss elimination over Z[i] (rows are scaled to
/// Gaussian integers first).
std::size_t rank_fraction_free(const ExactMat& m);
std::size_t rank(const ExactMat& m);
std::size_t rank(const std::vector<SparseRow>& rows, std::size_t cols);

class Subspace {
 public:
  /// The zero subspace of Q(i)^ambient.
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace full(std::size_t ambient);
  static Subspace from_echelon(Echelon e);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }
  const std::vector<SparseRow>& basis_rows() const noexcept { return rows_; }
  ExactMat basis() const;

  /// A spanning set of {w : sum_c v_c w_c = 0 for all v in this subspace}.
  std::vector<SparseRow> annihilator_rows() const;

  bool contains_vector(const SparseRow& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<std::uint32_t> pivots_;
  std::vector<SparseRow> rows_;
};

Subspace span(const std::vector<SparseRow>& rows, std::size_t ambient);
Subspace span(const ExactMat& rows);
/// {x : m x = 0}, in canonical form.
Subspace kernel_basis(const ExactMat& m);
/// {w : v.w = 0 for every v in span(rows)}, in canonical form.
Subspace orthogonal_complement(const std::vector<SparseRow>& rows, std::size_t ambient);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// True when b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);
/// dim(a) - dim(b); throws ContainmentError unless b is contained in a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

}  // namespace nodalhodge
