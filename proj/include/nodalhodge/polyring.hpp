#pragma once

// Homogeneous polynomials in a fixed number of variables over Q(i).
// Monomials are ordered graded-lexicographically with x_0 > x_1 > ... > x_n.

#include "nodalhodge/exactnum.hpp"
#include "nodalhodge/linalg.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodalhodge {

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCriticalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ExpVec = std::vector<int>;

int exp_degree(const ExpVec& e);

/// Strict weak order putting the grlex-larger monomial first.
struct GrlexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// All degree-k exponent vectors in n_vars variables, grlex-descending.
std::vector<ExpVec> monomial_basis(std::size_t n_vars, int k);
/// binom(k + n_vars - 1, n_vars - 1); zero for k < 0.
std::size_t monomial_count(std::size_t n_vars, int k);
/// Position of e in monomial_basis(e.size(), degree(e)).
std::size_t monomial_index(const ExpVec& e);

class HomoPoly {
 public:
  using Terms = std::map<ExpVec, GaussRat, GrlexDesc>;

  /// The zero polynomial of the given degree.
  HomoPoly(std::size_t n_vars, int degree);

  static HomoPoly monomial(const ExpVec& e, GaussRat coeff = GaussRat(1));
  /// Coefficients of repeated exponents are added; zero results are dropped.
  static HomoPoly from_terms(std::size_t n_vars, int degree,
                             const std::vector<std::pair<ExpVec, GaussRat>>& terms);
  /// Inverse of to_row.
  static HomoPoly from_row(std::size_t n_vars, int degree, const SparseRow& row);

  std::size_t n_vars() const noexcept { return n_vars_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussRat coeff(const ExpVec& e) const;

  void add_term(const ExpVec& e, const GaussRat& c);

  /// Coordinates in monomial_basis(n_vars, degree).
  SparseRow to_row() const;

  HomoPoly operator-() const;
  HomoPoly& operator+=(const HomoPoly& o);
  HomoPoly& operator-=(const HomoPoly& o);
  HomoPoly& operator*=(const GaussRat& c);

  friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
  friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }
  friend HomoPoly operator*(HomoPoly a, const GaussRat& c) { return a *= c; }
  friend HomoPoly operator*(const GaussRat& c, HomoPoly a) { return a *= c; }
  friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as `x0^2*x1 - 1/2i*x2^3`.
  std::string to_string() const;

 private:
  void check_exp(const ExpVec& e) const;

  std::size_t n_vars_;
  int degree_;
  Terms terms_;
};

HomoPoly mul(const HomoPoly& p, const HomoPoly& q);
HomoPoly operator*(const HomoPoly& p, const HomoPoly& q);
HomoPoly pow(const HomoPoly& p, int e);

/// Degree drops by one; the derivative of a constant is the zero polynomial of degree 0.
HomoPoly partial(const HomoPoly& p, std::size_t j);
HomoPoly iterated_partial(const HomoPoly& p, const ExpVec& mu);

/// A point of projective space, scaled so that its first nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<GaussRat> coords);

  const std::vector<GaussRat>& coords() const noexcept { return coords_; }
  std::size_t pivot() const noexcept { return pivot_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const GaussRat& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  std::string to_string() const;

 private:
  std::vector<GaussRat> coords_;
  std::size_t pivot_ = 0;
};

GaussRat evaluate(const HomoPoly& p, const std::vector<GaussRat>& y);
GaussRat evaluate(const HomoPoly& p, const ProjPoint& y);

/// Rank of the Hessian of f dehomogenized at y's pivot coordinate, evaluated
/// at y. Throws NotCriticalError unless every first partial vanishes at y.
std::size_t hessian_rank_at(const HomoPoly& f, const ProjPoint& y);

}  // namespace nodalhodge
