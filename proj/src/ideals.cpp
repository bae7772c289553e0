#include "nodalhodge/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodalhodge {

NodeSet::NodeSet(std::size_t n_vars, std::vector<ProjPoint> points)
    : n_vars_(n_vars), points_(std::move(points)) {
  for (std::size_t a = 0; a < points_.size(); ++a) {
    if (points_[a].size() != n_vars_) throw DimensionMismatch("node has the wrong number of coordinates");
    for (std::size_t b = 0; b < a; ++b) {
      // Normalized representatives are unique, so equality is projective equality.
      if (points_[a] == points_[b]) {
        throw std::invalid_argument("node " + points_[a].to_string() + " is listed twice");
      }
    }
  }
}

std::vector<HomoPoly> GradedPiece::basis_polys() const {
  std::vector<HomoPoly> out;
  out.reserve(dim());
  for (const auto& row : space.basis_rows()) out.push_back(HomoPoly::from_row(n_vars, degree, row));
  return out;
}

namespace {

std::string piece_label(const std::string& base, int k) { return base + "_" + std::to_string(k); }

GradedPiece make_piece(std::size_t n_vars, int k, std::string label, Subspace space) {
  GradedPiece p;
  p.n_vars = n_vars;
  p.degree = k;
  p.label = std::move(label);
  p.space = std::move(space);
  return p;
}

// falling factorial a (a-1) ... (a-b+1)
long falling(int a, int b) {
  long r = 1;
  for (int t = 0; t < b; ++t) r *= a - t;
  return r;
}

}  // namespace

std::vector<SparseRow> evaluation_rows(const NodeSet& nodes, int i, int k) {
  std::vector<SparseRow> rows;
  if (i <= 0 || k < 0 || nodes.empty()) return rows;
  const std::size_t n_vars = nodes.n_vars();
  const std::vector<ExpVec> cols = monomial_basis(n_vars, k);
  const std::vector<ExpVec> mus = monomial_basis(n_vars, i - 1);
  for (const ProjPoint& y : nodes.points()) {
    // powers[j][e] = y_j^e
    std::vector<std::vector<GaussRat>> powers(n_vars);
    for (std::size_t j = 0; j < n_vars; ++j) {
      powers[j].resize(static_cast<std::size_t>(k) + 1);
      powers[j][0] = GaussRat(1);
      for (int e = 1; e <= k; ++e) powers[j][e] = powers[j][e - 1] * y[j];
    }
    for (const ExpVec& mu : mus) {
      SparseRow row;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const ExpVec& nu = cols[c];
        long scale = 1;
        GaussRat v(1);
        bool zero = false;
        for (std::size_t j = 0; j < n_vars && !zero; ++j) {
          if (nu[j] < mu[j]) {
            zero = true;
            break;
          }
          scale *= falling(nu[j], mu[j]);
          const GaussRat& p = powers[j][nu[j] - mu[j]];
          if (p.is_zero()) {
            zero = true;
          } else if (!p.is_one()) {
            v *= p;
          }
        }
        if (zero) continue;
        if (scale != 1) v *= GaussRat(scale);
        row.emplace_back(static_cast<std::uint32_t>(c), std::move(v));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SparseRow> multiply_piece(const HomoPoly& g, const GradedPiece& piece) {
  std::vector<SparseRow> out;
  if (g.is_zero() || piece.dim() == 0) return out;
  if (g.n_vars() != piece.n_vars) throw DimensionMismatch("multiplying pieces of different rings");
  const std::size_t n_vars = g.n_vars();
  const int target = g.degree() + piece.degree;
  const std::vector<ExpVec> src = monomial_basis(n_vars, piece.degree);
  std::vector<std::pair<ExpVec, GaussRat>> terms(g.terms().begin(), g.terms().end());
  // index[t * src.size() + s] = position of x^{e_t} x^{nu_s} in R_target
  std::vector<std::uint32_t> index(terms.size() * src.size());
  ExpVec sum(n_vars);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    for (std::size_t s = 0; s < src.size(); ++s) {
      for (std::size_t j = 0; j < n_vars; ++j) sum[j] = terms[t].first[j] + src[s][j];
      index[t * src.size() + s] = static_cast<std::uint32_t>(monomial_index(sum));
    }
  }
  std::vector<GaussRat> acc(monomial_count(n_vars, target));
  std::vector<char> mark(acc.size(), 0);
  std::vector<std::uint32_t> touched;
  for (const SparseRow& b : piece.space.basis_rows()) {
    for (const auto& [s, c] : b) {
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::uint32_t pos = index[t * src.size() + s];
        if (mark[pos] == 0) {
          mark[pos] = 1;
          touched.push_back(pos);
        }
        acc[pos] += terms[t].second * c;
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseRow row;
    for (std::uint32_t pos : touched) {
      if (!acc[pos].is_zero()) row.emplace_back(pos, std::move(acc[pos]));
      acc[pos] = GaussRat();
      mark[pos] = 0;
    }
    touched.clear();
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

// ------------------------------------------------------------ IdealEngine

IdealEngine::IdealEngine(NodeSet nodes, std::optional<HomoPoly> f)
    : nodes_(std::move(nodes)), f_(std::move(f)) {
  if (f_ && f_->n_vars() != nodes_.n_vars()) {
    throw DimensionMismatch("polynomial and nodes live in different projective spaces");
  }
  if (nodes_.n_vars() == 0) throw std::invalid_argument("ideal engine needs at least one variable");
}

const GradedPiece* IdealEngine::find(const Key& key) const {
  auto it = cache_.find(key);
  return it == cache_.end() ? nullptr : it->second.get();
}

const GradedPiece& IdealEngine::store(const Key& key, GradedPiece piece) {
  auto& slot = cache_[key];
  slot = std::make_unique<GradedPiece>(std::move(piece));
  return *slot;
}

const HomoPoly& IdealEngine::poly() const {
  if (!f_) throw std::logic_error("this ideal engine has no hypersurface polynomial");
  return *f_;
}

const std::vector<HomoPoly>& IdealEngine::partials() {
  if (partials_.empty()) {
    const HomoPoly& f = poly();
    for (std::size_t j = 0; j < f.n_vars(); ++j) partials_.push_back(partial(f, j));
  }
  return partials_;
}

const GradedPiece& IdealEngine::ring(int k) {
  const Key key{Kind::Ring, 0, k};
  if (const GradedPiece* p = find(key)) return *p;
  return store(key, make_piece(n_vars(), k, piece_label("R", k),
                               Subspace::full(monomial_count(n_vars(), k))));
}

const GradedPiece& IdealEngine::times_jacobian(const GradedPiece& factor, int k, Kind kind, int i,
                                               const std::string& label) {
  std::vector<SparseRow> rows;
  for (const HomoPoly& fj : partials()) {
    std::vector<SparseRow> part = multiply_piece(fj, factor);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return store(Key{kind, i, k}, make_piece(n_vars(), k, label, span(rows, monomial_count(n_vars(), k))));
}

const GradedPiece& IdealEngine::jacobian(int k) {
  const Key key{Kind::Jacobian, 0, k};
  if (const GradedPiece* p = find(key)) return *p;
  const int d = poly().degree();
  if (k - d + 1 < 0) {
    return store(key, make_piece(n_vars(), k, piece_label("J", k), Subspace(monomial_count(n_vars(), k))));
  }
  return times_jacobian(ring(k - d + 1), k, Kind::Jacobian, 0, piece_label("J", k));
}

const GradedPiece& IdealEngine::symbolic(int i, int k) {
  if (i <= 0 || nodes_.empty()) return ring(k);
  const Key key{Kind::Symbolic, i, k};
  if (const GradedPiece* p = find(key)) return *p;
  const std::size_t n = monomial_count(n_vars(), k);
  // Below degree i the partials of order i-1 give no conditions, but a form of
  // degree k < i vanishing to order i at a point is zero.
  Subspace space = k < i ? Subspace(n) : orthogonal_complement(evaluation_rows(nodes_, i, k), n);
  return store(key, make_piece(n_vars(), k, piece_label("I^(" + std::to_string(i) + ")", k), std::move(space)));
}

std::vector<std::pair<int, HomoPoly>> IdealEngine::generators(int k_max) {
  for (int j = generators_done_ + 1; j <= k_max; ++j) {
    const GradedPiece& ij = symbolic(1, j);
    std::vector<std::uint32_t> lower_pivots;
    if (j > 0 && ij.dim() > 0) {
      const GradedPiece& prev = symbolic(1, j - 1);
      std::vector<SparseRow> rows;
      for (std::size_t t = 0; t < n_vars(); ++t) {
        ExpVec e(n_vars(), 0);
        e[t] = 1;
        std::vector<SparseRow> part = multiply_piece(HomoPoly::monomial(e), prev);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
      lower_pivots = span(rows, ij.ambient_dim()).pivots();
    }
    // Rows of I_j whose pivots are not pivots of R_1 I_{j-1} complete it to I_j.
    const auto& pivots = ij.space.pivots();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (std::binary_search(lower_pivots.begin(), lower_pivots.end(), pivots[r])) continue;
      generators_.emplace_back(j, HomoPoly::from_row(n_vars(), j, ij.space.basis_rows()[r]));
    }
    generators_done_ = j;
  }
  std::vector<std::pair<int, HomoPoly>> out;
  for (const auto& g : generators_) {
    if (g.first <= k_max) out.push_back(g);
  }
  return out;
}

const GradedPiece& IdealEngine::ordinary(int i, int k) {
  if (i <= 0) return ring(k);
  const Key key{Kind::Ordinary, i, k};
  if (const GradedPiece* p = find(key)) return *p;
  const std::string label = piece_label("(I^" + std::to_string(i) + ")", k);
  if (i == 1) return store(key, make_piece(n_vars(), k, label, symbolic(1, k).space));
  // I^i = I * I^{i-1}, so (I^i)_k = sum over generators g of g (I^{i-1})_{k - deg g}.
  std::vector<SparseRow> rows;
  for (const auto& [deg, g] : generators(k)) {
    std::vector<SparseRow> part = multiply_piece(g, ordinary(i - 1, k - deg));
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return store(key, make_piece(n_vars(), k, label, span(rows, monomial_count(n_vars(), k))));
}

const GradedPiece& IdealEngine::symbolic_times_jacobian(int i, int k) {
  if (i <= 0 || nodes_.empty()) return jacobian(k);
  const Key key{Kind::SymbolicJ, i, k};
  if (const GradedPiece* p = find(key)) return *p;
  const std::string label = piece_label("(I^(" + std::to_string(i) + ")J)", k);
  const int d = poly().degree();
  if (k - d + 1 < 0) return store(key, make_piece(n_vars(), k, label, Subspace(monomial_count(n_vars(), k))));
  return times_jacobian(symbolic(i, k - d + 1), k, Kind::SymbolicJ, i, label);
}

const GradedPiece& IdealEngine::ordinary_times_jacobian(int i, int k) {
  if (i <= 0) return jacobian(k);
  const Key key{Kind::OrdinaryJ, i, k};
  if (const GradedPiece* p = find(key)) return *p;
  const std::string label = piece_label("(I^" + std::to_string(i) + "J)", k);
  const int d = poly().degree();
  if (k - d + 1 < 0) return store(key, make_piece(n_vars(), k, label, Subspace(monomial_count(n_vars(), k))));
  return times_jacobian(ordinary(i, k - d + 1), k, Kind::OrdinaryJ, i, label);
}

// ------------------------------------------------------------ free functions

GradedPiece ring_piece(std::size_t n_vars, int k) { return IdealEngine(NodeSet(n_vars)).ring(k); }

GradedPiece jacobian_piece(const HomoPoly& f, int k) {
  return IdealEngine(NodeSet(f.n_vars()), f).jacobian(k);
}

GradedPiece symbolic_piece(const NodeSet& nodes, int i, int k) { return IdealEngine(nodes).symbolic(i, k); }

std::vector<std::pair<int, HomoPoly>> minimal_generators_up_to(const NodeSet& nodes, int k_max) {
  return IdealEngine(nodes).generators(k_max);
}

GradedPiece ordinary_power_piece(const NodeSet& nodes, int i, int k) {
  return IdealEngine(nodes).ordinary(i, k);
}

GradedPiece ideal_times_jacobian_piece(const NodeSet& nodes, const HomoPoly& f, int i, int k) {
  return IdealEngine(nodes, f).symbolic_times_jacobian(i, k);
}

}  // namespace nodalhodge
