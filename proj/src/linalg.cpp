#include "nodalhodge/linalg.hpp"

#include "nodalhodge/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace nodalhodge {

using modular::FixedMul;
using modular::PrimeField;
using modular::u64;

// ---------------------------------------------------------------- ExactMat

ExactMat::ExactMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMat ExactMat::from_rows(const std::vector<std::vector<GaussRat>>& rows, std::size_t cols) {
  ExactMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rows in matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMat ExactMat::from_sparse(const std::vector<SparseRow>& rows, std::size_t cols) {
  ExactMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) {
      if (c >= cols) throw DimensionMismatch("sparse entry outside the matrix");
      m(r, c) = v;
    }
  }
  return m;
}

SparseRow ExactMat::sparse_row(std::size_t r) const {
  SparseRow row;
  for (std::size_t c = 0; c < cols_; ++c) {
    const GaussRat& v = (*this)(r, c);
    if (!v.is_zero()) row.emplace_back(static_cast<std::uint32_t>(c), v);
  }
  return row;
}

std::vector<SparseRow> ExactMat::sparse_rows() const {
  std::vector<SparseRow> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(sparse_row(r));
  return out;
}

ExactMat ExactMat::transpose() const {
  ExactMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

void check_row(const SparseRow& row, std::size_t cols) {
  std::uint32_t prev = 0;
  bool first = true;
  for (const auto& [c, v] : row) {
    if (c >= cols) throw DimensionMismatch("row entry outside the ambient space");
    if (!first && c <= prev) throw std::invalid_argument("sparse row is not sorted");
    prev = c;
    first = false;
  }
}

// ---------------------------------------------------------- integer rows

// A row scaled to Gaussian integers with content removed.
struct IntRow {
  std::vector<std::uint32_t> cols;
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
};

IntRow to_int_row(const SparseRow& row) {
  IntRow out;
  mpz_class lcm = 1;
  for (const auto& [c, v] : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.re().value().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.im().value().get_den_mpz_t());
  }
  mpz_class content = 0;
  out.cols.reserve(row.size());
  out.re.reserve(row.size());
  out.im.reserve(row.size());
  for (const auto& [c, v] : row) {
    out.cols.push_back(c);
    mpz_class a = v.re().value().get_num() * (lcm / v.re().value().get_den());
    mpz_class b = v.im().value().get_num() * (lcm / v.im().value().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), b.get_mpz_t());
    out.re.push_back(std::move(a));
    out.im.push_back(std::move(b));
  }
  if (content > 1) {
    for (auto& x : out.re) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    for (auto& x : out.im) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

std::size_t max_bits(const std::vector<IntRow>& rows) {
  std::size_t bits = 0;
  for (const auto& r : rows) {
    for (const auto& x : r.re) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    for (const auto& x : r.im) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// ----------------------------------------------------- fraction-free route

struct GInt {
  mpz_class re;
  mpz_class im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

GInt gmul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Exact quotient a/b in Z[i].
GInt gdivexact(const GInt& a, const GInt& b) {
  if (sgn(b.im) == 0) {
    GInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  const mpz_class n = b.norm();
  GInt num = gmul(a, GInt{b.re, -b.im});
  mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return num;
}

// Forward Bareiss elimination; returns pivot columns and leaves the echelon
// rows in the first rank() rows of `a`.
std::vector<std::uint32_t> bareiss_forward(std::vector<std::vector<GInt>>& a, std::size_t cols) {
  std::vector<std::uint32_t> pivots;
  GInt prev{1, 0};
  std::size_t r = 0;
  const std::size_t nrows = a.size();
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t best = nrows;
    mpz_class best_norm;
    for (std::size_t i = r; i < nrows; ++i) {
      if (a[i][c].is_zero()) continue;
      mpz_class nv = a[i][c].norm();
      if (best == nrows || nv < best_norm) {
        best = i;
        best_norm = nv;
      }
    }
    if (best == nrows) continue;
    std::swap(a[r], a[best]);
    const GInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const GInt lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        GInt t = gmul(piv, a[i][j]);
        if (!lead.is_zero() && !a[r][j].is_zero()) {
          GInt u = gmul(lead, a[r][j]);
          t.re -= u.re;
          t.im -= u.im;
        }
        a[i][j] = gdivexact(t, prev);
      }
      a[i][c] = GInt{0, 0};
    }
    prev = piv;
    pivots.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }
  return pivots;
}

std::vector<std::vector<GInt>> to_gint_dense(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<std::vector<GInt>> a(rows.size(), std::vector<GInt>(cols, GInt{0, 0}));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    IntRow ir = to_int_row(rows[r]);
    for (std::size_t k = 0; k < ir.cols.size(); ++k) {
      a[r][ir.cols[k]] = GInt{ir.re[k], ir.im[k]};
    }
  }
  return a;
}

Echelon echelon_fraction_free(const std::vector<SparseRow>& rows, std::size_t cols) {
  auto a = to_gint_dense(rows, cols);
  const std::vector<std::uint32_t> pivots = bareiss_forward(a, cols);
  const std::size_t r = pivots.size();

  // Back substitution over Q(i) on the (already triangular) echelon rows.
  std::vector<std::vector<GaussRat>> q(r, std::vector<GaussRat>(cols));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t c = pivots[j]; c < cols; ++c) {
      const GInt& g = a[j][c];
      if (!g.is_zero()) q[j][c] = GaussRat(BigRat(g.re, 1), BigRat(g.im, 1));
    }
    const GaussRat inv = q[j][pivots[j]].inverse();
    for (std::size_t c = pivots[j]; c < cols; ++c) {
      if (!q[j][c].is_zero()) q[j][c] *= inv;
    }
  }
  for (std::size_t j = r; j-- > 0;) {
    for (std::size_t k = 0; k < j; ++k) {
      const GaussRat f = q[k][pivots[j]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[j]; c < cols; ++c) {
        if (!q[j][c].is_zero()) q[k][c] -= f * q[j][c];
      }
    }
  }
  Echelon e;
  e.cols = cols;
  e.pivots = pivots;
  e.rows.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t c = pivots[j]; c < cols; ++c) {
      if (!q[j][c].is_zero()) e.rows[j].emplace_back(static_cast<std::uint32_t>(c), q[j][c]);
    }
  }
  return e;
}

// ----------------------------------------------------- sparse exact route

// Each new row is reduced against all current pivots; pivots created later
// are cleared by one back-substitution pass at the end.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols) : cols_(cols), row_of_col_(cols, -1), acc_(cols), mark_(cols, 0) {}

  void insert(const SparseRow& v) {
    for (const auto& [c, x] : v) {
      touch(c);
      acc_[c] = x;
    }
    SparseRow w;
    while (!heap_.empty()) {
      const std::uint32_t c = heap_.top();
      heap_.pop();
      mark_[c] = 0;
      if (acc_[c].is_zero()) continue;
      const int pr = row_of_col_[c];
      if (pr < 0) {
        w.emplace_back(c, std::move(acc_[c]));
        acc_[c] = GaussRat();
        continue;
      }
      const GaussRat coef = std::move(acc_[c]);
      acc_[c] = GaussRat();
      const SparseRow& prow = rows_[static_cast<std::size_t>(pr)];
      for (std::size_t t = 1; t < prow.size(); ++t) {
        touch(prow[t].first);
        acc_[prow[t].first] -= coef * prow[t].second;
      }
    }
    if (w.empty()) return;
    if (!w.front().second.is_one()) {
      const GaussRat inv = w.front().second.inverse();
      for (auto& [cc, x] : w) x *= inv;
    }
    row_of_col_[w.front().first] = static_cast<int>(rows_.size());
    pivots_.push_back(w.front().first);
    rows_.push_back(std::move(w));
  }

  std::size_t rank() const { return rows_.size(); }

  // Brings the stored rows to reduced form in place.
  void back_substitute() {
    const std::vector<std::size_t> order = by_pivot_desc();
    // Rows with larger pivots are final by now and carry only free columns.
    for (std::size_t idx : order) {
      SparseRow& r = rows_[idx];
      bool needs = false;
      for (std::size_t t = 1; t < r.size() && !needs; ++t) needs = row_of_col_[r[t].first] >= 0;
      if (!needs) continue;
      for (const auto& [c, x] : r) {
        touch(c);
        acc_[c] = x;
      }
      for (std::size_t t = 1; t < r.size(); ++t) {
        const int pr = row_of_col_[r[t].first];
        if (pr < 0) continue;
        const GaussRat coef = r[t].second;
        for (const auto& [cc, y] : rows_[static_cast<std::size_t>(pr)]) {
          touch(cc);
          acc_[cc] -= coef * y;
        }
      }
      SparseRow w;
      while (!heap_.empty()) {
        const std::uint32_t cc = heap_.top();
        heap_.pop();
        mark_[cc] = 0;
        if (!acc_[cc].is_zero()) w.emplace_back(cc, std::move(acc_[cc]));
        acc_[cc] = GaussRat();
      }
      r = std::move(w);
    }
  }

  Echelon finish() {
    back_substitute();
    const std::vector<std::size_t> order = by_pivot_desc();
    Echelon e;
    e.cols = cols_;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      e.pivots.push_back(pivots_[*it]);
      e.rows.push_back(std::move(rows_[*it]));
    }
    return e;
  }

 private:
  std::vector<std::size_t> by_pivot_desc() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    return order;
  }

  void touch(std::uint32_t c) {
    if (mark_[c] == 0) {
      mark_[c] = 1;
      heap_.push(c);
    }
  }

  std::size_t cols_;
  std::vector<int> row_of_col_;
  std::vector<SparseRow> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<GaussRat> acc_;
  std::vector<char> mark_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

Echelon echelon_sparse(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<const SparseRow*> order;
  order.reserve(rows.size());
  for (const auto& r : rows) order.push_back(&r);
  // Leading-column order keeps fill low on large sparse inputs; on small dense
  // ones it tends to produce larger intermediate coefficients.
  if (rows.size() * cols > 4'000'000) {
    std::stable_sort(order.begin(), order.end(), [](const SparseRow* a, const SparseRow* b) {
      if (a->empty() || b->empty()) return !a->empty() && b->empty();
      if (a->front().first != b->front().first) return a->front().first < b->front().first;
      return a->size() < b->size();
    });
  }
  SparseEliminator el(cols);
  for (const SparseRow* r : order) {
    if (el.rank() == cols) break;
    el.insert(*r);
  }
  return el.finish();
}

// ----------------------------------------------------- multimodular route

struct ModEchelon {
  std::vector<std::uint32_t> pivots;
  std::vector<std::size_t> sources;  // input row that supplied each pivot
  std::vector<u64> reduced;          // pivots.size() x cols, row major
};

ModEchelon rref_mod(const std::vector<IntRow>& rows, const std::vector<std::size_t>& subset,
                    std::size_t cols, const PrimeField& f, int sign) {
  const std::size_t m = subset.size();
  const u64 p = f.p;
  std::vector<u64> a(m * cols, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const IntRow& r = rows[subset[i]];
    u64* dst = a.data() + i * cols;
    for (std::size_t k = 0; k < r.cols.size(); ++k) {
      dst[r.cols[k]] = f.reduce_gauss(r.re[k], r.im[k], sign);
    }
  }
  std::vector<std::size_t> source(subset);
  ModEchelon out;
  std::vector<std::uint32_t> nz;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    if (piv != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
      std::swap(source[piv], source[rank]);
    }
    u64* prow = a.data() + rank * cols;
    const FixedMul scale(f.inv(prow[c]), p);
    nz.clear();
    prow[c] = 1;
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (prow[j] != 0) {
        prow[j] = scale(prow[j], p);
        nz.push_back(static_cast<std::uint32_t>(j));
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank) continue;
      u64* row = a.data() + i * cols;
      if (row[c] == 0) continue;
      const FixedMul fm(f.neg(row[c]), p);
      row[c] = 0;
      for (std::uint32_t j : nz) row[j] = f.add(row[j], fm(prow[j], p));
    }
    out.pivots.push_back(static_cast<std::uint32_t>(c));
    out.sources.push_back(source[rank]);
    ++rank;
  }
  a.resize(rank * cols);
  out.reduced = std::move(a);
  return out;
}


// Better pivot profile: larger rank, then lexicographically smaller pivots.
bool better_profile(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::size_t bit_length(const mpz_class& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Proves (or refutes) that every row lies in the row space of `e`. Works on
// the residual z = x - sum_j x[p_j] e_j restricted to free columns; a bound on
// the size of the scaled residual decides how many primes make the check exact.
bool rows_in_rowspace(const std::vector<IntRow>& rows, const Echelon& e, std::size_t prime_offset) {
  const std::size_t r = e.rank();
  const std::size_t cols = e.cols;
  if (rows.empty()) return true;
  std::vector<int> pivot_index(cols, -1);
  for (std::size_t j = 0; j < r; ++j) pivot_index[e.pivots[j]] = static_cast<int>(j);
  std::vector<int> free_index(cols, -1);
  std::size_t nfree = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_index[c] < 0) free_index[c] = static_cast<int>(nfree++);
  }
  if (nfree == 0) return true;

  // Echelon rows as Gaussian integers over a per-row denominator.
  std::vector<mpz_class> den(r, 1);
  std::vector<std::vector<std::pair<std::uint32_t, std::pair<mpz_class, mpz_class>>>> num(r);
  mpz_class all_den = 1;
  std::size_t rbits = 0;
  for (std::size_t j = 0; j < r; ++j) {
    for (const auto& [c, v] : e.rows[j]) {
      mpz_lcm(den[j].get_mpz_t(), den[j].get_mpz_t(), v.re().value().get_den_mpz_t());
      mpz_lcm(den[j].get_mpz_t(), den[j].get_mpz_t(), v.im().value().get_den_mpz_t());
    }
    for (const auto& [c, v] : e.rows[j]) {
      if (free_index[c] < 0) continue;
      mpz_class a = v.re().value().get_num() * (den[j] / v.re().value().get_den());
      mpz_class b = v.im().value().get_num() * (den[j] / v.im().value().get_den());
      rbits = std::max({rbits, bit_length(a), bit_length(b)});
      num[j].push_back({c, {std::move(a), std::move(b)}});
    }
    mpz_lcm(all_den.get_mpz_t(), all_den.get_mpz_t(), den[j].get_mpz_t());
  }
  const std::size_t mbits = max_bits(rows);
  mpz_class terms = r + 1;
  const std::size_t bound_bits =
      bit_length(all_den) + mbits + std::max<std::size_t>(rbits, 1) + bit_length(terms) + 3;

  std::size_t covered_bits = 0;
  std::vector<u64> rm(r * nfree);
  std::vector<u64> z(nfree);
  for (std::size_t t = prime_offset; covered_bits <= bound_bits; ++t) {
    const PrimeField& f = modular::prime_field(t);
    bool usable = true;
    for (std::size_t j = 0; j < r && usable; ++j) usable = f.reduce(den[j]) != 0;
    if (!usable) continue;
    for (int sign : {1, -1}) {
      std::fill(rm.begin(), rm.end(), 0);
      for (std::size_t j = 0; j < r; ++j) {
        const u64 dinv = f.inv(f.reduce(den[j]));
        for (const auto& [c, ab] : num[j]) {
          rm[j * nfree + static_cast<std::size_t>(free_index[c])] =
              f.mul(f.reduce_gauss(ab.first, ab.second, sign), dinv);
        }
      }
      for (const IntRow& row : rows) {
        std::fill(z.begin(), z.end(), 0);
        for (std::size_t k = 0; k < row.cols.size(); ++k) {
          const std::uint32_t c = row.cols[k];
          const u64 x = f.reduce_gauss(row.re[k], row.im[k], sign);
          if (x == 0) continue;
          if (free_index[c] >= 0) {
            const std::size_t fi = static_cast<std::size_t>(free_index[c]);
            z[fi] = f.add(z[fi], x);
          } else {
            const std::size_t j = static_cast<std::size_t>(pivot_index[c]);
            const FixedMul fm(f.neg(x), f.p);
            const u64* src = rm.data() + j * nfree;
            for (std::size_t fi = 0; fi < nfree; ++fi) {
              if (src[fi] != 0) z[fi] = f.add(z[fi], fm(src[fi], f.p));
            }
          }
        }
        for (u64 v : z) {
          if (v != 0) return false;
        }
      }
    }
    covered_bits += 61;
  }
  return true;
}

Echelon reconstruct(const ModEchelon& prof, const std::vector<std::uint32_t>& free_cols,
                    const std::vector<mpz_class>& acc_re, const std::vector<mpz_class>& acc_im,
                    const mpz_class& modulus, std::size_t cols, bool& ok) {
  ok = false;
  const std::size_t r = prof.pivots.size();
  const std::size_t nfree = free_cols.size();
  mpz_class half = modulus / 2;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Echelon e;
  e.cols = cols;
  e.pivots = prof.pivots;
  e.rows.resize(r);
  mpz_class y;
  mpz_class n;
  mpz_class d;
  for (std::size_t j = 0; j < r; ++j) {
    mpz_class common = 1;
    // Entries of one echelon row tend to share a denominator, so try the one
    // found so far before a full reconstruction.
    auto recover = [&](const mpz_class& x, BigRat& out) {
      if (sgn(x) == 0) {
        out = BigRat(0);
        return true;
      }
      y = (x * common) % modulus;
      if (y > half) y -= modulus;
      if (abs(y) <= bound) {
        out = BigRat(y, common);
        return true;
      }
      if (!modular::rational_reconstruct(x, modulus, n, d)) return false;
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
      out = BigRat(n, d);
      return true;
    };
    SparseRow& row = e.rows[j];
    row.emplace_back(prof.pivots[j], GaussRat(1));
    std::vector<std::pair<std::uint32_t, GaussRat>> tail;
    for (std::size_t k = 0; k < nfree; ++k) {
      if (free_cols[k] < prof.pivots[j]) continue;
      BigRat re;
      BigRat im;
      if (!recover(acc_re[j * nfree + k], re)) return e;
      if (!recover(acc_im[j * nfree + k], im)) return e;
      GaussRat v(std::move(re), std::move(im));
      if (!v.is_zero()) row.emplace_back(free_cols[k], std::move(v));
    }
  }
  ok = true;
  return e;
}

Echelon echelon_multimodular(const std::vector<SparseRow>& input, std::size_t cols) {
  std::vector<IntRow> rows;
  rows.reserve(input.size());
  for (const auto& r : input) {
    if (!r.empty()) rows.push_back(to_int_row(r));
  }
  if (rows.empty()) {
    Echelon e;
    e.cols = cols;
    return e;
  }
  std::vector<std::size_t> all(rows.size());
  std::iota(all.begin(), all.end(), 0);

  ModEchelon best;
  bool have_best = false;
  std::vector<std::uint32_t> free_cols;
  std::vector<mpz_class> acc_re;
  std::vector<mpz_class> acc_im;
  mpz_class modulus = 1;
  std::size_t used = 0;
  std::size_t next_attempt = 1;
  bool refresh_full = true;
  std::size_t prime_index = 0;
  // Verification primes are drawn from a disjoint stretch of the sequence.
  constexpr std::size_t kVerifyOffset = 100000;

  while (true) {
    const PrimeField& f = modular::prime_field(prime_index++);
    const std::vector<std::size_t>& subset = (refresh_full || !have_best) ? all : best.sources;
    ModEchelon plus = rref_mod(rows, subset, cols, f, 1);
    ModEchelon minus = rref_mod(rows, subset, cols, f, -1);
    refresh_full = false;
    if (plus.pivots != minus.pivots) continue;
    if (have_best && plus.pivots != best.pivots) {
      if (!better_profile(plus.pivots, best.pivots)) continue;
      have_best = false;
    }
    const std::size_t r = plus.pivots.size();
    if (!have_best) {
      best = plus;
      have_best = true;
      free_cols.clear();
      std::size_t j = 0;
      for (std::uint32_t c = 0; c < cols; ++c) {
        if (j < r && best.pivots[j] == c) {
          ++j;
        } else {
          free_cols.push_back(c);
        }
      }
      acc_re.assign(r * free_cols.size(), mpz_class(0));
      acc_im.assign(r * free_cols.size(), mpz_class(0));
      modulus = 1;
      used = 0;
      next_attempt = 1;
    }
    // Combine the two embeddings into real and imaginary residues and lift by CRT.
    const std::size_t nfree = free_cols.size();
    const u64 inv2 = f.inv(2);
    const u64 inv2s = f.inv(f.mul(2, f.sqrt_minus_one));
    const u64 minv = f.inv(f.reduce(modulus));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < nfree; ++k) {
        const u64 xp = plus.reduced[j * cols + free_cols[k]];
        const u64 xm = minus.reduced[j * cols + free_cols[k]];
        const u64 re = f.mul(f.add(xp, xm), inv2);
        const u64 im = f.mul(f.sub(xp, xm), inv2s);
        for (auto [res, acc] : {std::pair{re, &acc_re[j * nfree + k]}, std::pair{im, &acc_im[j * nfree + k]}}) {
          const u64 old = f.reduce(*acc);
          const u64 t = f.mul(f.sub(res, old), minv);
          if (t != 0) mpz_addmul_ui(acc->get_mpz_t(), modulus.get_mpz_t(), t);
        }
      }
    }
    modulus *= mpz_class(std::to_string(f.p));
    ++used;
    if (used < next_attempt) continue;
    next_attempt = used + std::max<std::size_t>(1, used / 4);

    bool ok = false;
    Echelon cand = reconstruct(best, free_cols, acc_re, acc_im, modulus, cols, ok);
    if (!ok) continue;
    if (rows_in_rowspace(rows, cand, kVerifyOffset)) return cand;
    // Either more precision is needed or the sampled rows were unlucky;
    // the next image is taken from every row again.
    refresh_full = true;
  }
}

std::size_t nonzeros(const std::vector<SparseRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

EchelonMethod choose_method(const std::vector<SparseRow>& rows, std::size_t cols) {
  const std::size_t cells = rows.size() * cols;
  const std::size_t nnz = nonzeros(rows);
  if (cells <= 1024) return EchelonMethod::FractionFree;
  if (nnz <= 20000 || nnz * 20 < cells || cells > 40'000'000) return EchelonMethod::SparseExact;
  return EchelonMethod::Multimodular;
}

}  // namespace

// ------------------------------------------------------------ public API

Echelon echelon(const std::vector<SparseRow>& rows, std::size_t cols, EchelonMethod method) {
  for (const auto& r : rows) check_row(r, cols);
  if (method == EchelonMethod::Auto) method = choose_method(rows, cols);
  switch (method) {
    case EchelonMethod::FractionFree:
      return echelon_fraction_free(rows, cols);
    case EchelonMethod::SparseExact:
      return echelon_sparse(rows, cols);
    case EchelonMethod::Multimodular:
      return echelon_multimodular(rows, cols);
    case EchelonMethod::Auto:
      break;
  }
  throw std::logic_error("unreachable echelon method");
}

std::size_t rank_fraction_free(const ExactMat& m) {
  auto a = to_gint_dense(m.sparse_rows(), m.cols());
  return bareiss_forward(a, m.cols()).size();
}

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  for (const auto& r : rows) check_row(r, cols);
  const std::size_t full = std::min(rows.size(), cols);
  if (full == 0) return 0;
  // A prime image never has larger rank, so a full-rank image is conclusive.
  std::vector<IntRow> ints;
  ints.reserve(rows.size());
  for (const auto& r : rows) ints.push_back(to_int_row(r));
  std::vector<std::size_t> all(ints.size());
  std::iota(all.begin(), all.end(), 0);
  if (rows.size() * cols <= 40'000'000 &&
      rref_mod(ints, all, cols, modular::prime_field(0), 1).pivots.size() == full) {
    return full;
  }
  return echelon(rows, cols).rank();
}

std::size_t rank(const ExactMat& m) { return rank(m.sparse_rows(), m.cols()); }

// ------------------------------------------------------------ Subspace

Subspace Subspace::full(std::size_t ambient) {
  Echelon e;
  e.cols = ambient;
  for (std::uint32_t c = 0; c < ambient; ++c) {
    e.pivots.push_back(c);
    e.rows.push_back(SparseRow{{c, GaussRat(1)}});
  }
  return from_echelon(std::move(e));
}

Subspace Subspace::from_echelon(Echelon e) {
  Subspace s(e.cols);
  s.pivots_ = std::move(e.pivots);
  s.rows_ = std::move(e.rows);
  return s;
}

ExactMat Subspace::basis() const { return ExactMat::from_sparse(rows_, ambient_); }

std::vector<SparseRow> Subspace::annihilator_rows() const {
  std::vector<int> is_pivot(ambient_, 0);
  for (std::uint32_t p : pivots_) is_pivot[p] = 1;
  std::vector<SparseRow> out(ambient_);
  for (std::uint32_t c = 0; c < ambient_; ++c) {
    if (is_pivot[c] == 0) out[c].emplace_back(c, GaussRat(1));
  }
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    for (const auto& [c, v] : rows_[j]) {
      if (c != pivots_[j]) out[c].emplace_back(pivots_[j], -v);
    }
  }
  std::vector<SparseRow> result;
  result.reserve(ambient_ - pivots_.size());
  for (std::uint32_t c = 0; c < ambient_; ++c) {
    if (is_pivot[c] != 0) continue;
    std::sort(out[c].begin(), out[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    result.push_back(std::move(out[c]));
  }
  return result;
}

bool Subspace::contains_vector(const SparseRow& v) const {
  check_row(v, ambient_);
  Echelon e{ambient_, pivots_, rows_};
  return rows_in_rowspace({to_int_row(v)}, e, 0);
}

Subspace span(const std::vector<SparseRow>& rows, std::size_t ambient) {
  return Subspace::from_echelon(echelon(rows, ambient));
}

Subspace span(const ExactMat& rows) { return span(rows.sparse_rows(), rows.cols()); }

Subspace orthogonal_complement(const std::vector<SparseRow>& rows, std::size_t ambient) {
  // Echelonize with the column order reversed; in that form the complement's
  // canonical basis can be read off directly.
  const auto flip = [ambient](std::uint32_t c) {
    return static_cast<std::uint32_t>(ambient - 1 - c);
  };
  std::vector<SparseRow> rev;
  rev.reserve(rows.size());
  for (const auto& r : rows) {
    check_row(r, ambient);
    SparseRow x;
    x.reserve(r.size());
    for (auto it = r.rbegin(); it != r.rend(); ++it) x.emplace_back(flip(it->first), it->second);
    rev.push_back(std::move(x));
  }
  const Echelon e = echelon(rev, ambient);
  std::vector<int> is_q(ambient, 0);
  for (std::uint32_t p : e.pivots) is_q[flip(p)] = 1;
  std::vector<SparseRow> w(ambient);
  for (std::uint32_t c = 0; c < ambient; ++c) {
    if (is_q[c] == 0) w[c].emplace_back(c, GaussRat(1));
  }
  for (std::size_t j = 0; j < e.rank(); ++j) {
    const std::uint32_t q = flip(e.pivots[j]);
    for (const auto& [rc, v] : e.rows[j]) {
      const std::uint32_t c = flip(rc);
      if (c != q) w[c].emplace_back(q, -v);
    }
  }
  Echelon out;
  out.cols = ambient;
  for (std::uint32_t c = 0; c < ambient; ++c) {
    if (is_q[c] != 0) continue;
    std::sort(w[c].begin(), w[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.pivots.push_back(c);
    out.rows.push_back(std::move(w[c]));
  }
  return Subspace::from_echelon(std::move(out));
}

Subspace kernel_basis(const ExactMat& m) { return orthogonal_complement(m.sparse_rows(), m.cols()); }

bool contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
  if (b.dim() > a.dim()) return false;
  if (b.dim() == 0) return true;
  // Pivots of a subspace are a subset of the pivots of any subspace containing it.
  const auto& pa = a.pivots();
  for (std::uint32_t p : b.pivots()) {
    if (!std::binary_search(pa.begin(), pa.end(), p)) return false;
  }
  std::vector<IntRow> rows;
  rows.reserve(b.dim());
  for (const auto& r : b.basis_rows()) rows.push_back(to_int_row(r));
  Echelon e{a.ambient_dim(), a.pivots(), a.basis_rows()};
  return rows_in_rowspace(rows, e, 0);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
  if (contains(a, b)) return a;
  if (contains(b, a)) return b;
  std::vector<SparseRow> rows = a.basis_rows();
  rows.insert(rows.end(), b.basis_rows().begin(), b.basis_rows().end());
  return span(rows, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces of different spaces");
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;
  std::vector<SparseRow> rows = a.annihilator_rows();
  std::vector<SparseRow> more = b.annihilator_rows();
  rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return orthogonal_complement(rows, a.ambient_dim());
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (!contains(a, b)) throw ContainmentError("quotient of a space by a non-subspace");
  return a.dim() - b.dim();
}

}  // namespace nodalhodge
