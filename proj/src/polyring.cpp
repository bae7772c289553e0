#include "nodalhodge/polyring.hpp"

#include <numeric>
#include <sstream>

namespace nodalhodge {

int exp_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
  const int da = exp_degree(a);
  const int db = exp_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

void fill_basis(std::size_t var, int remaining, ExpVec& cur, std::vector<ExpVec>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    fill_basis(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<ExpVec> monomial_basis(std::size_t n_vars, int k) {
  if (n_vars == 0) throw std::invalid_argument("monomial basis needs at least one variable");
  std::vector<ExpVec> out;
  if (k < 0) return out;
  out.reserve(monomial_count(n_vars, k));
  ExpVec cur(n_vars, 0);
  fill_basis(0, k, cur, out);
  return out;
}

std::size_t monomial_count(std::size_t n_vars, int k) {
  if (k < 0 || n_vars == 0) return 0;
  // binom(k + n_vars - 1, n_vars - 1), built incrementally so it stays integral.
  std::size_t result = 1;
  for (std::size_t j = 1; j < n_vars; ++j) {
    result = result * (static_cast<std::size_t>(k) + j) / j;
  }
  return result;
}

std::size_t monomial_index(const ExpVec& e) {
  const std::size_t m = e.size();
  int remaining = exp_degree(e);
  std::size_t index = 0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    for (int t = e[j] + 1; t <= remaining; ++t) index += monomial_count(m - j - 1, remaining - t);
    remaining -= e[j];
  }
  return index;
}

// ---------------------------------------------------------------- HomoPoly

HomoPoly::HomoPoly(std::size_t n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
  if (n_vars == 0) throw std::invalid_argument("polynomial needs at least one variable");
  if (degree < 0) throw DegreeMismatch("negative degree");
}

void HomoPoly::check_exp(const ExpVec& e) const {
  if (e.size() != n_vars_) throw DegreeMismatch("exponent vector has the wrong length");
  for (int x : e) {
    if (x < 0) throw DegreeMismatch("negative exponent");
  }
  if (exp_degree(e) != degree_) throw DegreeMismatch("term degree differs from polynomial degree");
}

HomoPoly HomoPoly::monomial(const ExpVec& e, GaussRat coeff) {
  HomoPoly p(e.size(), exp_degree(e));
  p.add_term(e, coeff);
  return p;
}

HomoPoly HomoPoly::from_terms(std::size_t n_vars, int degree,
                              const std::vector<std::pair<ExpVec, GaussRat>>& terms) {
  HomoPoly p(n_vars, degree);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

HomoPoly HomoPoly::from_row(std::size_t n_vars, int degree, const SparseRow& row) {
  HomoPoly p(n_vars, degree);
  const std::vector<ExpVec> basis = monomial_basis(n_vars, degree);
  for (const auto& [c, v] : row) {
    if (c >= basis.size()) throw DimensionMismatch("coordinate outside the monomial basis");
    p.add_term(basis[c], v);
  }
  return p;
}

GaussRat HomoPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRat() : it->second;
}

void HomoPoly::add_term(const ExpVec& e, const GaussRat& c) {
  check_exp(e);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SparseRow HomoPoly::to_row() const {
  SparseRow row;
  row.reserve(terms_.size());
  // Map order is grlex-descending, which is the basis order.
  for (const auto& [e, c] : terms_) row.emplace_back(static_cast<std::uint32_t>(monomial_index(e)), c);
  return row;
}

HomoPoly HomoPoly::operator-() const {
  HomoPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HomoPoly& HomoPoly::operator+=(const HomoPoly& o) {
  if (o.n_vars_ != n_vars_ || o.degree_ != degree_) throw DegreeMismatch("adding polynomials of different shape");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomoPoly& HomoPoly::operator-=(const HomoPoly& o) { return *this += -o; }

HomoPoly& HomoPoly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string HomoPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef = c.to_string();
    bool negative = false;
    if (c.is_real() && c.re().sign() < 0) {
      negative = true;
      coef = (-c).to_string();
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_unit = coef == "1";
    const bool constant = exp_degree(e) == 0;
    if (!c.is_real()) coef = "(" + coef + ")";
    if (!is_unit || constant) os << coef;
    bool need_star = !is_unit || constant;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (need_star) os << "*";
      os << "x" << j;
      if (e[j] > 1) os << "^" << e[j];
      need_star = true;
    }
  }
  return os.str();
}

HomoPoly mul(const HomoPoly& p, const HomoPoly& q) {
  if (p.n_vars() != q.n_vars()) throw DegreeMismatch("multiplying polynomials in different rings");
  HomoPoly r(p.n_vars(), p.degree() + q.degree());
  ExpVec e(p.n_vars());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = a[j] + b[j];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

HomoPoly operator*(const HomoPoly& p, const HomoPoly& q) { return mul(p, q); }

HomoPoly pow(const HomoPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  HomoPoly r = HomoPoly::monomial(ExpVec(p.n_vars(), 0));
  for (int k = 0; k < e; ++k) r = mul(r, p);
  return r;
}

HomoPoly partial(const HomoPoly& p, std::size_t j) {
  if (j >= p.n_vars()) throw std::out_of_range("partial derivative variable out of range");
  HomoPoly r(p.n_vars(), p.degree() == 0 ? 0 : p.degree() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[j] == 0) continue;
    ExpVec f = e;
    --f[j];
    r.add_term(f, c * GaussRat(e[j]));
  }
  return r;
}

HomoPoly iterated_partial(const HomoPoly& p, const ExpVec& mu) {
  if (mu.size() != p.n_vars()) throw DegreeMismatch("multi-index has the wrong length");
  HomoPoly r = p;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    for (int t = 0; t < mu[j]; ++t) r = partial(r, j);
  }
  return r;
}

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::vector<GaussRat> coords) : coords_(std::move(coords)) {
  std::size_t k = 0;
  while (k < coords_.size() && coords_[k].is_zero()) ++k;
  if (k == coords_.size()) throw std::invalid_argument("projective point with all coordinates zero");
  pivot_ = k;
  if (!coords_[k].is_one()) {
    const GaussRat inv = coords_[k].inverse();
    for (auto& c : coords_) c *= inv;
  }
}

std::string ProjPoint::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j != 0) s += ":";
    s += coords_[j].to_string();
  }
  return s + ")";
}

GaussRat evaluate(const HomoPoly& p, const std::vector<GaussRat>& y) {
  if (y.size() != p.n_vars()) throw DimensionMismatch("point has the wrong number of coordinates");
  GaussRat total;
  for (const auto& [e, c] : p.terms()) {
    GaussRat term = c;
    for (std::size_t j = 0; j < e.size() && !term.is_zero(); ++j) {
      for (int t = 0; t < e[j]; ++t) term *= y[j];
    }
    total += term;
  }
  return total;
}

GaussRat evaluate(const HomoPoly& p, const ProjPoint& y) { return evaluate(p, y.coords()); }

std::size_t hessian_rank_at(const HomoPoly& f, const ProjPoint& y) {
  const std::size_t n1 = f.n_vars();
  if (y.size() != n1) throw DimensionMismatch("point has the wrong number of coordinates");
  std::vector<HomoPoly> first;
  first.reserve(n1);
  for (std::size_t j = 0; j < n1; ++j) {
    first.push_back(partial(f, j));
    if (!evaluate(first.back(), y).is_zero()) {
      throw NotCriticalError("point " + y.to_string() + " is not a critical point: df/dx" +
                             std::to_string(j) + " does not vanish");
    }
  }
  // Setting x_pivot = 1 commutes with differentiating in the other variables.
  std::vector<std::size_t> chart;
  for (std::size_t j = 0; j < n1; ++j) {
    if (j != y.pivot()) chart.push_back(j);
  }
  ExactMat h(chart.size(), chart.size());
  for (std::size_t a = 0; a < chart.size(); ++a) {
    for (std::size_t b = 0; b < chart.size(); ++b) {
      h(a, b) = evaluate(partial(first[chart[a]], chart[b]), y);
    }
  }
  return rank(h);
}

}  // namespace nodalhodge
