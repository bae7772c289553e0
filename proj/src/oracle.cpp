#include "nodalhodge/oracle.hpp"

#include "nodalhodge/linalg.hpp"
#include "nodalhodge/modular.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace nodalhodge {

namespace {

using modular::u64;

void enumerate(std::size_t n_vars, int left, ExpVec& cur, std::size_t pos, std::vector<ExpVec>& out) {
  if (pos + 1 == n_vars) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = e;
    enumerate(n_vars, left - e, cur, pos + 1, out);
  }
}

std::vector<ExpVec> all_monomials(std::size_t n_vars, int k) {
  std::vector<ExpVec> out;
  if (k < 0) return out;
  ExpVec cur(n_vars, 0);
  enumerate(n_vars, k, cur, 0, out);
  return out;
}

GaussRat power(const GaussRat& x, int e) {
  GaussRat r(1);
  for (int t = 0; t < e; ++t) r *= x;
  return r;
}

// Returns false if a denominator vanishes mod p.
bool image(const GaussRat& c, const modular::PrimeField& f, u64& out) {
  const u64 dr = f.reduce(c.re().denominator());
  const u64 di = f.reduce(c.im().denominator());
  if (dr == 0 || di == 0) return false;
  const u64 re = f.mul(f.reduce(c.re().numerator()), f.inv(dr));
  const u64 im = f.mul(f.reduce(c.im().numerator()), f.inv(di));
  out = f.add(re, f.mul(im, f.sqrt_minus_one));
  return true;
}

using ModRow = std::vector<std::pair<std::uint32_t, u64>>;

// Rank of sparse rows over F_p by reduction against stored pivot rows.
std::size_t sparse_rank_mod(std::vector<ModRow> rows, const modular::PrimeField& f) {
  std::sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) { return a.size() < b.size(); });
  std::unordered_map<std::uint32_t, ModRow> pivots;
  ModRow tmp;
  for (ModRow& row : rows) {
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const u64 inv = f.inv(row.front().second);
        for (auto& [c, v] : row) v = f.mul(v, inv);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const u64 scale = row.front().second;
      const ModRow& piv = it->second;
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < piv.size()) {
        if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
          tmp.push_back(row[a++]);
        } else if (a == row.size() || piv[b].first < row[a].first) {
          tmp.emplace_back(piv[b].first, f.neg(f.mul(scale, piv[b].second)));
          ++b;
        } else {
          const u64 v = f.sub(row[a].second, f.mul(scale, piv[b].second));
          if (v != 0) tmp.emplace_back(row[a].first, v);
          ++a;
          ++b;
        }
      }
      row.swap(tmp);
    }
  }
  return pivots.size();
}

}  // namespace

OracleQuotient brute_force_I_mod_J(const HomoPoly& f, const std::vector<ProjPoint>& nodes, int r) {
  const std::size_t nv = f.n_vars();
  const int d = f.degree();
  OracleQuotient out;
  const std::vector<ExpVec> mons = all_monomials(nv, r);
  out.ambient = mons.size();
  if (mons.empty()) return out;
  std::map<ExpVec, std::uint32_t> index;
  for (std::size_t c = 0; c < mons.size(); ++c) index.emplace(mons[c], static_cast<std::uint32_t>(c));

  // Value of every degree-r monomial at every node.
  std::vector<std::vector<GaussRat>> eval(nodes.size(), std::vector<GaussRat>(mons.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t c = 0; c < mons.size(); ++c) {
      GaussRat v(1);
      for (std::size_t j = 0; j < nv && !v.is_zero(); ++j) v *= power(nodes[a][j], mons[c][j]);
      eval[a][c] = v;
    }
  }
  out.dim_I = mons.size() - rank_fraction_free(ExactMat::from_rows(eval, mons.size()));

  std::vector<SparseRow> j_rows;
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<std::pair<ExpVec, GaussRat>> df;
    for (const auto& [e, c] : f.terms()) {
      if (e[j] == 0) continue;
      ExpVec g = e;
      --g[j];
      df.emplace_back(std::move(g), c * GaussRat(e[j]));
    }
    if (df.empty()) continue;
    for (const ExpVec& mu : all_monomials(nv, r - d + 1)) {
      std::map<std::uint32_t, GaussRat> acc;
      for (const auto& [g, c] : df) {
        ExpVec s = g;
        for (std::size_t t = 0; t < nv; ++t) s[t] += mu[t];
        acc[index.at(s)] += c;
      }
      SparseRow row;
      for (auto& [col, v] : acc) {
        if (!v.is_zero()) row.emplace_back(col, std::move(v));
      }
      for (std::size_t a = 0; a < nodes.size(); ++a) {
        GaussRat s(0);
        for (const auto& [col, v] : row) s += v * eval[a][col];
        if (!s.is_zero()) throw std::logic_error("a Jacobian multiple does not vanish at " + nodes[a].to_string());
      }
      if (!row.empty()) j_rows.push_back(std::move(row));
    }
  }

  // rank over F_p <= rank over Q(i) <= dim I_r, since every row lies in I_r.
  for (std::size_t pi = 7; pi < 10; ++pi) {
    const modular::PrimeField& field = modular::prime_field(pi);
    std::vector<ModRow> mrows;
    bool ok = true;
    for (const auto& row : j_rows) {
      ModRow m;
      for (const auto& [col, v] : row) {
        u64 x = 0;
        ok = ok && image(v, field, x);
        if (x != 0) m.emplace_back(col, x);
      }
      mrows.push_back(std::move(m));
    }
    if (!ok) continue;
    if (sparse_rank_mod(std::move(mrows), field) == out.dim_I) {
      out.dim_J = out.dim_I;
      out.certified_by_bounds = true;
      return out;
    }
    break;
  }
  out.dim_J = echelon(j_rows, mons.size(), EchelonMethod::SparseExact).rank();
  out.quotient = out.dim_I - out.dim_J;
  return out;
}

}  // namespace nodalhodge
