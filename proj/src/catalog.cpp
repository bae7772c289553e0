#include "nodalhodge/catalog.hpp"

#include <regex>

namespace nodalhodge {

namespace {

ExpVec unit_exp(std::size_t n_vars, std::size_t j, int power) {
  ExpVec e(n_vars, 0);
  e[j] = power;
  return e;
}

ExpVec pair_exp(std::size_t n_vars, std::size_t i, int a, std::size_t j, int b) {
  ExpVec e(n_vars, 0);
  e[i] += a;
  e[j] += b;
  return e;
}

GaussRat frac(long num, long den) { return GaussRat(BigRat(mpz_class(num), mpz_class(den))); }

ProjPoint point(std::initializer_list<GaussRat> coords) { return ProjPoint(std::vector<GaussRat>(coords)); }

std::vector<ProjPoint> unit_points(std::size_t n_vars) {
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < n_vars; ++i) {
    std::vector<GaussRat> c(n_vars);
    c[i] = GaussRat(1);
    pts.emplace_back(std::move(c));
  }
  return pts;
}

// sum_i x_i^4 + c sum_{i<j} x_i^2 x_j^2 in four variables
HomoPoly quartic_with_cross_term(long c) {
  HomoPoly f(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    f.add_term(unit_exp(4, i, 4), GaussRat(1));
    for (std::size_t j = i + 1; j < 4; ++j) f.add_term(pair_exp(4, i, 2, j, 2), GaussRat(c));
  }
  return f;
}

CatalogEntry make(std::string name, std::string description, HomoPoly f, std::vector<ProjPoint> nodes,
                  std::vector<ExpectedValue> expected) {
  const std::size_t count = nodes.size();
  return CatalogEntry{std::move(name), std::move(description), Hypersurface(std::move(f), std::move(nodes)),
                      count, std::move(expected)};
}

CatalogEntry kummer() {
  std::vector<ProjPoint> nodes;
  for (std::size_t k = 0; k < 4; ++k) {
    // x_k = 0 and the other three coordinates are +-1; scale the first to 1.
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        std::vector<GaussRat> c(4);
        std::size_t slot = 0;
        for (std::size_t j = 0; j < 4; ++j) {
          if (j == k) continue;
          c[j] = GaussRat(slot == 0 ? 1 : (slot == 1 ? s1 : s2));
          ++slot;
        }
        nodes.emplace_back(std::move(c));
      }
    }
  }
  const std::string src = "Kummer quartic example";
  return make("kummer", "Kummer quartic surface sum x_i^4 - sum_{i<j} x_i^2 x_j^2 with 16 nodes",
              quartic_with_cross_term(-1), std::move(nodes),
              {{"nodes", 16, src, false},
               {"dim I^(2)_8", 101, src, true},
               {"dim (I^2)_8", 101, src, true},
               {"dim (IJ)_8", 100, src, true},
               {"condA q=2 M", 64, src, false},
               {"condA q=2 N", 56, src, false}});
}

CatalogEntry ex47i() {
  std::vector<ProjPoint> nodes;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (int s : {1, -1}) {
        std::vector<GaussRat> c(4);
        c[i] = GaussRat(1);
        c[j] = GaussRat(s);
        nodes.emplace_back(std::move(c));
      }
    }
  }
  const std::string src = "quartic with 12 nodes x_i^2 = x_j^2";
  return make("ex47i", "quartic surface sum x_i^4 - 2 sum_{i<j} x_i^2 x_j^2 with 12 nodes",
              quartic_with_cross_term(-2), std::move(nodes),
              {{"nodes", 12, src, false},
               {"condA q=2 M (first pair)", 48, src, false},
               {"condA q=2 N (first pair)", 56, src, false},
               {"condA q=2 M (second pair)", 12, src, false},
               {"condA q=2 N (second pair)", 35, src, false}});
}

CatalogEntry ex47iii() {
  // (sum x_i^2)^3 - sum x_i^6
  HomoPoly s(4, 2);
  HomoPoly six(4, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    s.add_term(unit_exp(4, i, 2), GaussRat(1));
    six.add_term(unit_exp(4, i, 6), GaussRat(1));
  }
  HomoPoly f = pow(s, 3) - six;
  std::vector<ProjPoint> nodes = unit_points(4);
  const GaussRat unit_i = GaussRat::i();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      // x_i = 1, x_j = 0 and the remaining two coordinates square to -1.
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          std::vector<GaussRat> c(4);
          c[i] = GaussRat(1);
          int slot = 0;
          for (std::size_t k = 0; k < 4; ++k) {
            if (k == i || k == j) continue;
            c[k] = unit_i * GaussRat(slot == 0 ? s1 : s2);
            ++slot;
          }
          nodes.emplace_back(std::move(c));
        }
      }
    }
  }
  const std::string src = "sextic (sum x_i^2)^3 - sum x_i^6 example";
  return make("ex47iii", "sextic surface (sum x_i^2)^3 - sum x_i^6 with 52 nodes", std::move(f),
              std::move(nodes),
              {{"nodes", 52, src, false},
               {"dim I^(2)_14", 472, src, true},
               {"dim (IJ)_14", 462, src, true},
               {"condA q=2 M (first pair)", 208, src, false},
               {"condA q=2 N (first pair)", 220, src, false},
               {"condA q=2 M (second pair)", 52, src, false},
               {"condA q=2 N (second pair)", 165, src, false}});
}

CatalogEntry ex38i() {
  HomoPoly f(5, 5);
  f.add_term({3, 1, 0, 0, 1}, GaussRat(1));
  f.add_term({3, 0, 1, 1, 0}, GaussRat(1));
  for (std::size_t i = 1; i < 5; ++i) f.add_term(unit_exp(5, i, 5), frac(-1, 5));
  return make("ex38i", "quintic threefold x_0^3 (x_1 x_4 + x_2 x_3) - sum_{i>=1} x_i^5/5 with one node",
              std::move(f), {point({1, 0, 0, 0, 0})},
              {{"nodes", 1, "quintic one-node example", false}});
}

CatalogEntry ex38ii() {
  HomoPoly f(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) f.add_term(pair_exp(4, i, 2, j, 2), frac(1, 2));
  }
  return make("ex38ii", "quartic surface sum_{i<j} x_i^2 x_j^2 / 2 with nodes at the coordinate points",
              std::move(f), unit_points(4), {{"nodes", 4, "four coordinate nodes example", false}});
}

CatalogEntry witness(int n, int d) {
  std::vector<GaussRat> c(static_cast<std::size_t>(n) + 1);
  c[0] = GaussRat(1);
  const std::string name = "thm1-d" + std::to_string(d) + "-n" + std::to_string(n);
  return make(name,
              "one-node witness sum x_i^" + std::to_string(d) + "/" + std::to_string(d) +
                  " - x_0^" + std::to_string(d - 2) + " sum x_i^2/2 in P^" + std::to_string(n),
              witness_polynomial(n, d), {ProjPoint(std::move(c))},
              {{"nodes", 1, "single-node witness family", false}});
}

}  // namespace

HomoPoly witness_polynomial(int n, int d) {
  if (n < 1 || d < 3) throw std::invalid_argument("witness family needs n >= 1 and d >= 3");
  const std::size_t n_vars = static_cast<std::size_t>(n) + 1;
  HomoPoly f(n_vars, d);
  for (std::size_t i = 1; i < n_vars; ++i) {
    f.add_term(unit_exp(n_vars, i, d), frac(1, d));
    f.add_term(pair_exp(n_vars, 0, d - 2, i, 2), frac(-1, 2));
  }
  return f;
}

HomoPoly fermat_polynomial(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("Fermat hypersurface needs n >= 1 and d >= 2");
  const std::size_t n_vars = static_cast<std::size_t>(n) + 1;
  HomoPoly f(n_vars, d);
  for (std::size_t i = 0; i < n_vars; ++i) f.add_term(unit_exp(n_vars, i, d), GaussRat(1));
  return f;
}

std::vector<std::string> catalog_names() {
  return {"thm1-d3-n5", "thm1-d4-n3", "ex38i", "ex38ii", "ex47i", "kummer", "ex47iii",
          "fermat-2-3", "fermat-2-4", "fermat-3-3", "fermat-3-4", "fermat-4-3"};
}

CatalogEntry catalog(const std::string& name) {
  if (name == "kummer") return kummer();
  if (name == "ex47i") return ex47i();
  if (name == "ex47iii") return ex47iii();
  if (name == "ex38i") return ex38i();
  if (name == "ex38ii") return ex38ii();
  if (name == "thm1-d3-n5") return witness(5, 3);
  if (name == "thm1-d4-n3") return witness(3, 4);
  static const std::regex fermat_re("fermat-([0-9]{1,2})-([0-9]{1,2})");
  std::smatch m;
  if (std::regex_match(name, m, fermat_re)) {
    const int n = std::stoi(m[1]);
    const int d = std::stoi(m[2]);
    if (n < 1 || d < 2) throw UnknownCatalogEntry("Fermat entries need n >= 1 and d >= 2: " + name);
    return make(name, "smooth Fermat hypersurface of degree " + std::to_string(d) + " in P^" + std::to_string(n),
                fermat_polynomial(n, d), {}, {{"nodes", 0, "smooth control", false}});
  }
  throw UnknownCatalogEntry("unknown catalog entry: " + name);
}

}  // namespace nodalhodge
