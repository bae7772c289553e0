#include "nodalhodge/hodge.hpp"

#include "nodalhodge/catalog.hpp"

#include <stdexcept>
#include <string>

namespace nodalhodge {

std::vector<unsigned long long> c_coeff_row(int n_plus_1, int d) {
  if (n_plus_1 < 1) throw std::invalid_argument("c_coeff needs n+1 >= 1");
  if (d < 2) throw std::invalid_argument("c_coeff needs d >= 2");
  // Multiply out (t + ... + t^{d-1}) one factor at a time.
  std::vector<unsigned long long> row{1};
  for (int f = 0; f < n_plus_1; ++f) {
    std::vector<unsigned long long> next(row.size() + static_cast<std::size_t>(d - 1), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      for (int s = 1; s <= d - 1; ++s) {
        unsigned long long& slot = next[i + static_cast<std::size_t>(s)];
        if (__builtin_add_overflow(slot, row[i], &slot)) throw std::overflow_error("c_coeff overflow");
      }
    }
    row = std::move(next);
  }
  return row;
}

unsigned long long c_coeff(int n_plus_1, int d, int i) {
  const std::vector<unsigned long long> row = c_coeff_row(n_plus_1, d);
  if (i < 0 || static_cast<std::size_t>(i) >= row.size()) return 0;
  return row[static_cast<std::size_t>(i)];
}

unsigned long long griffiths_smooth_dim(int n, int d, int p) { return c_coeff(n + 1, d, p * d); }

int target_degree(int n, int d, int q) { return (q + 1) * d - n - 1; }

std::size_t grf_dim_low_q(const Hypersurface& h, int q) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  if (!h.smooth() && q > h.m()) {
    throw std::invalid_argument("q = " + std::to_string(q) + " exceeds m = " + std::to_string(h.m()) +
                                "; use theorem2_dims");
  }
  const int k = target_degree(h.n(), h.d(), q);
  if (k < 0) return 0;
  IdealEngine& eng = h.engine();
  if (h.smooth() || q < h.m()) return quotient_dim(eng.ring(k).space, eng.jacobian(k).space);
  return quotient_dim(eng.symbolic(1, k).space, eng.jacobian(k).space);
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

ConditionAPair condition_pair(const Hypersurface& h, int k, int i) {
  ConditionAPair pr;
  pr.k = k;
  pr.i = i;
  const std::size_t n = static_cast<std::size_t>(h.n());
  pr.M = i >= 1 ? binom(static_cast<std::size_t>(i - 1) + n, n) * h.nodes().size() : 0;
  pr.N = k >= 0 ? binom(static_cast<std::size_t>(k) + n, n) : 0;
  if (pr.M > 0 && pr.N > 0) {
    if (k >= i - 1) {
      // Here the kernel of the evaluation map is I^(i)_k, which is usually cached.
      pr.rank = pr.N - h.engine().symbolic(i, k).dim();
    } else {
      pr.rank = rank(evaluation_rows(h.nodes(), i, k), pr.N);
    }
  }
  pr.surjective = pr.rank == pr.M;
  return pr;
}

void require_singular_high_q(const Hypersurface& h, int q) {
  if (h.smooth()) throw std::invalid_argument("this formula needs a nonempty node set");
  if (q <= h.m() || q > h.n()) {
    throw std::invalid_argument("q must satisfy m < q <= n (m = " + std::to_string(h.m()) +
                                ", n = " + std::to_string(h.n()) + ")");
  }
}

std::size_t guarded_quotient(const Subspace& num, const Subspace& den, const std::string& what) {
  if (!contains(num, den)) throw ContainmentError("containment failed: " + what);
  return num.dim() - den.dim();
}

}  // namespace

ConditionAReport check_condition_A(const Hypersurface& h, int q) {
  require_singular_high_q(h, q);
  ConditionAReport rep;
  rep.q = q;
  const int n = h.n();
  const int d = h.d();
  const int m = h.m();
  rep.pairs[0] = condition_pair(h, q * d - n, q - m + 1);
  rep.pairs[1] = condition_pair(h, q * d - n - 1, q - m);
  rep.overall = rep.pairs[0].surjective && rep.pairs[1].surjective;
  return rep;
}

ConditionBReport check_condition_B(const Hypersurface& h, int p) {
  ConditionBReport rep;
  rep.p = p;
  rep.e = h.m() * (h.d() - 1) - p;
  rep.node_count = h.nodes().size();
  const std::size_t n = static_cast<std::size_t>(h.n());
  rep.veronese_cols = rep.e >= 0 ? binom(static_cast<std::size_t>(rep.e) + n, n) : 0;
  rep.count_ok = rep.node_count <= rep.veronese_cols;
  if (rep.e >= 0 && rep.node_count > 0) {
    // Rows are the nodes, columns the degree-e monomials evaluated there.
    rep.rank = rank(evaluation_rows(h.nodes(), 1, rep.e), rep.veronese_cols);
  }
  rep.independent = rep.rank == rep.node_count && (rep.e >= 0 || rep.node_count == 0);
  return rep;
}

Theorem2Dims theorem2_dims(const Hypersurface& h, int q) {
  require_singular_high_q(h, q);
  Theorem2Dims t;
  t.q = q;
  t.a = q - h.m();
  t.k = target_degree(h.n(), h.d(), q);
  IdealEngine& eng = h.engine();
  const GradedPiece& num1 = eng.symbolic(t.a + 1, t.k);
  const GradedPiece& den1 = eng.symbolic_times_jacobian(t.a, t.k);
  const GradedPiece& num2 = eng.symbolic(t.a + 2, t.k);
  const Subspace den2 = intersect(num2.space, den1.space);
  t.symbolic_next = num1.dim();
  t.symbolic_times_j = den1.dim();
  t.symbolic_next2 = num2.dim();
  t.intersection = den2.dim();
  t.line1_dim = guarded_quotient(num1.space, den1.space, den1.label + " in " + num1.label);
  t.line2_dim = guarded_quotient(num2.space, den2, "intersection in " + num2.label);
  t.lines_agree = t.line1_dim == t.line2_dim;
  t.condition_a = check_condition_A(h, q);
  return t;
}

Conjecture1Dims conjecture1(const Hypersurface& h, int q) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  Conjecture1Dims c;
  c.q = q;
  c.k = target_degree(h.n(), h.d(), q);
  if (c.k < 0) return c;
  IdealEngine& eng = h.engine();
  // Without nodes every power of I is R, which gives (R/J)_k.
  const int a = h.smooth() ? 0 : q - h.m();
  const int i_num = h.smooth() ? 0 : a + 1;
  const GradedPiece& num = eng.ordinary(i_num, c.k);
  const GradedPiece& den = eng.ordinary_times_jacobian(a, c.k);
  c.numerator = num.dim();
  c.denominator = den.dim();
  c.dim = guarded_quotient(num.space, den.space, den.label + " in " + num.label);
  return c;
}

std::size_t conjecture1_dim(const Hypersurface& h, int q) { return conjecture1(h, q).dim; }

NodeBounds node_bounds(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("node bounds need n >= 2 and d >= 2");
  NodeBounds b;
  b.n = n;
  b.d = d;
  const int m = n / 2;
  if (n % 2 == 1) b.odd_bound = c_coeff(n + 1, d, (m + 1) * d);
  b.varchenko_rhs = c_coeff(n + 1, d, n * d / 2 + 1);
  const std::vector<unsigned long long> row = c_coeff_row(n, d);
  for (int i = 0; 2 * i <= n * d; ++i) {
    if (2 * i > n && static_cast<std::size_t>(i) < row.size()) b.varchenko_sum += row[static_cast<std::size_t>(i)];
  }
  b.sum_matches_rhs = b.varchenko_sum == b.varchenko_rhs;
  return b;
}

bool witness_admissible(int n, int d) { return (d == 3 && n >= 5) || (d == 4 && n >= 3); }

bool witness_p_in_range(int n, int d, int p) { return p * d >= n + 1 && p < n - n / 2; }

Theorem1Witness theorem1_inequality(const Hypersurface& h, int p) {
  Theorem1Witness w;
  w.n = h.n();
  w.d = h.d();
  w.p = p;
  w.q = w.n - p;
  w.r = target_degree(w.n, w.d, w.q);
  w.rhs = griffiths_smooth_dim(w.n, w.d, p);
  if (w.r >= 0) {
    IdealEngine& eng = h.engine();
    w.lhs = guarded_quotient(eng.symbolic(1, w.r).space, eng.jacobian(w.r).space, "J in I");
  }
  w.strict = w.lhs < w.rhs;
  return w;
}

Theorem1Witness theorem1_witness(int n, int d, int p) {
  if (!witness_admissible(n, d)) {
    throw std::invalid_argument("witness needs d = 3, n >= 5 or d = 4, n >= 3 (got n = " + std::to_string(n) +
                                ", d = " + std::to_string(d) + ")");
  }
  if (!witness_p_in_range(n, d, p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " outside (n+1)/d <= p < n - m");
  }
  std::vector<GaussRat> origin(static_cast<std::size_t>(n) + 1);
  origin[0] = GaussRat(1);
  const Hypersurface h(witness_polynomial(n, d), {ProjPoint(std::move(origin))});
  return theorem1_inequality(h, p);
}

KodairaSpencerReport kodaira_spencer_rank(const Hypersurface& h, int q, const HomoPoly& g) {
  require_singular_high_q(h, q);
  if (g.n_vars() != h.f().n_vars() || g.degree() != h.d()) {
    throw DegreeMismatch("g must have the degree and number of variables of f");
  }
  IdealEngine& eng = h.engine();
  if (!eng.symbolic(1, h.d()).space.contains_vector(g.to_row())) {
    throw std::invalid_argument("g does not vanish at every node");
  }
  KodairaSpencerReport rep;
  rep.q = q;
  const int a = q - h.m();
  rep.source_degree = q * h.d() - h.n() - 1;
  rep.target_degree = target_degree(h.n(), h.d(), q);
  const GradedPiece& s_num = eng.symbolic(a, rep.source_degree);
  const GradedPiece& s_den = eng.symbolic_times_jacobian(a - 1, rep.source_degree);
  const GradedPiece& t_num = eng.symbolic(a + 1, rep.target_degree);
  const GradedPiece& t_den = eng.symbolic_times_jacobian(a, rep.target_degree);
  rep.source_dim = guarded_quotient(s_num.space, s_den.space, s_den.label + " in " + s_num.label);
  rep.target_dim = guarded_quotient(t_num.space, t_den.space, t_den.label + " in " + t_num.label);

  // The scalar -q does not change the rank, so multiply by g itself.
  const std::size_t ambient = t_num.ambient_dim();
  const Subspace image_num = span(multiply_piece(g, s_num), ambient);
  const Subspace image_den = span(multiply_piece(g, s_den), ambient);
  rep.numerator_maps_into_numerator = contains(t_num.space, image_num);
  rep.denominator_maps_into_denominator = contains(t_den.space, image_den);
  if (!rep.numerator_maps_into_numerator || !rep.denominator_maps_into_denominator) {
    throw ContainmentError("multiplication by g is not well defined on the quotients");
  }
  rep.rank = sum(image_num, t_den.space).dim() - t_den.dim();
  rep.condition_a_q = check_condition_A(h, q);
  if (q - 1 > h.m()) rep.condition_a_q_minus_1 = check_condition_A(h, q - 1);
  return rep;
}

}  // namespace nodalhodge
