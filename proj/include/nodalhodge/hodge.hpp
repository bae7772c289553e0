#pragma once

// Dimension formulas for the graded pieces of the Hodge and pole order
// filtrations on the cohomology of the complement of a nodal hypersurface.
// Indices: q = n - p, m = floor(n/2), k = (q+1)d - n - 1.

#include "nodalhodge/hypersurface.hpp"

#include <array>
#include <optional>
#include <vector>

namespace nodalhodge {

/// Coefficient of t^i in (t + t^2 + ... + t^{d-1})^{n_plus_1}.
unsigned long long c_coeff(int n_plus_1, int d, int i);
/// All coefficients, index i = 0 .. n_plus_1 (d-1).
std::vector<unsigned long long> c_coeff_row(int n_plus_1, int d);
/// C(n+1, d, p d): the smooth Hodge number attached to p.
unsigned long long griffiths_smooth_dim(int n, int d, int p);

/// (q+1)d - n - 1
int target_degree(int n, int d, int q);

/// Dimension for q <= m: (R/J)_k when q < m, (I/J)_k when q = m. A smooth
/// hypersurface gives (R/J)_k for every q.
std::size_t grf_dim_low_q(const Hypersurface& h, int q);

struct ConditionAPair {
  int k = 0;
  int i = 0;
  std::size_t M = 0;
  std::size_t N = 0;
  std::size_t rank = 0;
  bool surjective = false;

  friend bool operator==(const ConditionAPair&, const ConditionAPair&) = default;
};

struct ConditionAReport {
  int q = 0;
  /// (k, i) = (qd - n, q - m + 1) and (qd - n - 1, q - m)
  std::array<ConditionAPair, 2> pairs;
  bool overall = false;

  friend bool operator==(const ConditionAReport&, const ConditionAReport&) = default;
};

struct ConditionBReport {
  int p = 0;
  /// m(d-1) - p
  int e = 0;
  std::size_t veronese_cols = 0;
  std::size_t node_count = 0;
  std::size_t rank = 0;
  /// |nodes| <= binom(e+n, n), necessary for independence
  bool count_ok = false;
  bool independent = false;

  friend bool operator==(const ConditionBReport&, const ConditionBReport&) = default;
};

ConditionAReport check_condition_A(const Hypersurface& h, int q);
ConditionBReport check_condition_B(const Hypersurface& h, int p);

struct Theorem2Dims {
  int q = 0;
  int k = 0;
  /// q - m
  int a = 0;
  std::size_t symbolic_next = 0;        // dim I^(a+1)_k
  std::size_t symbolic_times_j = 0;     // dim (I^(a) J)_k
  std::size_t symbolic_next2 = 0;       // dim I^(a+2)_k
  std::size_t intersection = 0;         // dim (I^(a+2) cap I^(a) J)_k
  std::size_t line1_dim = 0;
  std::size_t line2_dim = 0;
  bool lines_agree = false;
  ConditionAReport condition_a;

  friend bool operator==(const Theorem2Dims&, const Theorem2Dims&) = default;
};

/// Requires m < q <= n and a nonempty node set.
Theorem2Dims theorem2_dims(const Hypersurface& h, int q);

struct Conjecture1Dims {
  int q = 0;
  int k = 0;
  std::size_t numerator = 0;    // dim (I^{q-m+1})_k
  std::size_t denominator = 0;  // dim sum_j f_j (I^{q-m})_{k-d+1}
  std::size_t dim = 0;

  friend bool operator==(const Conjecture1Dims&, const Conjecture1Dims&) = default;
};

Conjecture1Dims conjecture1(const Hypersurface& h, int q);
std::size_t conjecture1_dim(const Hypersurface& h, int q);

struct NodeBounds {
  int n = 0;
  int d = 0;
  /// C(n+1, d, (m+1)d), only for odd n
  std::optional<unsigned long long> odd_bound;
  /// C(n+1, d, floor(nd/2) + 1)
  unsigned long long varchenko_rhs = 0;
  /// sum of C(n, d, i) over n < 2i <= nd
  unsigned long long varchenko_sum = 0;
  bool sum_matches_rhs = false;

  friend bool operator==(const NodeBounds&, const NodeBounds&) = default;
};

NodeBounds node_bounds(int n, int d);

struct Theorem1Witness {
  int n = 0;
  int d = 0;
  int p = 0;
  int q = 0;
  int r = 0;
  std::size_t lhs = 0;               // dim (I/J)_r
  unsigned long long rhs = 0;        // C(n+1, d, pd)
  bool strict = false;

  friend bool operator==(const Theorem1Witness&, const Theorem1Witness&) = default;
};

/// True for d = 3, n >= 5 and d = 4, n >= 3.
bool witness_admissible(int n, int d);
/// Range (n+1)/d <= p < n - m.
bool witness_p_in_range(int n, int d, int p);
/// The single-node family, verified and evaluated.
Theorem1Witness theorem1_witness(int n, int d, int p);
/// The same inequality for an arbitrary hypersurface (no admissibility check).
Theorem1Witness theorem1_inequality(const Hypersurface& h, int p);

struct KodairaSpencerReport {
  int q = 0;
  int source_degree = 0;
  int target_degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool numerator_maps_into_numerator = false;
  bool denominator_maps_into_denominator = false;
  ConditionAReport condition_a_q;
  std::optional<ConditionAReport> condition_a_q_minus_1;

  friend bool operator==(const KodairaSpencerReport&, const KodairaSpencerReport&) = default;
};

/// Rank of multiplication by -q g from (I^(a)/I^(a-1)J)_{qd-n-1} to
/// (I^(a+1)/I^(a)J)_{(q+1)d-n-1}, a = q - m. Requires q > m, g of degree d in I_d.
KodairaSpencerReport kodaira_spencer_rank(const Hypersurface& h, int q, const HomoPoly& g);

}  // namespace nodalhodge
