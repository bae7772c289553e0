#pragma once

// Brute-force recomputation of dim (I/J)_r that shares no code with the
// GradedPiece pipeline: its own monomial enumeration, its own derivative and
// evaluation loops, and a rank argument of its own.

#include "nodalhodge/polyring.hpp"

#include <vector>

namespace nodalhodge {

struct OracleQuotient {
  std::size_t ambient = 0;
  std::size_t dim_I = 0;
  std::size_t dim_J = 0;
  std::size_t quotient = 0;
  /// True when a prime-image lower bound met the upper bound dim I_r, so no
  /// exact elimination on the J spanning set was needed.
  bool certified_by_bounds = false;
};

/// Spanning set {x^mu d_j f : |mu| = r-d+1} and evaluation rows at the nodes,
/// both over all degree-r monomials. Throws std::logic_error if a spanning
/// vector of J_r does not vanish at some node.
OracleQuotient brute_force_I_mod_J(const HomoPoly& f, const std::vector<ProjPoint>& nodes, int r);

}  // namespace nodalhodge
