#pragma once

// Exact verification that supplied points are ordinary double points.

#include "nodalhodge/polyring.hpp"

#include <string>
#include <vector>

namespace nodalhodge {

struct PointCheck {
  ProjPoint point;
  bool on_hypersurface = false;
  bool critical = false;
  /// Rank of the dehomogenized Hessian; only computed at critical points.
  std::size_t hessian_rank = 0;
  bool is_node = false;
};

struct NodeReport {
  std::vector<PointCheck> points;
  bool all_nodes = true;
  /// Number of points that passed.
  std::size_t count = 0;

  /// Description of the first point that is not a node, or an empty string.
  std::string first_failure() const;
};

/// A point is a node when f and every first partial vanish there and the
/// Hessian in the affine chart of its pivot coordinate has full rank n.
NodeReport verify_nodes(const HomoPoly& f, const std::vector<ProjPoint>& points);

}  // namespace nodalhodge
