#include "nodalhodge/nodes.hpp"

#include <algorithm>

namespace nodalhodge {

std::string NodeReport::first_failure() const {
  for (const PointCheck& c : points) {
    if (c.is_node) continue;
    std::string why;
    if (!c.on_hypersurface) {
      why = "f does not vanish";
    } else if (!c.critical) {
      why = "some partial derivative does not vanish";
    } else {
      why = "Hessian rank is " + std::to_string(c.hessian_rank);
    }
    return c.point.to_string() + ": " + why;
  }
  return {};
}

NodeReport verify_nodes(const HomoPoly& f, const std::vector<ProjPoint>& points) {
  NodeReport report;
  const std::size_t n = f.n_vars() - 1;
  std::vector<HomoPoly> partials;
  for (std::size_t j = 0; j < f.n_vars(); ++j) partials.push_back(partial(f, j));
  for (const ProjPoint& y : points) {
    PointCheck c{y};
    if (y.size() != f.n_vars()) throw DimensionMismatch("point has the wrong number of coordinates");
    c.on_hypersurface = evaluate(f, y).is_zero();
    c.critical = true;
    for (const HomoPoly& fj : partials) {
      if (!evaluate(fj, y).is_zero()) {
        c.critical = false;
        break;
      }
    }
    if (c.critical) c.hessian_rank = hessian_rank_at(f, y);
    c.is_node = c.on_hypersurface && c.critical && c.hessian_rank == n;
    report.all_nodes = report.all_nodes && c.is_node;
    report.points.push_back(std::move(c));
  }
  report.count = static_cast<std::size_t>(
      std::count_if(report.points.begin(), report.points.end(), [](const PointCheck& c) { return c.is_node; }));
  return report;
}

}  // namespace nodalhodge
