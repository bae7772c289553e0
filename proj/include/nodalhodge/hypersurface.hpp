#pragma once

// A projective hypersurface of degree d in P^n together with its node set.

#include "nodalhodge/ideals.hpp"
#include "nodalhodge/nodes.hpp"

#include <memory>
#include <stdexcept>

namespace nodalhodge {

class NodeVerificationError : public std::invalid_argument {
 public:
  explicit NodeVerificationError(NodeReport report)
      : std::invalid_argument("not an ordinary double point: " + report.first_failure()),
        report_(std::move(report)) {}
  const NodeReport& report() const noexcept { return report_; }

 private:
  NodeReport report_;
};

class Hypersurface {
 public:
  /// Verifies every point; throws NodeVerificationError if one is not a node.
  /// An empty point list describes a smooth hypersurface.
  Hypersurface(HomoPoly f, std::vector<ProjPoint> nodes);

  int n() const noexcept { return static_cast<int>(f_.n_vars()) - 1; }
  int d() const noexcept { return f_.degree(); }
  /// floor(n/2)
  int m() const noexcept { return n() / 2; }
  const HomoPoly& f() const noexcept { return f_; }
  const NodeSet& nodes() const noexcept { return engine_->nodes(); }
  bool smooth() const noexcept { return nodes().empty(); }
  const NodeReport& node_report() const noexcept { return report_; }

  /// Shared cache of graded pieces for this hypersurface.
  IdealEngine& engine() const { return *engine_; }

 private:
  HomoPoly f_;
  NodeReport report_;
  std::shared_ptr<IdealEngine> engine_;
};

}  // namespace nodalhodge
