#include "nodalhodge/hypersurface.hpp"

namespace nodalhodge {

Hypersurface::Hypersurface(HomoPoly f, std::vector<ProjPoint> nodes) : f_(std::move(f)) {
  if (f_.n_vars() < 2) throw std::invalid_argument("hypersurface needs at least two variables");
  if (f_.degree() < 2) throw DegreeMismatch("hypersurface degree must be at least 2");
  if (f_.is_zero()) throw std::invalid_argument("zero polynomial does not define a hypersurface");
  report_ = verify_nodes(f_, nodes);
  if (!report_.all_nodes) throw NodeVerificationError(report_);
  engine_ = std::make_shared<IdealEngine>(NodeSet(f_.n_vars(), std::move(nodes)), f_);
}

}  // namespace nodalhodge
