#pragma once

// Named example hypersurfaces with explicitly enumerated node sets.

#include "nodalhodge/hypersurface.hpp"

#include <string>
#include <vector>

namespace nodalhodge {

struct ExpectedValue {
  std::string key;
  long value = 0;
  std::string source;
  /// True when the source states the value only tentatively.
  bool hedged = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Hypersurface hypersurface;
  std::size_t expected_nodes = 0;
  std::vector<ExpectedValue> expected;
};

class UnknownCatalogEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// sum_{i=1}^n x_i^d / d - x_0^{d-2} sum_{i=1}^n x_i^2 / 2, with a node at (1:0:...:0).
HomoPoly witness_polynomial(int n, int d);
/// sum_i x_i^d in n+1 variables.
HomoPoly fermat_polynomial(int n, int d);

/// Names accepted by catalog(); "fermat-<n>-<d>" is accepted for any n >= 1, d >= 2.
std::vector<std::string> catalog_names();
CatalogEntry catalog(const std::string& name);

}  // namespace nodalhodge
