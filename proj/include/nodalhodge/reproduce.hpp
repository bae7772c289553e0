#pragma once

// The pinned reproduction suite: every published value and every property
// check, grouped into the ten acceptance criteria.

#include <string>
#include <vector>

namespace nodalhodge {

enum class RowKind {
  Asserted,  ///< must match
  Hedged,    ///< stated tentatively by the source; compared and reported
  Reported,  ///< computed for information only (never fails)
};

struct CheckRow {
  int criterion = 0;
  std::string id;
  std::string computed;
  std::string expected;
  std::string citation;
  RowKind kind = RowKind::Asserted;
  bool match = false;
};

/// Criteria 1..10. Rows of one criterion share catalog entries and their caches.
std::vector<CheckRow> run_criteria(const std::vector<int>& criteria);
std::vector<CheckRow> run_all_criteria();

/// Asserted rows all match (hedged and reported rows are ignored).
bool asserted_rows_pass(const std::vector<CheckRow>& rows);
/// Asserted and hedged rows all match.
bool criterion_passes(const std::vector<CheckRow>& rows, int criterion);

std::string kind_name(RowKind k);
std::string format_rows(const std::vector<CheckRow>& rows);

}  // namespace nodalhodge
