#pragma once

// JSON input documents and analysis reports.

#include "nodalhodge/hodge.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nodalhodge {

/// Malformed input document. line and column are 1-based and refer to the
/// JSON text when the error is syntactic; for a bad value they are 0 and
/// `path` names the offending element.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& what, std::string path, std::size_t line = 0, std::size_t column = 0)
      : std::invalid_argument(what), path_(std::move(path)), line_(line), column_(column) {}
  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t column_;
};

struct InputDocument {
  int n = 0;
  int d = 0;
  HomoPoly polynomial{1, 0};
  std::vector<ProjPoint> nodes;
};

nlohmann::json polynomial_to_json(const HomoPoly& p);
HomoPoly polynomial_from_json(const nlohmann::json& j, const std::string& path = "/polynomial");
nlohmann::json point_to_json(const ProjPoint& y);

InputDocument parse_input(const std::string& text);
nlohmann::json input_to_json(const Hypersurface& h);
/// Verifies the nodes; throws NodeVerificationError on failure.
Hypersurface to_hypersurface(const InputDocument& doc);

struct PieceDim {
  std::string label;
  std::size_t dim = 0;
  std::size_t ambient = 0;
  /// The operation that produced the value.
  std::string op;

  friend bool operator==(const PieceDim&, const PieceDim&) = default;
};

struct QRecord {
  int q = 0;
  int p = 0;
  int k = 0;
  /// "low" for q <= m (or smooth input), "theorem2" for q > m.
  std::string regime;
  std::vector<PieceDim> pieces;
  /// C(n+1, d, (q+1)d), the value for a smooth hypersurface of the same degree.
  unsigned long long smooth_dim = 0;
  std::optional<std::size_t> low_q_dim;
  std::optional<Theorem2Dims> theorem2;
  std::optional<Conjecture1Dims> conjecture1;
  std::optional<ConditionBReport> condition_b;
  /// Whether (I^i)_k and I^(i)_k coincide for i = q - m + 1.
  std::optional<bool> powers_agree;

  friend bool operator==(const QRecord&, const QRecord&) = default;
};

struct AnalysisReport {
  std::string source;
  int n = 0;
  int d = 0;
  int m = 0;
  std::size_t node_count = 0;
  std::string polynomial;
  std::vector<std::string> nodes;
  NodeBounds bounds;
  std::vector<QRecord> records;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Hypersurface& h, const std::string& source, const std::vector<int>& qs);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
/// Sorted keys, two-space indent, trailing newline.
std::string emit(const AnalysisReport& r);
/// Aligned plain-text summary.
std::string format_table(const AnalysisReport& r);

}  // namespace nodalhodge
