#include "nodalhodge/catalog.hpp"
#include "nodalhodge/report.hpp"
#include "nodalhodge/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace nodalhodge;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Loaded {
  std::string source;
  std::optional<CatalogEntry> entry;
  std::optional<Hypersurface> file;

  const Hypersurface& h() const { return entry ? entry->hypersurface : *file; }
};

Loaded load(const std::string& source) {
  Loaded out;
  out.source = source;
  if (source.rfind("catalog:", 0) == 0) {
    out.entry = catalog(source.substr(8));
    return out;
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot open " + source, "");
  std::stringstream ss;
  ss << in.rdbuf();
  out.file = to_hypersurface(parse_input(ss.str()));
  return out;
}

// "1,2", "0-3", "" or "none".
std::vector<int> parse_q_list(const std::string& text, int n) {
  std::vector<int> qs;
  if (text == "all") {
    for (int q = 0; q <= n; ++q) qs.push_back(q);
    return qs;
  }
  if (text.empty() || text == "none") return qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-', 1);
    try {
      std::size_t used = 0;
      if (dash == std::string::npos) {
        qs.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        for (int q = lo; q <= hi; ++q) qs.push_back(q);
      }
    } catch (const std::logic_error&) {
      throw InputError("bad --q item \"" + item + "\"", "--q");
    }
  }
  return qs;
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path, "");
  out << text;
}

void print_node_report(const NodeReport& rep, std::ostream& os) {
  os << "node verification failed (" << rep.count << " of " << rep.points.size() << " points are nodes)\n";
  os << std::left << std::setw(40) << "point" << std::setw(8) << "on_Y" << std::setw(10) << "critical"
     << std::setw(10) << "hessian" << "node\n";
  for (const auto& pc : rep.points) {
    os << std::left << std::setw(40) << pc.point.to_string() << std::setw(8) << (pc.on_hypersurface ? "yes" : "no")
       << std::setw(10) << (pc.critical ? "yes" : "no") << std::setw(10)
       << (pc.critical ? std::to_string(pc.hessian_rank) : "-") << (pc.is_node ? "yes" : "NO") << "\n";
  }
}

int cmd_analyze(const std::string& source, const std::string& q_text, bool as_json, const std::string& out_path) {
  const Loaded l = load(source);
  const AnalysisReport r = analyze(l.h(), source, parse_q_list(q_text, l.h().n()));
  const std::string json_text = emit(r);
  if (!out_path.empty()) write_out(out_path, json_text);
  std::cout << (as_json ? json_text : format_table(r));
  return kOk;
}

int cmd_reproduce(const std::vector<int>& criteria) {
  const std::vector<CheckRow> rows = criteria.empty() ? run_all_criteria() : run_criteria(criteria);
  std::cout << format_rows(rows);
  std::size_t asserted = 0, asserted_ok = 0, hedged = 0, hedged_ok = 0;
  for (const auto& r : rows) {
    if (r.kind == RowKind::Asserted) {
      ++asserted;
      asserted_ok += r.match;
    } else if (r.kind == RowKind::Hedged) {
      ++hedged;
      hedged_ok += r.match;
    }
  }
  std::cout << "\nasserted " << asserted_ok << "/" << asserted << " match, hedged " << hedged_ok << "/" << hedged
            << " match\n";
  return asserted_rows_pass(rows) ? kOk : kMismatch;
}

int cmd_dims(const std::string& source, const std::string& kind, int i, int k) {
  const Loaded l = load(source);
  IdealEngine& eng = l.h().engine();
  std::size_t dim = 0;
  std::string label;
  if (kind == "R/J") {
    dim = eng.ring(k).dim() - eng.jacobian(k).dim();
    label = "(R/J)_" + std::to_string(k);
  } else if (kind == "I^i") {
    dim = eng.ordinary(i, k).dim();
    label = "(I^" + std::to_string(i) + ")_" + std::to_string(k);
  } else if (kind == "I^(i)") {
    dim = eng.symbolic(i, k).dim();
    label = "I^(" + std::to_string(i) + ")_" + std::to_string(k);
  } else if (kind == "I^(i)J") {
    dim = eng.symbolic_times_jacobian(i, k).dim();
    label = "(I^(" + std::to_string(i) + ")J)_" + std::to_string(k);
  } else {
    throw InputError("unknown --kind \"" + kind + "\" (expected R/J, I^i, I^(i) or I^(i)J)", "--kind");
  }
  std::cout << label << " = " << dim << "\n";
  return kOk;
}

int cmd_ccoeff(int n_plus_1, int d) {
  const auto row = c_coeff_row(n_plus_1, d);
  unsigned long long total = 0;
  std::cout << std::left << std::setw(6) << "i" << "C(" << n_plus_1 << "," << d << ",i)\n";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    total += row[i];
    std::cout << std::left << std::setw(6) << i << row[i] << "\n";
  }
  // C(n+1, d, i) = C(n+1, d, (n+1)d - i)
  bool symmetric = true;
  const int top = n_plus_1 * d;
  for (int i = 0; i <= top; ++i) symmetric = symmetric && c_coeff(n_plus_1, d, i) == c_coeff(n_plus_1, d, top - i);
  std::cout << "total " << total << ", symmetric " << (symmetric ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_bounds(int n, int d) {
  const NodeBounds b = node_bounds(n, d);
  std::cout << "n " << b.n << ", d " << b.d << "\n";
  std::cout << "odd_bound      " << (b.odd_bound ? std::to_string(*b.odd_bound) : "-") << "\n";
  std::cout << "varchenko_rhs  " << b.varchenko_rhs << "\n";
  std::cout << "varchenko_sum  " << b.varchenko_sum << (b.sum_matches_rhs ? "" : "  (differs from rhs)") << "\n";
  return kOk;
}

int cmd_export(const std::string& name, const std::string& out_path) {
  const std::string text = input_to_json(catalog(name).hypersurface).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_out(out_path, text);
  }
  return kOk;
}

int cmd_catalog_list() {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog(name);
    std::cout << std::left << std::setw(14) << name << "n=" << e.hypersurface.n() << " d=" << e.hypersurface.d()
              << " nodes=" << std::setw(4) << e.expected_nodes << e.description << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge and pole order filtration graded pieces of nodal hypersurfaces"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--catalog-list", list, "List the built-in hypersurfaces");

  std::string source, q_text = "all", out_path, kind, name;
  bool as_json = false;
  int i = 1, k = 0, a = 0, b = 0;
  std::vector<int> criteria;

  auto* analyze_cmd = app.add_subcommand("analyze", "Graded-piece dimensions and rank tests for every q");
  analyze_cmd->add_option("source", source, "Input JSON file or catalog:<name>")->required();
  analyze_cmd->add_option("--q", q_text, "q values: all, none, or a list such as 1,2 or 0-3");
  analyze_cmd->add_flag("--json", as_json, "Print the JSON report instead of the table");
  analyze_cmd->add_option("--out", out_path, "Also write the JSON report to this file");

  auto* repro = app.add_subcommand("reproduce-paper", "Run the pinned comparison suite");
  repro->add_option("--criteria", criteria, "Only these criteria (1-10)")->delimiter(',');

  auto* dims = app.add_subcommand("dims", "Dimension of one graded piece");
  dims->add_option("source", source, "Input JSON file or catalog:<name>")->required();
  dims->add_option("--kind", kind, "R/J, I^i, I^(i) or I^(i)J")->required();
  dims->add_option("--i", i, "Power");
  dims->add_option("--k", k, "Degree")->required();

  auto* ccoeff = app.add_subcommand("ccoeff", "Coefficients of (t + ... + t^(d-1))^(n+1)");
  ccoeff->add_option("n_plus_1", a)->required()->check(CLI::Range(1, 64));
  ccoeff->add_option("d", b)->required()->check(CLI::Range(2, 64));

  auto* bounds = app.add_subcommand("bounds", "Node-count bounds for degree d in P^n");
  bounds->add_option("n", a)->required()->check(CLI::Range(1, 64));
  bounds->add_option("d", b)->required()->check(CLI::Range(2, 64));

  auto* export_cmd = app.add_subcommand("export", "Write a catalog entry as an input document");
  export_cmd->add_option("name", name)->required();
  export_cmd->add_option("--out", out_path, "Output file (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (list) return cmd_catalog_list();
    if (*analyze_cmd) return cmd_analyze(source, q_text, as_json, out_path);
    if (*repro) return cmd_reproduce(criteria);
    if (*dims) return cmd_dims(source, kind, i, k);
    if (*ccoeff) return cmd_ccoeff(a, b);
    if (*bounds) return cmd_bounds(a, b);
    if (*export_cmd) return cmd_export(name, out_path);
    std::cout << app.help();
    return kInputError;
  } catch (const NodeVerificationError& e) {
    print_node_report(e.report(), std::cerr);
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what();
    if (!e.path().empty() && std::string(e.what()).find(e.path()) == std::string::npos) std::cerr << " (" << e.path() << ")";
    std::cerr << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
