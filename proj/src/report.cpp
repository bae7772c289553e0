#include "nodalhodge/report.hpp"

#include <iomanip>
#include <sstream>

namespace nodalhodge {

using nlohmann::json;

// ------------------------------------------------------------------ input

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json& field(const json& obj, const char* key, const std::string& path) {
  const std::string where = path.empty() ? "/" : path;
  if (!obj.is_object()) throw InputError(where + " must be an object", where);
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field \"" + std::string(key) + "\" in " + where, path + "/" + key);
  return *it;
}

int int_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer()) throw InputError(path + "/" + key + " must be an integer", path + "/" + key);
  return v.get<int>();
}

GaussRat gauss_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return GaussRat(v.get<long>());
  if (!v.is_string()) throw InputError(path + " must be a string such as \"1/2+1/3i\"", path);
  try {
    return GaussRat::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what() + " at offset " + std::to_string(e.position()), path);
  }
}

}  // namespace

json polynomial_to_json(const HomoPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", c.to_string()}, {"exp", e}});
  return {{"n_vars", p.n_vars()}, {"degree", p.degree()}, {"terms", terms}};
}

HomoPoly polynomial_from_json(const json& j, const std::string& path) {
  const int n_vars = int_field(j, "n_vars", path);
  const int degree = int_field(j, "degree", path);
  if (n_vars < 1) throw InputError(path + "/n_vars must be positive", path + "/n_vars");
  if (degree < 0) throw InputError(path + "/degree must be nonnegative", path + "/degree");
  const json& terms = field(j, "terms", path);
  if (!terms.is_array()) throw InputError(path + "/terms must be an array", path + "/terms");
  std::vector<std::pair<ExpVec, GaussRat>> parsed;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = path + "/terms/" + std::to_string(t);
    const json& ej = field(terms[t], "exp", tp);
    if (!ej.is_array() || ej.size() != static_cast<std::size_t>(n_vars)) {
      throw InputError(tp + "/exp must list " + std::to_string(n_vars) + " exponents", tp + "/exp");
    }
    ExpVec e;
    for (const auto& x : ej) {
      if (!x.is_number_integer() || x.get<int>() < 0) {
        throw InputError(tp + "/exp must hold nonnegative integers", tp + "/exp");
      }
      e.push_back(x.get<int>());
    }
    if (exp_degree(e) != degree) {
      throw InputError(tp + "/exp has degree " + std::to_string(exp_degree(e)) + ", expected " +
                           std::to_string(degree),
                       tp + "/exp");
    }
    parsed.emplace_back(std::move(e), gauss_value(field(terms[t], "coeff", tp), tp + "/coeff"));
  }
  return HomoPoly::from_terms(static_cast<std::size_t>(n_vars), degree, parsed);
}

json point_to_json(const ProjPoint& y) {
  json a = json::array();
  for (const auto& c : y.coords()) a.push_back(c.to_string());
  return a;
}

InputDocument parse_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col),
                     "", line, col);
  }
  InputDocument doc;
  doc.n = int_field(j, "n", "");
  doc.d = int_field(j, "d", "");
  doc.polynomial = polynomial_from_json(field(j, "polynomial", ""), "/polynomial");
  if (doc.polynomial.n_vars() != static_cast<std::size_t>(doc.n) + 1) {
    throw InputError("polynomial has " + std::to_string(doc.polynomial.n_vars()) + " variables but n = " +
                         std::to_string(doc.n),
                     "/polynomial/n_vars");
  }
  if (doc.polynomial.degree() != doc.d) {
    throw InputError("polynomial degree " + std::to_string(doc.polynomial.degree()) + " differs from d = " +
                         std::to_string(doc.d),
                     "/polynomial/degree");
  }
  const json& nodes = field(j, "nodes", "");
  if (!nodes.is_array()) throw InputError("/nodes must be an array", "/nodes");
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    const std::string np = "/nodes/" + std::to_string(a);
    if (!nodes[a].is_array() || nodes[a].size() != static_cast<std::size_t>(doc.n) + 1) {
      throw InputError(np + " must list " + std::to_string(doc.n + 1) + " coordinates", np);
    }
    std::vector<GaussRat> c;
    for (std::size_t t = 0; t < nodes[a].size(); ++t) c.push_back(gauss_value(nodes[a][t], np + "/" + std::to_string(t)));
    try {
      doc.nodes.emplace_back(std::move(c));
    } catch (const std::invalid_argument& e) {
      throw InputError(np + ": " + e.what(), np);
    }
  }
  return doc;
}

json input_to_json(const Hypersurface& h) {
  json nodes = json::array();
  for (const auto& y : h.nodes().points()) nodes.push_back(point_to_json(y));
  return {{"n", h.n()}, {"d", h.d()}, {"polynomial", polynomial_to_json(h.f())}, {"nodes", nodes}};
}

Hypersurface to_hypersurface(const InputDocument& doc) { return Hypersurface(doc.polynomial, doc.nodes); }

// ---------------------------------------------------------------- reports

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

void to_json(json& j, const ConditionAPair& v) {
  j = {{"k", v.k}, {"i", v.i}, {"M", v.M}, {"N", v.N}, {"rank", v.rank}, {"surjective", v.surjective}};
}
void from_json(const json& j, ConditionAPair& v) {
  j.at("k").get_to(v.k);
  j.at("i").get_to(v.i);
  j.at("M").get_to(v.M);
  j.at("N").get_to(v.N);
  j.at("rank").get_to(v.rank);
  j.at("surjective").get_to(v.surjective);
}

void to_json(json& j, const ConditionAReport& v) {
  j = {{"q", v.q}, {"pairs", {v.pairs[0], v.pairs[1]}}, {"overall", v.overall}};
}
void from_json(const json& j, ConditionAReport& v) {
  j.at("q").get_to(v.q);
  j.at("pairs").at(0).get_to(v.pairs[0]);
  j.at("pairs").at(1).get_to(v.pairs[1]);
  j.at("overall").get_to(v.overall);
}

void to_json(json& j, const ConditionBReport& v) {
  j = {{"p", v.p},
       {"e", v.e},
       {"veronese_cols", v.veronese_cols},
       {"node_count", v.node_count},
       {"rank", v.rank},
       {"count_ok", v.count_ok},
       {"independent", v.independent}};
}
void from_json(const json& j, ConditionBReport& v) {
  j.at("p").get_to(v.p);
  j.at("e").get_to(v.e);
  j.at("veronese_cols").get_to(v.veronese_cols);
  j.at("node_count").get_to(v.node_count);
  j.at("rank").get_to(v.rank);
  j.at("count_ok").get_to(v.count_ok);
  j.at("independent").get_to(v.independent);
}

void to_json(json& j, const Theorem2Dims& v) {
  j = {{"q", v.q},
       {"k", v.k},
       {"a", v.a},
       {"symbolic_next", v.symbolic_next},
       {"symbolic_times_j", v.symbolic_times_j},
       {"symbolic_next2", v.symbolic_next2},
       {"intersection", v.intersection},
       {"line1_dim", v.line1_dim},
       {"line2_dim", v.line2_dim},
       {"lines_agree", v.lines_agree},
       {"condition_a", v.condition_a}};
}
void from_json(const json& j, Theorem2Dims& v) {
  j.at("q").get_to(v.q);
  j.at("k").get_to(v.k);
  j.at("a").get_to(v.a);
  j.at("symbolic_next").get_to(v.symbolic_next);
  j.at("symbolic_times_j").get_to(v.symbolic_times_j);
  j.at("symbolic_next2").get_to(v.symbolic_next2);
  j.at("intersection").get_to(v.intersection);
  j.at("line1_dim").get_to(v.line1_dim);
  j.at("line2_dim").get_to(v.line2_dim);
  j.at("lines_agree").get_to(v.lines_agree);
  j.at("condition_a").get_to(v.condition_a);
}

void to_json(json& j, const Conjecture1Dims& v) {
  j = {{"q", v.q}, {"k", v.k}, {"numerator", v.numerator}, {"denominator", v.denominator}, {"dim", v.dim}};
}
void from_json(const json& j, Conjecture1Dims& v) {
  j.at("q").get_to(v.q);
  j.at("k").get_to(v.k);
  j.at("numerator").get_to(v.numerator);
  j.at("denominator").get_to(v.denominator);
  j.at("dim").get_to(v.dim);
}

void to_json(json& j, const NodeBounds& v) {
  j = {{"n", v.n},
       {"d", v.d},
       {"varchenko_rhs", v.varchenko_rhs},
       {"varchenko_sum", v.varchenko_sum},
       {"sum_matches_rhs", v.sum_matches_rhs}};
  put_optional(j, "odd_bound", v.odd_bound);
}
void from_json(const json& j, NodeBounds& v) {
  j.at("n").get_to(v.n);
  j.at("d").get_to(v.d);
  j.at("varchenko_rhs").get_to(v.varchenko_rhs);
  j.at("varchenko_sum").get_to(v.varchenko_sum);
  j.at("sum_matches_rhs").get_to(v.sum_matches_rhs);
  v.odd_bound = get_optional<unsigned long long>(j, "odd_bound");
}

void to_json(json& j, const PieceDim& v) {
  j = {{"label", v.label}, {"dim", v.dim}, {"ambient", v.ambient}, {"op", v.op}};
}
void from_json(const json& j, PieceDim& v) {
  j.at("label").get_to(v.label);
  j.at("dim").get_to(v.dim);
  j.at("ambient").get_to(v.ambient);
  j.at("op").get_to(v.op);
}

void to_json(json& j, const QRecord& v) {
  j = {{"q", v.q}, {"p", v.p}, {"k", v.k}, {"regime", v.regime}, {"pieces", v.pieces}, {"smooth_dim", v.smooth_dim}};
  put_optional(j, "grf_dim_low_q", v.low_q_dim);
  put_optional(j, "theorem2_dims", v.theorem2);
  put_optional(j, "conjecture1", v.conjecture1);
  put_optional(j, "check_condition_B", v.condition_b);
  put_optional(j, "powers_agree", v.powers_agree);
}
void from_json(const json& j, QRecord& v) {
  j.at("q").get_to(v.q);
  j.at("p").get_to(v.p);
  j.at("k").get_to(v.k);
  j.at("regime").get_to(v.regime);
  j.at("pieces").get_to(v.pieces);
  j.at("smooth_dim").get_to(v.smooth_dim);
  v.low_q_dim = get_optional<std::size_t>(j, "grf_dim_low_q");
  v.theorem2 = get_optional<Theorem2Dims>(j, "theorem2_dims");
  v.conjecture1 = get_optional<Conjecture1Dims>(j, "conjecture1");
  v.condition_b = get_optional<ConditionBReport>(j, "check_condition_B");
  v.powers_agree = get_optional<bool>(j, "powers_agree");
}

namespace {

PieceDim piece_dim(const GradedPiece& g, std::string op) {
  return PieceDim{g.label, g.dim(), g.ambient_dim(), std::move(op)};
}

std::string op_name(const char* fn, int i, int k) {
  return std::string(fn) + "(i=" + std::to_string(i) + ",k=" + std::to_string(k) + ")";
}

std::string op_name(const char* fn, int k) { return std::string(fn) + "(k=" + std::to_string(k) + ")"; }

}  // namespace

AnalysisReport analyze(const Hypersurface& h, const std::string& source, const std::vector<int>& qs) {
  AnalysisReport r;
  r.source = source;
  r.n = h.n();
  r.d = h.d();
  r.m = h.m();
  r.node_count = h.nodes().size();
  r.polynomial = h.f().to_string();
  for (const auto& y : h.nodes().points()) r.nodes.push_back(y.to_string());
  r.bounds = node_bounds(h.n(), h.d());
  IdealEngine& eng = h.engine();
  for (int q : qs) {
    if (q < 0 || q > h.n()) {
      throw std::invalid_argument("q = " + std::to_string(q) + " outside 0..n = " + std::to_string(h.n()));
    }
    QRecord rec;
    rec.q = q;
    rec.p = h.n() - q;
    rec.k = target_degree(h.n(), h.d(), q);
    rec.smooth_dim = c_coeff(h.n() + 1, h.d(), (q + 1) * h.d());
    const int k = rec.k;
    if (h.smooth() || q <= h.m()) {
      rec.regime = "low";
      rec.low_q_dim = grf_dim_low_q(h, q);
      if (k >= 0) {
        rec.pieces.push_back(piece_dim(eng.ring(k), op_name("ring_piece", k)));
        rec.pieces.push_back(piece_dim(eng.jacobian(k), op_name("jacobian_piece", k)));
        if (!h.smooth() && q == h.m()) rec.pieces.push_back(piece_dim(eng.symbolic(1, k), op_name("symbolic_piece", 1, k)));
      }
    } else {
      rec.regime = "theorem2";
      rec.theorem2 = theorem2_dims(h, q);
      rec.conjecture1 = conjecture1(h, q);
      rec.condition_b = check_condition_B(h, rec.p);
      const int a = q - h.m();
      rec.pieces.push_back(piece_dim(eng.symbolic(a + 1, k), op_name("symbolic_piece", a + 1, k)));
      rec.pieces.push_back(piece_dim(eng.symbolic_times_jacobian(a, k), op_name("ideal_times_jacobian_piece", a, k)));
      rec.pieces.push_back(piece_dim(eng.symbolic(a + 2, k), op_name("symbolic_piece", a + 2, k)));
      rec.pieces.push_back(piece_dim(eng.ordinary(a + 1, k), op_name("ordinary_power_piece", a + 1, k)));
      rec.pieces.push_back(piece_dim(eng.ordinary_times_jacobian(a, k), op_name("ordinary_times_jacobian", a, k)));
      rec.powers_agree = eng.ordinary(a + 1, k).space == eng.symbolic(a + 1, k).space;
    }
    r.records.push_back(std::move(rec));
  }
  return r;
}

json to_json(const AnalysisReport& r) {
  return {{"hypersurface",
           {{"source", r.source},
            {"n", r.n},
            {"d", r.d},
            {"m", r.m},
            {"node_count", r.node_count},
            {"polynomial", r.polynomial},
            {"nodes", r.nodes}}},
          {"node_bounds", r.bounds},
          {"records", r.records}};
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  const json& h = j.at("hypersurface");
  h.at("source").get_to(r.source);
  h.at("n").get_to(r.n);
  h.at("d").get_to(r.d);
  h.at("m").get_to(r.m);
  h.at("node_count").get_to(r.node_count);
  h.at("polynomial").get_to(r.polynomial);
  h.at("nodes").get_to(r.nodes);
  j.at("node_bounds").get_to(r.bounds);
  j.at("records").get_to(r.records);
  return r;
}

std::string emit(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

std::string format_table(const AnalysisReport& r) {
  std::ostringstream os;
  os << "source  " << r.source << "\n";
  os << "f       " << r.polynomial << "\n";
  os << "n=" << r.n << " d=" << r.d << " m=" << r.m << " nodes=" << r.node_count << "\n";
  os << "bounds  varchenko_rhs=" << r.bounds.varchenko_rhs << " varchenko_sum=" << r.bounds.varchenko_sum
     << (r.bounds.sum_matches_rhs ? "" : " (mismatch)");
  if (r.bounds.odd_bound) os << " odd_bound=" << *r.bounds.odd_bound;
  os << "\n";
  if (r.records.empty()) return os.str();
  os << "\n"
     << std::left << std::setw(4) << "q" << std::setw(4) << "p" << std::setw(5) << "k" << std::setw(10) << "regime"
     << std::setw(7) << "dim" << std::setw(8) << "smooth" << "details\n";
  for (const auto& rec : r.records) {
    os << std::left << std::setw(4) << rec.q << std::setw(4) << rec.p << std::setw(5) << rec.k << std::setw(10)
       << rec.regime;
    if (rec.low_q_dim) {
      os << std::setw(7) << *rec.low_q_dim << std::setw(8) << rec.smooth_dim << "\n";
    } else if (rec.theorem2) {
      const auto& t = *rec.theorem2;
      os << std::setw(7) << t.line1_dim << std::setw(8) << rec.smooth_dim << "line2=" << t.line2_dim
         << " conj1=" << rec.conjecture1->dim << " condA=" << (t.condition_a.overall ? "yes" : "no");
      for (const auto& pr : t.condition_a.pairs) os << " (M,N)=(" << pr.M << "," << pr.N << ") rank=" << pr.rank;
      os << " condB=" << (rec.condition_b->independent ? "yes" : "no") << " e=" << rec.condition_b->e
         << " powers_agree=" << (*rec.powers_agree ? "yes" : "no") << "\n";
    }
    for (const auto& pc : rec.pieces) {
      os << "      " << std::setw(16) << pc.label << std::right << std::setw(7) << pc.dim << " / " << std::left
         << std::setw(7) << pc.ambient << pc.op << "\n";
    }
  }
  return os.str();
}

}  // namespace nodalhodge
