#include "nodalhodge/catalog.hpp"
#include "nodalhodge/report.hpp"

#include <gtest/gtest.h>

using namespace nodalhodge;
using nlohmann::json;

namespace {

const char* kQuarticDoc = R"({
  "n": 3,
  "d": 4,
  "polynomial": {"n_vars": 4, "degree": 4, "terms": [
    {"coeff": "1", "exp": [4,0,0,0]},
    {"coeff": "1", "exp": [0,4,0,0]},
    {"coeff": "1", "exp": [0,0,4,0]},
    {"coeff": "1", "exp": [0,0,0,4]}
  ]},
  "nodes": []
})";

template <class F>
InputError capture(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e;
  }
  ADD_FAILURE() << "no InputError thrown";
  return InputError("", "");
}

}  // namespace

TEST(Report, KummerAnalysisRoundTrips) {
  const CatalogEntry e = catalog("kummer");
  const AnalysisReport r = analyze(e.hypersurface, "catalog:kummer", {0, 1, 2, 3});
  ASSERT_EQ(r.records.size(), 4u);
  const QRecord& q2 = r.records[2];
  EXPECT_EQ(q2.regime, "theorem2");
  ASSERT_TRUE(q2.theorem2.has_value());
  EXPECT_EQ(q2.theorem2->line1_dim, 1u);
  EXPECT_FALSE(q2.theorem2->condition_a.overall);

  const std::string text = emit(r);
  EXPECT_EQ(report_from_json(json::parse(text)), r);
  EXPECT_EQ(emit(report_from_json(json::parse(text))), text);

  const json j = json::parse(text);
  EXPECT_EQ(j["records"][2]["theorem2_dims"]["line1_dim"], 1);
  EXPECT_EQ(j["records"][2]["theorem2_dims"]["condition_a"]["overall"], false);
}

TEST(Report, EmitIsDeterministic) {
  const std::string a = emit(analyze(catalog("ex47i").hypersurface, "catalog:ex47i", {1, 2}));
  const std::string b = emit(analyze(catalog("ex47i").hypersurface, "catalog:ex47i", {1, 2}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
}

TEST(Report, SmoothFermatLowQ) {
  const AnalysisReport r = analyze(catalog("fermat-3-4").hypersurface, "catalog:fermat-3-4", {1});
  ASSERT_EQ(r.records.size(), 1u);
  ASSERT_TRUE(r.records[0].low_q_dim.has_value());
  EXPECT_EQ(*r.records[0].low_q_dim, 19u);
  EXPECT_EQ(r.records[0].smooth_dim, 19u);
}

TEST(Report, EmptyQRangeHasMetadataOnly) {
  const AnalysisReport r = analyze(catalog("kummer").hypersurface, "catalog:kummer", {});
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.node_count, 16u);
  EXPECT_EQ(report_from_json(to_json(r)), r);
}

TEST(Report, QOutOfRangeRejected) {
  EXPECT_THROW(analyze(catalog("kummer").hypersurface, "k", {4}), std::invalid_argument);
}

TEST(Report, ExportParsesBack) {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog(name);
    const InputDocument doc = parse_input(input_to_json(e.hypersurface).dump());
    EXPECT_EQ(doc.n, e.hypersurface.n());
    EXPECT_EQ(doc.d, e.hypersurface.d());
    EXPECT_EQ(doc.polynomial, e.hypersurface.f()) << name;
    EXPECT_EQ(doc.nodes, e.hypersurface.nodes().points()) << name;
    EXPECT_EQ(to_hypersurface(doc).nodes().size(), e.expected_nodes) << name;
  }
}

TEST(Report, ParsesPlainDocument) {
  const InputDocument doc = parse_input(kQuarticDoc);
  EXPECT_EQ(doc.n, 3);
  EXPECT_EQ(doc.polynomial.terms().size(), 4u);
  EXPECT_TRUE(doc.nodes.empty());
}

TEST(Report, SyntaxErrorCarriesPosition) {
  const InputError e = capture([] { parse_input("{\n  \"n\": 3,\n  \"d\": ,\n}"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_GT(e.column(), 0u);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
}

TEST(Report, ValueErrorsCarryPath) {
  std::string bad = kQuarticDoc;
  bad.replace(bad.find("\"coeff\": \"1\""), 12, "\"coeff\": \"1/0\"");
  EXPECT_EQ(capture([&] { parse_input(bad); }).path(), "/polynomial/terms/0/coeff");

  std::string wrong_degree = kQuarticDoc;
  wrong_degree.replace(wrong_degree.find("[4,0,0,0]"), 9, "[3,0,0,0]");
  EXPECT_EQ(capture([&] { parse_input(wrong_degree); }).path(), "/polynomial/terms/0/exp");

  std::string d_mismatch = kQuarticDoc;
  d_mismatch.replace(d_mismatch.find("\"d\": 4"), 6, "\"d\": 5");
  EXPECT_EQ(capture([&] { parse_input(d_mismatch); }).path(), "/polynomial/degree");

  std::string short_node = kQuarticDoc;
  short_node.replace(short_node.find("\"nodes\": []"), 11, "\"nodes\": [[\"1\",\"0\",\"0\"]]");
  EXPECT_EQ(capture([&] { parse_input(short_node); }).path(), "/nodes/0");

  std::string zero_node = kQuarticDoc;
  zero_node.replace(zero_node.find("\"nodes\": []"), 11, "\"nodes\": [[\"0\",\"0\",\"0\",\"0\"]]");
  EXPECT_EQ(capture([&] { parse_input(zero_node); }).path(), "/nodes/0");

  EXPECT_EQ(capture([] { parse_input(R"({"d": 4})"); }).path(), "/n");
}

TEST(Report, NonNodeFailsVerification) {
  std::string doc = kQuarticDoc;
  doc.replace(doc.find("\"nodes\": []"), 11, "\"nodes\": [[\"1\",\"0\",\"0\",\"0\"]]");
  EXPECT_THROW(to_hypersurface(parse_input(doc)), NodeVerificationError);
}

TEST(Report, TableMentionsEveryQ) {
  const std::string t = format_table(analyze(catalog("kummer").hypersurface, "catalog:kummer", {1, 2}));
  EXPECT_NE(t.find("catalog:kummer"), std::string::npos);
  EXPECT_NE(t.find("theorem2"), std::string::npos);
}
