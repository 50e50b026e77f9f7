#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "pgk/report.hpp"

using namespace pgk;

namespace {

struct ParsedDot {
  std::size_t vertices = 0, edges = 0;
};

// Boost's Graphviz reader serves as the DOT grammar checker.
template <class Directed> ParsedDot parse_dot(const std::string &text) {
  using B = boost::adjacency_list<boost::vecS, boost::vecS, Directed, boost::property<boost::vertex_name_t, std::string>>;
  B b;
  boost::dynamic_properties dp(boost::ignore_other_properties);
  dp.property("node_id", get(boost::vertex_name, b));
  if (!boost::read_graphviz(text, b, dp)) throw std::runtime_error("read_graphviz rejected the input");
  return {num_vertices(b), num_edges(b)};
}

// RFC 4180 reader: CRLF records, quoted fields with doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, was_quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      if (!field.empty() || was_quoted) throw std::runtime_error("stray quote");
      quoted = was_quoted = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      was_quoted = false;
    } else if (c == '\r') {
      if (i + 1 >= text.size() || text[i + 1] != '\n') throw std::runtime_error("bare CR");
      row.push_back(field);
      rows.push_back(row);
      row.clear();
      field.clear();
      was_quoted = false;
      ++i;
    } else if (c == '\n') {
      throw std::runtime_error("bare LF");
    } else {
      field += c;
    }
  }
  if (quoted || !row.empty() || !field.empty()) throw std::runtime_error("unterminated record");
  return rows;
}

Json analyze(const FiniteGroup &g, const Limits &lim = {}) {
  auto pg = build_power_graph(g);
  auto inv = invariant_report(g, pg, build_directed_power_graph(g), lim);
  return analysis_json(g, inv, structure_report(pg.graph, lim));
}

} // namespace

TEST(Csv, QuotingRoundTrips) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::vector<std::string> fields{"", "x", "a,b", "q\"q", "line\nbreak", "cr\r\nlf", " spaced "};
  auto rows = parse_csv(csv_row(fields) + csv_row({"1", "2"}));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], fields);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"1", "2"}));
}

TEST(Csv, AnalysisRowsMatchHeader) {
  for (const char *s : {"zn:1", "zn:18", "prod:2x2", "un:45", "qn:41"}) {
    auto g = build_group(s);
    auto pg = build_power_graph(g);
    auto inv = invariant_report(g, pg, build_directed_power_graph(g));
    auto rows = parse_csv(analysis_csv(g, inv, structure_report(pg.graph)));
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].size(), rows[1].size());
    EXPECT_EQ(rows[0][0], "group");
    EXPECT_EQ(rows[1][0], s);
  }
}

TEST(Json, AnalysisReparsesAndIsStable) {
  for (const char *s : {"zn:1", "zn:2", "zn:36", "prod:2x4", "un:60", "qn:91"}) {
    auto g = build_group(s);
    Json a = analyze(g);
    std::string text = a.dump(2);
    EXPECT_EQ(Json::parse(text), a);
    EXPECT_EQ(analyze(g).dump(2), text);
    for (const char *key : {"group", "order", "cyclic", "abelian", "edges", "cyclic_classes", "invariants", "structure"})
      EXPECT_TRUE(a.contains(key)) << key;
    EXPECT_EQ(a["group"], s);
  }
}

TEST(Json, ListedAnalyses) {
  Json z18 = analyze(build_group("zn:18"));
  EXPECT_EQ(z18["invariants"]["chromatic_number"], 15);
  EXPECT_EQ(z18["invariants"]["clique_number"], 15);
  EXPECT_EQ(z18["invariants"]["radius"], 1);
  EXPECT_EQ(z18["invariants"]["psi"], 15);
  Json z9 = analyze(build_group("zn:9"));
  EXPECT_EQ(z9["invariants"]["complete"], true);
  EXPECT_EQ(z9["structure"]["planar"], false);
  Json big = analyze(build_group("prod:12x12"));
  ASSERT_TRUE(big["structure"]["holes"].contains("hole_length_8"));
  EXPECT_EQ(big["structure"]["holes"]["hole_length_8"]["witness"].size(), 8u);
}

TEST(Json, ExhaustedBudgetsShowAsUnknown) {
  Limits lim;
  lim.clique_nodes = 3;
  Json a = analyze(build_group("zn:60"), lim);
  EXPECT_EQ(a["invariants"]["clique_number"], "unknown");
  EXPECT_EQ(a["invariants"]["chromatic_number"], "unknown");
  EXPECT_EQ(a["invariants"]["clique_equals_chromatic"], "unknown");
}

TEST(Dot, GrammarAndCounts) {
  for (const char *s : {"zn:1", "zn:6", "zn:18", "prod:2x2", "prod:3x3", "un:45", "qn:41"}) {
    auto g = build_group(s);
    auto pg = build_power_graph(g);
    auto dg = build_directed_power_graph(g);
    CyclicClassGraph cg(g);
    auto p = parse_dot<boost::undirectedS>(dot_power_graph(g, pg));
    EXPECT_EQ(p.vertices, g.order());
    EXPECT_EQ(p.edges, pg.graph.edge_count());
    auto d = parse_dot<boost::directedS>(dot_directed_power_graph(g, dg));
    EXPECT_EQ(d.vertices, g.order());
    EXPECT_EQ(d.edges, dg.graph.arc_count());
    auto c = parse_dot<boost::directedS>(dot_class_graph(g, cg, false));
    EXPECT_EQ(c.vertices, cg.size());
    EXPECT_EQ(c.edges, cg.containment().arc_count());
    auto h = parse_dot<boost::directedS>(dot_class_graph(g, cg, true));
    EXPECT_EQ(h.edges, cg.hasse().arc_count());
  }
  EXPECT_THROW(parse_dot<boost::directedS>("digraph { a -> ; }"), std::exception);
}

TEST(Dot, ListedExports) {
  auto z18 = build_group("zn:18");
  std::string hasse = dot_class_graph(z18, CyclicClassGraph(z18), true);
  EXPECT_EQ(parse_dot<boost::directedS>(hasse).vertices, 6u);
  for (const char *w : {"Z_18(6)", "Z_9(6)", "Z_6(2)", "Z_3(2)", "Z_2(1)", "Z_1(1)"})
    EXPECT_NE(hasse.find(w), std::string::npos) << w;

  auto z6 = build_group("zn:6");
  std::string dpg = dot_directed_power_graph(z6, build_directed_power_graph(z6));
  EXPECT_NE(dpg.find("  1 -> 5;"), std::string::npos);
  EXPECT_NE(dpg.find("  5 -> 1;"), std::string::npos);

  auto z1 = build_group("zn:1");
  EXPECT_EQ(parse_dot<boost::undirectedS>(dot_power_graph(z1, build_power_graph(z1))).vertices, 1u);
}

TEST(Dot, HighlightAndQuoting) {
  auto z6 = build_group("zn:6");
  std::string dot = dot_power_graph(z6, build_power_graph(z6), {1, 5, 2, 4, 0, 3});
  std::size_t marked = 0;
  for (std::size_t at = dot.find("color=red"); at != std::string::npos; at = dot.find("color=red", at + 1)) ++marked;
  EXPECT_EQ(marked, 6u);
  EXPECT_EQ(dot_quote("a\"b\\c"), "\"a\\\"b\\\\c\"");
}
