#ifndef PGK_REPORT_HPP
#define PGK_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pgk/budget.hpp"
#include "pgk/clique.hpp"
#include "pgk/groups.hpp"
#include "pgk/invariants.hpp"
#include "pgk/numtheory.hpp"
#include "pgk/powergraph.hpp"
#include "pgk/structure.hpp"

namespace pgk {

using Json = nlohmann::ordered_json;

inline Json labels(const FiniteGroup &g, const std::vector<Vertex> &vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(g.label(v));
  return a;
}

inline Json tri_json(Tri t) {
  if (t == Tri::unknown) return "unknown";
  return t == Tri::yes;
}

template <class T> Json optional_json(const std::optional<T> &v) {
  if (!v) return "unknown";
  return *v;
}

struct InvariantReport {
  std::string spec;
  std::size_t order = 0;
  std::size_t edges = 0;
  std::size_t classes = 0;
  bool cyclic = false;
  bool abelian = false;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::vector<Vertex> center;
  std::optional<std::size_t> omega;
  std::vector<Vertex> max_clique;
  std::optional<std::size_t> chi;
  std::optional<std::size_t> alpha;
  std::vector<Vertex> max_independent;
  std::optional<u64> psi;      // cyclic groups only
  std::size_t max_element_psi = 0; // max over elements of psi(order)
  std::optional<std::size_t> longest_path;
  std::vector<Vertex> longest_path_witness;
  std::string longest_path_method; // "exhaustive" or "clique"
  bool complete = false;
  bool connected = false;
  Tri perfect_equality = Tri::unknown; // omega == chi
};

inline InvariantReport invariant_report(const FiniteGroup &g, const PowerGraph &pg, const DirectedPowerGraph &dg,
                                        const Limits &lim = {}) {
  InvariantReport r;
  const Graph &G = pg.graph;
  r.spec = g.name();
  r.order = g.order();
  r.edges = G.edge_count();
  r.classes = g.cyclic_class_count();
  r.cyclic = g.is_cyclic();
  r.abelian = g.is_abelian();
  r.connected = is_connected(G);
  auto ecc = power_graph_eccentricities(pg);
  r.radius = ecc.radius;
  r.diameter = ecc.diameter;
  r.center = ecc.center;
  r.complete = is_complete(G);
  r.max_element_psi = general_group_clique_number(g);
  if (r.cyclic) r.psi = nt::psi(g.order());

  try {
    r.max_clique = max_clique(G, lim.clique_nodes);
    r.omega = r.max_clique.size();
  } catch (const BudgetExhausted &) {
  }
  try {
    r.chi = chromatic_number(G, lim.clique_nodes).colours;
  } catch (const BudgetExhausted &) {
  }
  try {
    r.max_independent = max_independent_set(G, lim.clique_nodes);
    r.alpha = r.max_independent.size();
  } catch (const BudgetExhausted &) {
  }
  if (g.order() <= lim.path_bruteforce_cap) {
    r.longest_path_witness = longest_directed_path_bruteforce(dg.graph, lim.path_bruteforce_cap);
    r.longest_path = r.longest_path_witness.size();
    r.longest_path_method = "exhaustive";
  } else if (r.omega) {
    r.longest_path_witness = clique_to_directed_path(dg.graph, r.max_clique);
    r.longest_path = r.longest_path_witness.size();
    r.longest_path_method = "clique";
  }
  if (r.omega && r.chi) r.perfect_equality = (*r.omega == *r.chi) ? Tri::yes : Tri::no;

  if (r.order > 1 && (r.radius > r.diameter || r.diameter > 2 * r.radius))
    throw InternalError("invariant_report: radius/diameter relation violated");
  if (r.omega && r.chi && *r.omega > *r.chi) throw InternalError("invariant_report: clique number exceeds chromatic number");
  if (r.omega && r.complete != (*r.omega == r.order)) throw InternalError("invariant_report: completeness disagrees with clique number");
  return r;
}

inline Json to_json(const FiniteGroup &g, const InvariantReport &r) {
  Json j;
  j["radius"] = r.radius;
  j["diameter"] = r.diameter;
  j["center"] = labels(g, r.center);
  j["center_size"] = r.center.size();
  j["clique_number"] = optional_json(r.omega);
  j["max_clique"] = labels(g, r.max_clique);
  j["chromatic_number"] = optional_json(r.chi);
  j["independence_number"] = optional_json(r.alpha);
  j["max_independent_set"] = labels(g, r.max_independent);
  j["psi"] = r.psi ? Json(*r.psi) : Json(nullptr);
  j["max_element_psi"] = r.max_element_psi;
  j["longest_directed_path"] = optional_json(r.longest_path);
  j["longest_directed_path_method"] = r.longest_path_method.empty() ? Json(nullptr) : Json(r.longest_path_method);
  j["longest_directed_path_witness"] = labels(g, r.longest_path_witness);
  j["complete"] = r.complete;
  j["connected"] = r.connected;
  j["clique_equals_chromatic"] = tri_json(r.perfect_equality);
  return j;
}

inline Json hole_json(const FiniteGroup &g, const std::optional<Hole> &h) {
  if (!h) return nullptr;
  return labels(g, *h);
}

inline Json to_json(const FiniteGroup &g, const StructureReport &r) {
  Json j;
  j["chordal"] = r.chordal;
  j["simplicial"] = labels(g, r.simplicial);
  j["simplicial_count"] = r.simplicial.size();
  j["claw_free"] = r.claw.claw_free;
  j["claw"] = r.claw.claw ? labels(g, std::vector<Vertex>(r.claw.claw->begin(), r.claw.claw->end())) : Json(nullptr);
  j["hamiltonian"] = tri_json(r.hamiltonian.status);
  j["hamiltonian_cycle"] = r.hamiltonian.status == Tri::yes ? labels(g, r.hamiltonian.cycle) : Json(nullptr);
  j["planar"] = r.planar;
  j["complete"] = r.complete;
  j["perfect"] = tri_json(r.perfect);
  j["odd_hole"] = r.has_odd_hole == Tri::unknown ? Json("unknown") : hole_json(g, r.odd_hole);
  j["anti_hole"] = r.has_anti_hole == Tri::unknown ? Json("unknown") : hole_json(g, r.anti_hole);
  j["shortest_even_hole"] = hole_json(g, r.shortest_even_hole);
  Json holes;
  holes["exhaustive"] = r.holes.exhaustive;
  for (const auto &[len, info] : r.holes.by_length) {
    Json h;
    h["count"] = info.count;
    h["witness"] = labels(g, info.witness);
    holes["hole_length_" + std::to_string(len)] = h;
  }
  j["holes"] = holes;
  return j;
}

inline Json analysis_json(const FiniteGroup &g, const InvariantReport &inv, const StructureReport &st) {
  Json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["cyclic"] = g.is_cyclic();
  j["abelian"] = g.is_abelian();
  j["edges"] = inv.edges;
  j["cyclic_classes"] = inv.classes;
  j["invariants"] = to_json(g, inv);
  j["structure"] = to_json(g, st);
  return j;
}

// RFC 4180 field quoting.
inline std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string> &fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

inline std::string json_scalar_text(const Json &j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

inline std::string analysis_csv(const FiniteGroup &g, const InvariantReport &inv, const StructureReport &st) {
  Json a = analysis_json(g, inv, st);
  const Json &i = a["invariants"], &s = a["structure"];
  std::string even_len;
  if (st.shortest_even_hole) even_len = std::to_string(st.shortest_even_hole->size());
  std::string out = csv_row({"group", "order", "edges", "radius", "diameter", "center_size", "clique_number",
                             "chromatic_number", "independence_number", "psi", "longest_directed_path", "complete",
                             "connected", "chordal", "claw_free", "hamiltonian", "planar", "perfect",
                             "simplicial_count", "shortest_even_hole_length"});
  out += csv_row({g.name(), std::to_string(g.order()), std::to_string(inv.edges), json_scalar_text(i["radius"]),
                  json_scalar_text(i["diameter"]), json_scalar_text(i["center_size"]),
                  json_scalar_text(i["clique_number"]), json_scalar_text(i["chromatic_number"]),
                  json_scalar_text(i["independence_number"]), json_scalar_text(i["psi"]),
                  json_scalar_text(i["longest_directed_path"]), json_scalar_text(i["complete"]),
                  json_scalar_text(i["connected"]), json_scalar_text(s["chordal"]), json_scalar_text(s["claw_free"]),
                  json_scalar_text(s["hamiltonian"]), json_scalar_text(s["planar"]), json_scalar_text(s["perfect"]),
                  json_scalar_text(s["simplicial_count"]), even_len});
  return out;
}

inline std::string analysis_text(const FiniteGroup &g, const InvariantReport &inv, const StructureReport &st) {
  Json a = analysis_json(g, inv, st);
  std::ostringstream os;
  os << g.name() << ": order " << g.order() << ", " << inv.edges << " edges, " << inv.classes << " cyclic classes"
     << (g.is_cyclic() ? ", cyclic" : "") << "\n";
  for (const auto &[k, v] : a["invariants"].items())
    if (!v.is_array()) os << "  " << k << ": " << json_scalar_text(v) << "\n";
  for (const auto &[k, v] : a["structure"].items()) {
    if (k == "holes") {
      for (const auto &[hk, hv] : v.items()) {
        if (hk == "exhaustive")
          os << "  holes exhaustive: " << hv.dump() << "\n";
        else
          os << "  " << hk << ": " << hv["count"].dump() << " (e.g. " << hv["witness"].dump() << ")\n";
      }
    } else if (!v.is_array() || k == "claw" || k == "odd_hole" || k == "anti_hole" || k == "shortest_even_hole") {
      os << "  " << k << ": " << (v.is_array() ? v.dump() : json_scalar_text(v)) << "\n";
    }
  }
  return os.str();
}

// ---- DOT ----

inline std::string dot_quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string dot_power_graph(const FiniteGroup &g, const PowerGraph &pg,
                                   const std::vector<Vertex> &highlight_cycle = {}) {
  const Graph &G = pg.graph;
  std::vector<std::pair<Vertex, Vertex>> marked;
  for (std::size_t i = 0; i < highlight_cycle.size() && highlight_cycle.size() > 1; ++i) {
    Vertex a = highlight_cycle[i], b = highlight_cycle[(i + 1) % highlight_cycle.size()];
    marked.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(marked.begin(), marked.end());
  std::ostringstream os;
  os << "graph pg {\n  label=" << dot_quote("power graph of " + g.name()) << ";\n  node [shape=circle];\n";
  for (Vertex v = 0; v < G.order(); ++v) os << "  " << v << " [label=" << dot_quote(g.label(v)) << "];\n";
  for (auto [a, b] : G.edges()) {
    os << "  " << a << " -- " << b;
    if (std::binary_search(marked.begin(), marked.end(), std::make_pair(a, b))) os << " [color=red, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string dot_directed_power_graph(const FiniteGroup &g, const DirectedPowerGraph &dg) {
  std::ostringstream os;
  os << "digraph dpg {\n  label=" << dot_quote("directed power graph of " + g.name())
     << ";\n  node [shape=circle];\n";
  for (Vertex v = 0; v < dg.graph.order(); ++v) os << "  " << v << " [label=" << dot_quote(g.label(v)) << "];\n";
  for (Vertex v = 0; v < dg.graph.order(); ++v)
    dg.graph.out_neighbors(v).for_each([&](Vertex w) { os << "  " << v << " -> " << w << ";\n"; });
  os << "}\n";
  return os.str();
}

// C(G) oriented by containment (every proper inclusion is an arc), or only
// its covering arcs.
inline std::string dot_class_graph(const FiniteGroup &g, const CyclicClassGraph &cg, bool hasse) {
  const Digraph &d = hasse ? cg.hasse() : cg.containment();
  std::ostringstream os;
  os << "digraph cg {\n  label=" << dot_quote("cyclic subgroup graph of " + g.name())
     << ";\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < cg.size(); ++i) os << "  c" << i << " [label=" << dot_quote(class_label(cg.at(i))) << "];\n";
  for (Vertex a = 0; a < cg.size(); ++a)
    d.out_neighbors(a).for_each([&](Vertex b) { os << "  c" << a << " -> c" << b << ";\n"; });
  os << "}\n";
  return os.str();
}

} // namespace pgk

#endif
