#ifndef PGK_POWERGRAPH_HPP
#define PGK_POWERGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pgk/graph.hpp"
#include "pgk/groups.hpp"

namespace pgk {

// Undirected power graph: x ~ y iff x != y and one of <x>, <y> contains the other.
struct PowerGraph {
  Graph graph;
  std::uint64_t source_id = 0;
};

// Directed power graph: arc (x, y) iff x != y and y is a power of x.
struct DirectedPowerGraph {
  Digraph graph;
  std::uint64_t source_id = 0;
};

inline PowerGraph build_power_graph(const FiniteGroup &g) {
  const std::size_t n = g.order();
  PowerGraph pg{Graph(n), g.source_id()};
  for (Element y = 0; y < n; ++y)
    g.cyclic_subgroup_bits(y).for_each([&](Element x) {
      if (x != y && !pg.graph.adjacent(x, y)) pg.graph.add_edge(x, y);
    });
  return pg;
}

inline DirectedPowerGraph build_directed_power_graph(const FiniteGroup &g) {
  const std::size_t n = g.order();
  DirectedPowerGraph dg{Digraph(n), g.source_id()};
  for (Element x = 0; x < n; ++x)
    g.cyclic_subgroup_bits(x).for_each([&](Element y) {
      if (x != y) dg.graph.add_arc(x, y);
    });
  return dg;
}

struct CyclicClass {
  std::vector<Element> elements;  // sorted
  Element representative = 0;     // smallest element
  std::size_t subgroup_order = 1; // |<x>| for any x in the class
  std::size_t weight() const noexcept { return elements.size(); }
};

// C(G): the power graph with each class {y : <y> = <x>} collapsed to a vertex.
// Classes are ordered by descending weight, then ascending representative.
class CyclicClassGraph {
public:
  explicit CyclicClassGraph(const FiniteGroup &g) : source_id_(g.source_id()) {
    const std::size_t n = g.order();
    std::vector<CyclicClass> by_id(g.cyclic_class_count());
    for (Element x = 0; x < n; ++x) {
      auto &c = by_id[g.cyclic_class(x)];
      if (c.elements.empty()) {
        c.representative = x;
        c.subgroup_order = g.element_order(x);
      }
      c.elements.push_back(x);
    }
    std::stable_sort(by_id.begin(), by_id.end(), [](const CyclicClass &a, const CyclicClass &b) {
      if (a.weight() != b.weight()) return a.weight() > b.weight();
      return a.representative < b.representative;
    });
    classes_ = std::move(by_id);

    class_of_.assign(n, 0);
    for (std::size_t i = 0; i < classes_.size(); ++i)
      for (Element x : classes_[i].elements) class_of_[x] = i;

    const std::size_t m = classes_.size();
    containment_ = Digraph(m);
    for (std::size_t a = 0; a < m; ++a)
      g.cyclic_subgroup_bits(classes_[a].representative).for_each([&](Element y) {
        std::size_t b = class_of_[y];
        if (b != a && !containment_.has_arc(static_cast<Vertex>(a), static_cast<Vertex>(b)))
          containment_.add_arc(static_cast<Vertex>(a), static_cast<Vertex>(b));
      });
    undirected_ = containment_.underlying();

    hasse_ = Digraph(m);
    for (Vertex a = 0; a < m; ++a)
      containment_.out_neighbors(a).for_each([&](Vertex b) {
        bool covered = true;
        containment_.out_neighbors(a).for_each([&](Vertex c) {
          if (c != b && containment_.has_arc(c, b)) covered = false;
        });
        if (covered) hasse_.add_arc(a, b);
      });
  }

  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<CyclicClass> &classes() const noexcept { return classes_; }
  const CyclicClass &at(std::size_t i) const { return classes_.at(i); }
  std::size_t class_of(Element x) const { return class_of_.at(x); }
  std::size_t identity_class() const noexcept { return class_of_[0]; }

  // Arc (A, B) iff <b> is a proper subgroup of <a>; transitively closed.
  const Digraph &containment() const noexcept { return containment_; }
  // Covering relations only.
  const Digraph &hasse() const noexcept { return hasse_; }
  // C(G) itself.
  const Graph &undirected() const noexcept { return undirected_; }

  std::size_t total_weight() const noexcept {
    std::size_t s = 0;
    for (const auto &c : classes_) s += c.weight();
    return s;
  }

  std::uint64_t source_id() const noexcept { return source_id_; }

private:
  std::uint64_t source_id_;
  std::vector<CyclicClass> classes_;
  std::vector<std::size_t> class_of_;
  Digraph containment_;
  Digraph hasse_;
  Graph undirected_;
};

inline CyclicClassGraph build_cyclic_class_graph(const FiniteGroup &g) { return CyclicClassGraph(g); }

// Class i -> its representative in the power graph.
inline std::vector<Element> embed_classes(const CyclicClassGraph &cg, const PowerGraph &pg) {
  if (cg.source_id() != pg.source_id)
    throw InvalidArgument("embed_classes: class graph and power graph come from different groups");
  std::vector<Element> map;
  map.reserve(cg.size());
  for (const auto &c : cg.classes()) map.push_back(c.representative);
  return map;
}

// True iff `map` is injective and i ~ j in C(G) exactly when map[i] ~ map[j].
inline bool is_induced_embedding(const CyclicClassGraph &cg, const PowerGraph &pg, const std::vector<Element> &map) {
  if (map.size() != cg.size()) return false;
  Bitset used(pg.graph.order());
  for (Element x : map) {
    if (x >= pg.graph.order() || used.test(x)) return false;
    used.set(x);
  }
  for (Vertex i = 0; i < cg.size(); ++i)
    for (Vertex j = i + 1; j < cg.size(); ++j)
      if (cg.undirected().adjacent(i, j) != pg.graph.adjacent(map[i], map[j])) return false;
  return true;
}

// Label in the style Z_k(w): the class generates a cyclic subgroup of order k
// and has w elements.
inline std::string class_label(const CyclicClass &c) {
  return "Z_" + std::to_string(c.subgroup_order) + "(" + std::to_string(c.weight()) + ")";
}

} // namespace pgk

#endif
