#ifndef PGK_GRAPH_HPP
#define PGK_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "pgk/bitset.hpp"
#include "pgk/errors.hpp"

namespace pgk {

// Simple undirected graph on vertices 0..n-1 stored as bit rows.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t order() const noexcept { return rows_.size(); }
  const Bitset &neighbors(Vertex v) const noexcept { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void remove_edge(Vertex u, Vertex v) noexcept {
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  std::size_t edge_count() const noexcept {
    std::size_t c = 0;
    for (const auto &r : rows_) c += r.count();
    return c / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  Graph complement() const {
    Graph g(order());
    for (Vertex u = 0; u < order(); ++u) {
      g.rows_[u] = ~rows_[u];
      g.rows_[u].reset(u);
    }
    return g;
  }

  // Subgraph induced on `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const {
    Graph g(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
  }

  bool is_clique(std::span<const Vertex> vs) const noexcept {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adjacent(vs[i], vs[j])) return false;
    return true;
  }
  bool is_independent(std::span<const Vertex> vs) const noexcept {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (vs[i] == vs[j] || adjacent(vs[i], vs[j])) return false;
    return true;
  }

  friend bool operator==(const Graph &a, const Graph &b) { return a.rows_ == b.rows_; }

private:
  std::vector<Bitset> rows_;
};

// Directed graph on 0..n-1; no self-loops.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n, Bitset(n)) {}

  std::size_t order() const noexcept { return out_.size(); }
  const Bitset &out_neighbors(Vertex v) const noexcept { return out_[v]; }
  bool has_arc(Vertex u, Vertex v) const noexcept { return out_[u].test(v); }
  void add_arc(Vertex u, Vertex v) {
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    out_[u].set(v);
  }
  std::size_t arc_count() const noexcept {
    std::size_t c = 0;
    for (const auto &r : out_) c += r.count();
    return c;
  }
  std::size_t in_degree(Vertex v) const noexcept {
    std::size_t c = 0;
    for (const auto &r : out_) c += r.test(v) ? 1 : 0;
    return c;
  }

  // Forget orientation.
  Graph underlying() const {
    Graph g(order());
    for (Vertex u = 0; u < order(); ++u) out_[u].for_each([&](Vertex v) {
      if (!g.adjacent(u, v)) g.add_edge(u, v);
    });
    return g;
  }

  // True when consecutive vertices of `seq` are joined by forward arcs and no
  // vertex repeats.
  bool is_path(std::span<const Vertex> seq) const {
    Bitset seen(order());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] >= order() || seen.test(seq[i])) return false;
      seen.set(seq[i]);
      if (i + 1 < seq.size() && !has_arc(seq[i], seq[i + 1])) return false;
    }
    return true;
  }

private:
  std::vector<Bitset> out_;
};

// True when `cycle` visits distinct vertices with every consecutive pair
// (including last-first) adjacent and has at least three vertices.
inline bool is_cycle(const Graph &g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  Bitset seen(g.order());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex v = cycle[i];
    if (v >= g.order() || seen.test(v)) return false;
    seen.set(v);
    if (!g.adjacent(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

// Breadth-first distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  const std::size_t n = g.order();
  std::vector<int> dist(n, -1);
  Bitset unvisited(n, true);
  Bitset frontier(n);
  frontier.set(source);
  unvisited.reset(source);
  dist[source] = 0;
  int level = 0;
  while (frontier.any() && unvisited.any()) {
    Bitset next(n);
    frontier.for_each([&](Vertex u) {
      if (unvisited.none()) return;
      Bitset fresh = g.neighbors(u) & unvisited;
      next |= fresh;
      unvisited -= fresh;
    });
    ++level;
    next.for_each([&](Vertex v) { dist[v] = level; });
    frontier = std::move(next);
  }
  return dist;
}

inline bool is_connected(const Graph &g) {
  if (g.order() == 0) return true;
  for (int d : bfs_distances(g, 0))
    if (d < 0) return false;
  return true;
}

// Partition into twin classes. True twins (equal closed neighbourhoods) never
// both lie on a hole, and swapping one for another maps holes to holes. When
// only cycles of length >= 5 matter, false twins (equal open neighbourhoods)
// behave the same way; a vertex never has twins of both kinds.
inline std::vector<std::vector<Vertex>> twin_classes(const Graph &g, bool include_false_twins) {
  const std::size_t n = g.order();
  std::vector<Bitset> closed(n), open(n);
  for (Vertex v = 0; v < n; ++v) {
    open[v] = g.neighbors(v);
    closed[v] = open[v];
    closed[v].set(v);
  }
  auto group = [&](const std::vector<Bitset> &key) {
    std::vector<Vertex> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) {
      const auto *wa = key[a].data(), *wb = key[b].data();
      return std::lexicographical_compare(wa, wa + key[a].word_count(), wb, wb + key[b].word_count());
    });
    std::vector<std::size_t> id(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && !(key[idx[i]] == key[idx[i - 1]])) ++next;
      id[idx[i]] = next;
    }
    return id;
  };
  std::vector<std::size_t> tid = group(closed);
  std::vector<std::size_t> fid;
  if (include_false_twins) fid = group(open);

  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> slot_t(n, SIZE_MAX), slot_f(n, SIZE_MAX);
  std::vector<std::size_t> size_t_(n, 0);
  for (Vertex v = 0; v < n; ++v) ++size_t_[tid[v]];
  for (Vertex v = 0; v < n; ++v) {
    std::size_t *slot = nullptr;
    if (size_t_[tid[v]] > 1 || !include_false_twins)
      slot = &slot_t[tid[v]];
    else
      slot = &slot_f[fid[v]];
    if (*slot == SIZE_MAX) {
      *slot = classes.size();
      classes.emplace_back();
    }
    classes[*slot].push_back(v);
  }
  return classes;
}

} // namespace pgk

#endif
