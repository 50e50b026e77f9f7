#ifndef PGK_CHORDAL_HPP
#define PGK_CHORDAL_HPP

#include <algorithm>
#include <list>
#include <optional>
#include <vector>

#include "pgk/graph.hpp"
#include "pgk/holes.hpp"

namespace pgk {

// Lexicographic BFS by partition refinement. Ties go to the smaller vertex.
inline std::vector<Vertex> lex_bfs(const Graph &g) {
  const std::size_t n = g.order();
  std::list<std::vector<Vertex>> cells;
  if (n == 0) return {};
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  cells.push_back(std::move(all));
  std::vector<Vertex> order;
  order.reserve(n);
  while (!cells.empty()) {
    auto &front = cells.front();
    Vertex v = front.front();
    front.erase(front.begin());
    if (front.empty()) cells.pop_front();
    order.push_back(v);
    const Bitset &nv = g.neighbors(v);
    for (auto it = cells.begin(); it != cells.end();) {
      std::vector<Vertex> in, out;
      for (Vertex x : *it) (nv.test(x) ? in : out).push_back(x);
      if (!in.empty() && !out.empty()) {
        *it = std::move(out);
        cells.insert(it, std::move(in));
      }
      ++it;
    }
  }
  return order;
}

// Shortest path from a to b avoiding the vertices in `blocked`.
inline std::vector<Vertex> shortest_path_avoiding(const Graph &g, Vertex a, Vertex b, const Bitset &blocked) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> parent(n, -1);
  Bitset seen = blocked;
  seen.set(a);
  std::vector<Vertex> queue{a};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (u == b) break;
    Bitset next = g.neighbors(u) - seen;
    next.for_each([&](Vertex w) {
      parent[w] = u;
      queue.push_back(w);
    });
    seen |= next;
  }
  if (a != b && parent[b] < 0) return {};
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(static_cast<Vertex>(parent[path.back()]));
  std::reverse(path.begin(), path.end());
  return path;
}

struct ChordalityResult {
  bool chordal = true;
  std::vector<Vertex> elimination_order; // perfect elimination order when chordal
  std::optional<Hole> hole;              // chordless cycle when not
};

namespace detail {

// For a non-adjacent pair a, b in N(v) joined by a path avoiding N[v] \ {a,b},
// v + a shortest such path is a hole.
inline std::optional<Hole> hole_through(const Graph &g, Vertex v, Vertex a, Vertex b) {
  Bitset blocked = g.neighbors(v);
  blocked.set(v);
  blocked.reset(a);
  blocked.reset(b);
  auto path = shortest_path_avoiding(g, a, b, blocked);
  if (path.size() < 3) return std::nullopt;
  path.insert(path.begin(), v);
  return canonical_cycle(std::move(path));
}

inline std::optional<Hole> any_hole(const Graph &g) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j]))
          if (auto h = hole_through(g, v, nb[i], nb[j])) return h;
  }
  return std::nullopt;
}

} // namespace detail

inline ChordalityResult is_chordal(const Graph &g) {
  const std::size_t n = g.order();
  ChordalityResult r;
  auto lex = lex_bfs(g);
  std::vector<Vertex> peo(lex.rbegin(), lex.rend());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[peo[i]] = i;

  // The later neighbours of each vertex must form a clique. It is enough that
  // the earliest of them is adjacent to all the others.
  Bitset later(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = peo[i];
    later.reset(v);
    Bitset ln = g.neighbors(v) & later;
    std::size_t first = n;
    ln.for_each([&](Vertex u) {
      if (first == n || pos[u] < pos[first]) first = u;
    });
    if (first == n) continue;
    Bitset rest = ln;
    rest.reset(first);
    Bitset bad = rest - g.neighbors(static_cast<Vertex>(first));
    if (bad.none()) continue;
    // Non-chordal. Look for a hole through the later neighbours of some
    // vertex; fall back to a full scan.
    r.chordal = false;
    for (std::size_t j = i; j < n && !r.hole; ++j) {
      Vertex x = peo[j];
      auto nb = (g.neighbors(x) & later).to_vector();
      for (std::size_t p = 0; p < nb.size() && !r.hole; ++p)
        for (std::size_t q = p + 1; q < nb.size() && !r.hole; ++q)
          if (!g.adjacent(nb[p], nb[q])) r.hole = detail::hole_through(g, x, nb[p], nb[q]);
    }
    if (!r.hole) r.hole = detail::any_hole(g);
    if (!r.hole || !is_hole(g, *r.hole)) throw InternalError("is_chordal: failed to extract a hole witness");
    return r;
  }
  r.elimination_order = std::move(peo);
  return r;
}

inline bool is_perfect_elimination_order(const Graph &g, const std::vector<Vertex> &order) {
  const std::size_t n = g.order();
  if (order.size() != n) return false;
  Bitset later(n, true), seen(n);
  for (Vertex v : order) {
    if (v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (Vertex v : order) {
    later.reset(v);
    auto ln = (g.neighbors(v) & later).to_vector();
    if (!g.is_clique(ln)) return false;
  }
  return true;
}

} // namespace pgk

#endif
