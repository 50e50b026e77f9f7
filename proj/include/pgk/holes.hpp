#ifndef PGK_HOLES_HPP
#define PGK_HOLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "pgk/budget.hpp"
#include "pgk/graph.hpp"

namespace pgk {

// A chordless cycle of length >= 4, in canonical form: starts at its smallest
// vertex and continues towards the smaller of that vertex's two neighbours.
using Hole = std::vector<Vertex>;

enum class Parity { any, odd, even };

struct HoleQuery {
  std::size_t min_length = 4;
  std::size_t max_length = std::numeric_limits<std::size_t>::max();
  Parity parity = Parity::any;
  std::uint64_t budget = Limits{}.hole_nodes;
};

inline Hole canonical_cycle(std::vector<Vertex> c) {
  if (c.empty()) return c;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

inline bool is_hole(const Graph &g, const std::vector<Vertex> &c) {
  if (c.size() < 4 || !is_cycle(g, c)) return false;
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(c[i], c[j])) return false;
    }
  return true;
}

namespace detail {

inline bool length_wanted(std::size_t len, const HoleQuery &q) {
  if (len < q.min_length || len > q.max_length) return false;
  if (q.parity == Parity::odd) return len % 2 == 1;
  if (q.parity == Parity::even) return len % 2 == 0;
  return true;
}

// Chordless cycles of `g`, each reported once, starting at its smallest vertex.
inline void enumerate_holes(const Graph &g, const HoleQuery &q,
                            const std::function<bool(const std::vector<Vertex> &)> &visit) {
  const std::size_t n = g.order();
  const std::size_t min_len = std::max<std::size_t>(q.min_length, 4);
  const std::size_t max_depth = std::min(q.max_length, n);
  NodeCounter counter(q.budget, "find_holes");
  bool stop = false;
  std::vector<Vertex> path;
  // forbidden[d]: closed neighbourhoods of the interior when the path has d+2
  // vertices; cand[d]: candidates for the next vertex at that depth.
  std::vector<Bitset> forbidden(max_depth + 1, Bitset(n)), cand(max_depth + 1, Bitset(n));
  Bitset allowed(n);

  std::function<void(std::size_t)> extend = [&](std::size_t d) {
    counter.tick();
    const Vertex s = path.front();
    const Vertex u = path.back();
    Bitset &c = cand[d];
    c = g.neighbors(u);
    c &= allowed;
    c -= forbidden[d];
    for (std::size_t w = c.find_first(); w < n && !stop; w = c.find_next(w + 1)) {
      if (g.adjacent(s, static_cast<Vertex>(w))) {
        std::size_t len = path.size() + 1;
        if (path.size() >= 3 && path[1] < w && len >= min_len && length_wanted(len, q)) {
          path.push_back(static_cast<Vertex>(w));
          if (!visit(path)) stop = true;
          path.pop_back();
        }
        continue;
      }
      if (path.size() + 2 > q.max_length) continue;
      Bitset &f = forbidden[d + 1];
      f = forbidden[d];
      f |= g.neighbors(u);
      f.set(u);
      path.push_back(static_cast<Vertex>(w));
      extend(d + 1);
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < n && !stop; ++s) {
    allowed.set_all();
    allowed.reset_below(s + 1);
    const Bitset &ns = g.neighbors(s);
    for (std::size_t a = ns.find_next(s + 1); a < n && !stop; a = ns.find_next(a + 1)) {
      path.assign({s, static_cast<Vertex>(a)});
      forbidden[0].reset_all();
      extend(0);
    }
  }
}

} // namespace detail

// Visits every hole as the list of twin classes it passes through; every
// choice of one member per class is a distinct hole. Classes are reported in
// the cyclic order of the hole, starting at the class of the smallest member.
inline void for_each_hole_class(const Graph &g, const HoleQuery &q,
                                const std::function<bool(const std::vector<std::vector<Vertex>> &)> &visit) {
  const bool long_only = std::max<std::size_t>(q.min_length, 4) >= 5;
  auto classes = twin_classes(g, long_only);
  std::vector<Vertex> reps;
  for (const auto &c : classes) reps.push_back(c.front());
  Graph quotient = g.induced(reps);
  detail::enumerate_holes(quotient, q, [&](const std::vector<Vertex> &qh) {
    std::vector<std::vector<Vertex>> members;
    members.reserve(qh.size());
    for (Vertex c : qh) members.push_back(classes[c]);
    return visit(members);
  });
}

// Smallest-vertex lift of a hole class.
inline Hole min_lift(const std::vector<std::vector<Vertex>> &members) {
  std::vector<Vertex> c;
  for (const auto &m : members) c.push_back(m.front());
  return canonical_cycle(std::move(c));
}

inline std::size_t lift_count(const std::vector<std::vector<Vertex>> &members) {
  std::size_t k = 1;
  for (const auto &m : members) k = (k > SIZE_MAX / m.size()) ? SIZE_MAX : k * m.size();
  return k;
}

// Visits every hole individually (canonical form). Stops when `visit` returns
// false. Each expanded hole also costs one node of the query budget.
inline void for_each_hole(const Graph &g, const HoleQuery &q, const std::function<bool(const Hole &)> &visit) {
  NodeCounter expanded(q.budget, "find_holes (expansion)");
  for_each_hole_class(g, q, [&](const std::vector<std::vector<Vertex>> &members) {
    std::vector<std::size_t> pick(members.size(), 0);
    std::vector<Vertex> c(members.size());
    while (true) {
      expanded.tick();
      for (std::size_t i = 0; i < members.size(); ++i) c[i] = members[i][pick[i]];
      if (!visit(canonical_cycle(c))) return false;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == members[i].size()) pick[i++] = 0;
      if (i == pick.size()) return true;
    }
  });
}

// All holes matching the query (at most `limit`), sorted by length then
// lexicographically.
inline std::vector<Hole> find_holes(const Graph &g, const HoleQuery &q,
                                    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<Hole> out;
  if (limit == 0) return out;
  for_each_hole(g, q, [&](const Hole &h) {
    out.push_back(h);
    return out.size() < limit;
  });
  std::sort(out.begin(), out.end(), [](const Hole &a, const Hole &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Anti-holes of length >= 5: holes of the complement.
inline std::vector<Hole> find_anti_holes(const Graph &g, std::size_t max_length = std::numeric_limits<std::size_t>::max(),
                                         std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                         std::uint64_t budget = Limits{}.hole_nodes) {
  if (max_length < 5) throw InvalidArgument("find_anti_holes: max_length must be at least 5");
  HoleQuery q;
  q.min_length = 5;
  q.max_length = max_length;
  q.budget = budget;
  return find_holes(g.complement(), q, limit);
}

} // namespace pgk

#endif
