#ifndef PGK_INVARIANTS_HPP
#define PGK_INVARIANTS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pgk/budget.hpp"
#include "pgk/clique.hpp"
#include "pgk/graph.hpp"
#include "pgk/groups.hpp"
#include "pgk/numtheory.hpp"
#include "pgk/powergraph.hpp"

namespace pgk {

struct EccentricitySummary {
  std::vector<std::size_t> eccentricity;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::vector<Vertex> center;
};

inline EccentricitySummary eccentricities(const Graph &g) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("eccentricities: empty graph");
  EccentricitySummary s;
  s.eccentricity.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t ecc = 0;
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw InvalidArgument("eccentricities: graph is disconnected");
      ecc = std::max<std::size_t>(ecc, static_cast<std::size_t>(d));
    }
    s.eccentricity[v] = ecc;
  }
  s.radius = *std::min_element(s.eccentricity.begin(), s.eccentricity.end());
  s.diameter = *std::max_element(s.eccentricity.begin(), s.eccentricity.end());
  for (Vertex v = 0; v < n; ++v)
    if (s.eccentricity[v] == s.radius) s.center.push_back(v);
  return s;
}

// Eccentricities of a power graph, cross-checked against "center = vertices of
// full degree" for non-trivial groups.
inline EccentricitySummary power_graph_eccentricities(const PowerGraph &pg) {
  EccentricitySummary s = eccentricities(pg.graph);
  const std::size_t n = pg.graph.order();
  if (n > 1) {
    std::vector<Vertex> full;
    for (Vertex v = 0; v < n; ++v)
      if (pg.graph.degree(v) == n - 1) full.push_back(v);
    if (full != s.center) throw InternalError("power graph center differs from its full-degree vertices");
  }
  return s;
}

// Exhaustive longest simple directed path by dynamic programming over vertex
// subsets: ends[S] holds every v such that some path visits exactly S and
// stops at v. Refuses graphs above `cap` vertices (memory is 4 * 2^n bytes).
inline std::vector<Vertex> longest_directed_path_bruteforce(const Digraph &dg, std::size_t cap = 24) {
  const std::size_t n = dg.order();
  if (n > cap || n > 28)
    throw CapExceeded("longest_directed_path_bruteforce: " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(std::min<std::size_t>(cap, 28)));
  if (n == 0) return {};
  std::vector<std::uint32_t> out(n, 0), in(n, 0);
  for (Vertex u = 0; u < n; ++u)
    dg.out_neighbors(u).for_each([&](Vertex v) {
      out[u] |= 1U << v;
      in[v] |= 1U << u;
    });

  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
  std::uint32_t best = 1;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (!ends[s]) continue;
    if (std::popcount(s) > std::popcount(best) || (std::popcount(s) == std::popcount(best) && s < best)) best = s;
    for (std::uint32_t e = ends[s]; e; e &= e - 1) {
      unsigned v = static_cast<unsigned>(std::countr_zero(e));
      for (std::uint32_t nx = out[v] & ~s; nx; nx &= nx - 1) {
        unsigned w = static_cast<unsigned>(std::countr_zero(nx));
        ends[s | (1U << w)] |= 1U << w;
      }
    }
  }

  std::vector<Vertex> path;
  std::uint32_t s = best;
  Vertex v = static_cast<Vertex>(std::countr_zero(ends[s]));
  while (true) {
    path.push_back(v);
    std::uint32_t rest = s & ~(1U << v);
    if (!rest) break;
    std::uint32_t prev = ends[rest] & in[v];
    v = static_cast<Vertex>(std::countr_zero(prev));
    s = rest;
  }
  std::reverse(path.begin(), path.end());
  if (!dg.is_path(path)) throw InternalError("longest_directed_path_bruteforce: reconstruction failed");
  return path;
}

// Generators of Z_n, then generators of the subgroup of index p (p the
// smallest prime of n), and so on down to 0. Its length is psi(n).
inline std::vector<u64> construct_longest_path_cyclic(u64 n) {
  if (n == 0) throw InvalidArgument("construct_longest_path_cyclic: n must be positive");
  std::vector<u64> path;
  u64 m = n;    // order of the current subgroup
  u64 step = 1; // it is generated by `step`
  while (true) {
    for (u64 k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) path.push_back((k * step) % n);
    if (m == 1) break;
    u64 p = nt::smallest_prime_factor(m);
    m /= p;
    step *= p;
  }
  return path;
}

// Turns a clique of the underlying graph into a directed path through the same
// vertices by repeated insertion.
inline std::vector<Vertex> clique_to_directed_path(const Digraph &dg, std::vector<Vertex> clique) {
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] >= dg.order() || (i > 0 && clique[i] == clique[i - 1]))
      throw InvalidArgument("clique_to_directed_path: invalid vertex list");
    for (std::size_t j = 0; j < i; ++j)
      if (!dg.has_arc(clique[i], clique[j]) && !dg.has_arc(clique[j], clique[i]))
        throw InvalidArgument("clique_to_directed_path: input is not a clique");
  }
  std::vector<Vertex> path;
  for (Vertex v : clique) {
    if (path.empty()) {
      path.push_back(v);
      continue;
    }
    auto mutual = std::find_if(path.begin(), path.end(), [&](Vertex u) { return dg.has_arc(u, v) && dg.has_arc(v, u); });
    if (mutual != path.end()) {
      path.insert(mutual + 1, v);
    } else if (dg.has_arc(v, path.front())) {
      path.insert(path.begin(), v);
    } else if (dg.has_arc(path.back(), v)) {
      path.push_back(v);
    } else {
      bool placed = false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (dg.has_arc(path[i], v) && dg.has_arc(v, path[i + 1])) {
          path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, v);
          placed = true;
          break;
        }
      if (!placed) throw InternalError("clique_to_directed_path: no insertion point found");
    }
  }
  if (!dg.is_path(path)) throw InternalError("clique_to_directed_path: produced an invalid path");
  return path;
}

namespace detail {

inline std::size_t peel_chromatic(const Graph &g, std::vector<Vertex> verts, std::uint64_t budget) {
  if (verts.empty()) return 0;
  Bitset in(g.order());
  for (Vertex v : verts) in.set(v);
  std::vector<Vertex> universal, rest;
  for (Vertex v : verts) {
    if ((g.neighbors(v) & in).count() + 1 == verts.size())
      universal.push_back(v);
    else
      rest.push_back(v);
  }
  if (!universal.empty()) return universal.size() + peel_chromatic(g, rest, budget);

  Graph sub = g.induced(verts);
  std::vector<int> comp(verts.size(), -1);
  int ncomp = 0;
  for (Vertex s = 0; s < verts.size(); ++s) {
    if (comp[s] >= 0) continue;
    auto dist = bfs_distances(sub, s);
    for (Vertex v = 0; v < verts.size(); ++v)
      if (dist[v] >= 0) comp[v] = ncomp;
    ++ncomp;
  }
  if (ncomp > 1) {
    std::size_t best = 0;
    for (int c = 0; c < ncomp; ++c) {
      std::vector<Vertex> part;
      for (Vertex v = 0; v < verts.size(); ++v)
        if (comp[v] == c) part.push_back(verts[v]);
      best = std::max(best, peel_chromatic(g, part, budget));
    }
    return best;
  }
  return chromatic_number(sub, budget).colours;
}

} // namespace detail

// chi of the power graph of a cyclic group computed as phi(n) + chi(H), with H
// the subgraph on non-generators, recursing by peeling universal vertices and
// splitting components, and falling back to exact colouring.
inline std::size_t chromatic_via_generator_peeling(const FiniteGroup &g, const PowerGraph &pg,
                                                   std::uint64_t budget = Limits{}.clique_nodes) {
  if (!g.is_cyclic()) throw InvalidArgument(g.name() + " is not cyclic");
  if (pg.source_id != g.source_id()) throw InvalidArgument("power graph was built from a different group");
  const std::size_t n = g.order();
  std::vector<Vertex> non_generators;
  std::size_t generators = 0;
  for (Element x = 0; x < n; ++x) {
    if (g.element_order(x) == n) {
      if (pg.graph.degree(x) + 1 != n) throw InternalError("generator is not a universal vertex");
      ++generators;
    } else {
      non_generators.push_back(x);
    }
  }
  return generators + detail::peel_chromatic(pg.graph, non_generators, budget);
}

inline std::size_t general_group_clique_number(const FiniteGroup &g) {
  std::size_t best = 0;
  for (Element x = 0; x < g.order(); ++x) best = std::max<std::size_t>(best, nt::psi(g.element_order(x)));
  return best;
}

// X_i = elements whose cyclic subgroup has composition length i, i.e. whose
// order has i prime factors counted with multiplicity.
struct CompositionPartition {
  std::vector<std::vector<Element>> blocks;
  std::size_t top() const { return blocks.empty() ? 0 : blocks.size() - 1; }
};

inline CompositionPartition composition_partition(const FiniteGroup &g) {
  if (!g.is_abelian()) throw InvalidArgument("composition_partition: " + g.name() + " is not abelian");
  CompositionPartition p;
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t i = nt::big_omega(g.element_order(x));
    if (p.blocks.size() <= i) p.blocks.resize(i + 1);
    p.blocks[i].push_back(x);
  }
  return p;
}

// Checks the partition laws; returns one message per violation.
//  - X_0 = {e}; X_i nonempty implies X_{i-1} nonempty.
//  - some vertex of X_i adjacent to the rest of X_i implies X_i is a clique.
//  - for i >= 1: X_i a clique implies X_{i+1} a clique.
//  - for i >= 1: X_i a clique holding an element of non-prime-power order
//    implies X_{i+1} is empty.
//  - G non-cyclic: the top block is not a clique.
inline std::vector<std::string> partition_law_violations(const FiniteGroup &g, const PowerGraph &pg) {
  std::vector<std::string> bad;
  CompositionPartition p = composition_partition(g);
  auto block = [&](std::size_t i) -> const std::vector<Element> & {
    static const std::vector<Element> empty;
    return i < p.blocks.size() ? p.blocks[i] : empty;
  };
  if (block(0) != std::vector<Element>{0}) bad.push_back("X_0 is not {e}");
  for (std::size_t i = 1; i < p.blocks.size(); ++i)
    if (!block(i).empty() && block(i - 1).empty()) bad.push_back("X_" + std::to_string(i) + " nonempty but X_" + std::to_string(i - 1) + " empty");
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto &b = block(i);
    bool clique = pg.graph.is_clique(b);
    bool has_dominant = std::any_of(b.begin(), b.end(), [&](Element x) {
      return std::all_of(b.begin(), b.end(), [&](Element y) { return x == y || pg.graph.adjacent(x, y); });
    });
    if (has_dominant && !clique) bad.push_back("X_" + std::to_string(i) + " has a dominating vertex but is not a clique");
    if (i == 0 || !clique) continue;
    if (!pg.graph.is_clique(block(i + 1)))
      bad.push_back("X_" + std::to_string(i) + " is a clique but X_" + std::to_string(i + 1) + " is not");
    bool mixed = std::any_of(b.begin(), b.end(), [&](Element x) { return !nt::is_prime_power(g.element_order(x)); });
    if (mixed && !block(i + 1).empty())
      bad.push_back("X_" + std::to_string(i) + " is a clique with a non-prime-power order but X_" + std::to_string(i + 1) + " is nonempty");
  }
  if (!g.is_cyclic() && pg.graph.is_clique(block(p.top())))
    bad.push_back("top block X_" + std::to_string(p.top()) + " of a non-cyclic group is a clique");
  return bad;
}

} // namespace pgk

#endif
