#ifndef PGK_STRUCTURE_HPP
#define PGK_STRUCTURE_HPP

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pgk/budget.hpp"
#include "pgk/chordal.hpp"
#include "pgk/graph.hpp"
#include "pgk/groups.hpp"
#include "pgk/hamiltonian.hpp"
#include "pgk/holes.hpp"
#include "pgk/numtheory.hpp"
#include "pgk/planarity.hpp"
#include "pgk/powergraph.hpp"

namespace pgk {

inline bool is_complete(const Graph &g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_simplicial(const Graph &g, Vertex v) {
  const Bitset &nv = g.neighbors(v);
  bool ok = true;
  nv.for_each([&](Vertex u) {
    if (!ok) return;
    Bitset rest = nv;
    rest.reset(u);
    if (!rest.is_subset_of(g.neighbors(u))) ok = false;
  });
  return ok;
}

inline std::vector<Vertex> simplicial_vertices(const Graph &g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_simplicial(g, v)) out.push_back(v);
  return out;
}

struct ClawResult {
  bool claw_free = true;
  std::optional<std::array<Vertex, 4>> claw; // centre, then three pairwise non-adjacent leaves
};

// The lexicographically smallest induced K_{1,3}, if any.
inline ClawResult is_claw_free(const Graph &g) {
  ClawResult r;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Bitset &nv = g.neighbors(v);
    for (std::size_t a = nv.find_first(); a < nv.size(); a = nv.find_next(a + 1)) {
      Bitset nb = nv - g.neighbors(static_cast<Vertex>(a));
      nb.reset_below(a + 1);
      for (std::size_t b = nb.find_first(); b < nb.size(); b = nb.find_next(b + 1)) {
        Bitset nc = nb - g.neighbors(static_cast<Vertex>(b));
        nc.reset_below(b + 1);
        std::size_t c = nc.find_first();
        if (c < nc.size()) {
          r.claw_free = false;
          r.claw = {v, static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)};
          return r;
        }
      }
    }
  }
  return r;
}

struct EvenHoleConstruction {
  u64 modulus = 0;
  std::vector<u64> vertices; // elements of Z_modulus in cyclic order
};

// Length 4 from primes (p, q): p, pq^2, q, p^2q in Z_{p^2 q^2}.
// Length 2k >= 6 from k distinct primes: p1, p1p2, p2, ..., pk, pk p1 in
// Z_{p1...pk}. The result is checked to be a hole.
inline EvenHoleConstruction construct_even_hole_cyclic(const std::vector<u64> &primes, std::size_t length,
                                                       std::size_t cap = default_order_cap) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!nt::is_prime(primes[i])) throw InvalidArgument("construct_even_hole_cyclic: " + std::to_string(primes[i]) + " is not prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j]) throw InvalidArgument("construct_even_hole_cyclic: primes must be distinct");
  }
  EvenHoleConstruction c;
  if (length == 4) {
    if (primes.size() != 2) throw InvalidArgument("construct_even_hole_cyclic: length 4 needs exactly two primes");
    const u64 p = primes[0], q = primes[1];
    c.modulus = nt::checked_mul(nt::checked_mul(p, p), nt::checked_mul(q, q));
    c.vertices = {p, p * q * q, q, p * p * q};
  } else if (length >= 6 && length % 2 == 0) {
    if (primes.size() != length / 2)
      throw InvalidArgument("construct_even_hole_cyclic: length " + std::to_string(length) + " needs " +
                            std::to_string(length / 2) + " primes");
    c.modulus = 1;
    for (u64 p : primes) c.modulus = nt::checked_mul(c.modulus, p);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      c.vertices.push_back(primes[i]);
      c.vertices.push_back(primes[i] * primes[(i + 1) % primes.size()]);
    }
  } else {
    throw InvalidArgument("construct_even_hole_cyclic: length must be 4 or an even number >= 6");
  }
  FiniteGroup g = build_cyclic(c.modulus, cap);
  PowerGraph pg = build_power_graph(g);
  std::vector<Vertex> cyc;
  for (u64 x : c.vertices) cyc.push_back(static_cast<Vertex>(x));
  if (!is_hole(pg.graph, cyc)) throw InternalError("construct_even_hole_cyclic: construction is not a hole");
  return c;
}

// A hole of length L in the power graph of Z_n needs at least L/2 distinct
// primes dividing n.
inline bool verify_hole_prime_necessity(u64 n, const Hole &hole) {
  return 2 * nt::distinct_prime_count(n) >= hole.size();
}

enum class HoleRole { source, sink, mixed };

inline const char *to_string(HoleRole r) {
  switch (r) {
  case HoleRole::source: return "source";
  case HoleRole::sink: return "sink";
  default: return "mixed";
  }
}

struct HoleVertexOrder {
  Element vertex = 0;
  HoleRole role = HoleRole::mixed;
  std::size_t order = 1;
  bool prime_power_order = false;
};

// Direction of the two hole edges at each vertex in the directed power graph.
// A source has both arcs leaving it.
inline std::vector<HoleVertexOrder> hole_out_vertex_orders(const FiniteGroup &g, const DirectedPowerGraph &dg,
                                                           const Hole &hole) {
  if (dg.source_id != g.source_id()) throw InvalidArgument("hole_out_vertex_orders: graph built from a different group");
  const std::size_t n = dg.graph.order();
  auto adjacent = [&](Element a, Element b) { return dg.graph.has_arc(a, b) || dg.graph.has_arc(b, a); };
  bool valid = hole.size() >= 4;
  for (std::size_t i = 0; valid && i < hole.size(); ++i) {
    if (hole[i] >= n) valid = false;
    for (std::size_t j = i + 1; valid && j < hole.size(); ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j + 1 == hole.size());
      if (hole[i] == hole[j] || adjacent(hole[i], hole[j]) != consecutive) valid = false;
    }
  }
  if (!valid) throw InvalidArgument("hole_out_vertex_orders: not a hole");
  std::vector<HoleVertexOrder> out;
  const std::size_t k = hole.size();
  for (std::size_t i = 0; i < k; ++i) {
    Element x = hole[i], prev = hole[(i + k - 1) % k], next = hole[(i + 1) % k];
    HoleVertexOrder h;
    h.vertex = x;
    h.order = g.element_order(x);
    h.prime_power_order = nt::is_prime_power(h.order);
    bool out_prev = dg.graph.has_arc(x, prev), out_next = dg.graph.has_arc(x, next);
    bool in_prev = dg.graph.has_arc(prev, x), in_next = dg.graph.has_arc(next, x);
    if (out_prev && out_next && !in_prev && !in_next)
      h.role = HoleRole::source;
    else if (in_prev && in_next && !out_prev && !out_next)
      h.role = HoleRole::sink;
    else
      h.role = HoleRole::mixed;
    out.push_back(h);
  }
  return out;
}

struct ParentChild {
  bool simplicial = false;
  std::size_t parents = 0;  // covering classes above
  std::size_t children = 0; // covered classes below
  bool one_parent_one_child() const { return parents == 1 && children == 1; }
};

// Simpliciality of a class in C(G) next to its parent/child counts in the
// covering relation. The identity class and classes generating the whole
// group are rejected.
inline ParentChild class_parent_child_simplicial(const CyclicClassGraph &cg, std::size_t cls, std::size_t group_order) {
  if (cls >= cg.size()) throw InvalidArgument("class_parent_child_simplicial: no class " + std::to_string(cls));
  if (cls == cg.identity_class()) throw InvalidArgument("class_parent_child_simplicial: identity class excluded");
  if (cg.at(cls).subgroup_order == group_order)
    throw InvalidArgument("class_parent_child_simplicial: generator class excluded");
  ParentChild r;
  r.simplicial = is_simplicial(cg.undirected(), static_cast<Vertex>(cls));
  r.parents = cg.hasse().in_degree(static_cast<Vertex>(cls));
  r.children = cg.hasse().out_neighbors(static_cast<Vertex>(cls)).count();
  return r;
}

// For Z_n with n not a prime power: k simplicial implies gcd(k, n) != 1.
inline bool simplicial_gcd_check(const Graph &pg_zn, u64 n, u64 k) {
  if (n < 2 || nt::is_prime_power(n))
    throw InvalidArgument("simplicial_gcd_check: n must not be a prime power");
  if (pg_zn.order() != n || k >= n) throw InvalidArgument("simplicial_gcd_check: graph/element mismatch");
  return !is_simplicial(pg_zn, static_cast<Vertex>(k)) || std::gcd(k, n) != 1;
}

// Expands a Hamiltonian cycle of C(G) class by class (each class is a clique).
inline std::vector<Element> hamiltonian_lift(const CyclicClassGraph &cg, const std::vector<Vertex> &class_cycle) {
  if (class_cycle.size() != cg.size() || !is_cycle(cg.undirected(), class_cycle))
    throw InvalidArgument("hamiltonian_lift: input is not a Hamiltonian cycle of C(G)");
  std::vector<Element> out;
  for (Vertex c : class_cycle)
    for (Element x : cg.at(c).elements) out.push_back(x);
  return out;
}

struct HoleSummary {
  struct Length {
    std::size_t count = 0; // saturates at SIZE_MAX
    Hole witness;          // smallest found
  };
  bool exhaustive = false; // false when the search budget ran out
  std::map<std::size_t, Length> by_length;
};

inline HoleSummary summarize_holes(const Graph &g, std::uint64_t budget = Limits{}.hole_nodes) {
  HoleSummary s;
  HoleQuery q;
  q.budget = budget;
  try {
    for_each_hole_class(g, q, [&](const std::vector<std::vector<Vertex>> &members) {
      auto &slot = s.by_length[members.size()];
      std::size_t c = lift_count(members);
      slot.count = (slot.count > SIZE_MAX - c) ? SIZE_MAX : slot.count + c;
      Hole w = min_lift(members);
      if (slot.witness.empty() || w < slot.witness) slot.witness = std::move(w);
      return true;
    });
    s.exhaustive = true;
  } catch (const BudgetExhausted &) {
    s.exhaustive = false;
  }
  return s;
}

// Returns the smallest odd hole (length >= 5), nullopt if none, or throws
// BudgetExhausted.
inline std::optional<Hole> find_odd_hole(const Graph &g, std::uint64_t budget = Limits{}.hole_nodes) {
  HoleQuery q;
  q.min_length = 5;
  q.parity = Parity::odd;
  q.budget = budget;
  std::optional<Hole> best;
  for_each_hole_class(g, q, [&](const std::vector<std::vector<Vertex>> &m) {
    Hole w = min_lift(m);
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = std::move(w);
    return true;
  });
  return best;
}

inline std::optional<Hole> find_odd_anti_hole(const Graph &g, std::uint64_t budget = Limits{}.hole_nodes) {
  return find_odd_hole(g.complement(), budget);
}

inline std::optional<Hole> find_anti_hole(const Graph &g, std::uint64_t budget = Limits{}.hole_nodes) {
  HoleQuery q;
  q.min_length = 5;
  q.budget = budget;
  std::optional<Hole> best;
  for_each_hole_class(g.complement(), q, [&](const std::vector<std::vector<Vertex>> &m) {
    Hole w = min_lift(m);
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = std::move(w);
    return true;
  });
  return best;
}

struct StructureReport {
  bool chordal = false;
  std::vector<Vertex> elimination_order;
  std::vector<Vertex> simplicial;
  ClawResult claw;
  HamiltonianResult hamiltonian;
  bool planar = false;
  bool complete = false;
  Tri has_odd_hole = Tri::unknown;
  std::optional<Hole> odd_hole;
  Tri has_anti_hole = Tri::unknown;
  std::optional<Hole> anti_hole;
  Tri perfect = Tri::unknown;
  HoleSummary holes;
  std::optional<Hole> shortest_even_hole;
};

inline StructureReport structure_report(const Graph &g, const Limits &lim = {}) {
  StructureReport r;
  auto ch = is_chordal(g);
  r.chordal = ch.chordal;
  r.elimination_order = std::move(ch.elimination_order);
  r.simplicial = simplicial_vertices(g);
  r.claw = is_claw_free(g);
  r.hamiltonian = is_hamiltonian(g, lim.hamiltonian_nodes);
  r.planar = is_planar(g);
  r.complete = is_complete(g);

  if (r.chordal) {
    r.holes.exhaustive = true;
    r.has_odd_hole = Tri::no;
  } else {
    r.holes = summarize_holes(g, lim.hole_nodes);
    if (r.holes.exhaustive) {
      r.has_odd_hole = Tri::no;
      for (auto &[len, info] : r.holes.by_length)
        if (len % 2 == 1) {
          r.has_odd_hole = Tri::yes;
          if (!r.odd_hole) r.odd_hole = info.witness;
        }
    } else {
      try {
        r.odd_hole = find_odd_hole(g, lim.hole_nodes);
        r.has_odd_hole = r.odd_hole ? Tri::yes : Tri::no;
      } catch (const BudgetExhausted &) {
      }
    }
    for (auto &[len, info] : r.holes.by_length)
      if (len % 2 == 0) {
        r.shortest_even_hole = info.witness;
        break;
      }
    if (!r.shortest_even_hole && ch.hole && ch.hole->size() % 2 == 0 && !r.holes.exhaustive)
      r.shortest_even_hole = ch.hole;
  }
  try {
    r.anti_hole = find_anti_hole(g, lim.hole_nodes);
    r.has_anti_hole = r.anti_hole ? Tri::yes : Tri::no;
  } catch (const BudgetExhausted &) {
  }

  bool odd_anti = r.anti_hole && r.anti_hole->size() % 2 == 1;
  if (r.has_odd_hole == Tri::yes || odd_anti) {
    r.perfect = Tri::no;
  } else if (r.has_odd_hole == Tri::no) {
    if (r.has_anti_hole == Tri::no) {
      r.perfect = Tri::yes;
    } else {
      try {
        r.perfect = find_odd_anti_hole(g, lim.hole_nodes) ? Tri::no : Tri::yes;
      } catch (const BudgetExhausted &) {
      }
    }
  }
  return r;
}

} // namespace pgk

#endif
