#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <numeric>
#include <random>

#include "pgk/structure.hpp"

using namespace pgk;

namespace {

// Random base graph with each vertex blown up into a class of true or false
// twins, so that twin compression in the hole search gets exercised.
Graph twinned_graph(std::size_t base, std::size_t total, std::mt19937 &rng) {
  std::bernoulli_distribution coin(0.45);
  std::vector<std::vector<bool>> adj(base, std::vector<bool>(base, false));
  for (std::size_t u = 0; u < base; ++u)
    for (std::size_t v = u + 1; v < base; ++v) adj[u][v] = adj[v][u] = coin(rng);
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < total; ++i) owner.push_back(i < base ? i : rng() % base);
  std::vector<bool> true_twins(base);
  for (std::size_t i = 0; i < base; ++i) true_twins[i] = coin(rng);
  Graph g(total);
  for (Vertex u = 0; u < total; ++u)
    for (Vertex v = u + 1; v < total; ++v) {
      std::size_t a = owner[u], b = owner[v];
      if (a == b ? true_twins[a] : adj[a][b]) g.add_edge(u, v);
    }
  return g;
}

// Induced cycles of length >= 4 by growing vertex sets whose induced degrees
// stay at most 2.
std::map<std::size_t, std::size_t> brute_hole_counts(const Graph &g, std::size_t max_len) {
  std::map<std::size_t, std::size_t> out;
  const std::size_t n = g.order();
  std::vector<Vertex> chosen;
  std::vector<int> deg(n, 0);
  std::function<void(Vertex)> grow = [&](Vertex from) {
    if (chosen.size() >= 4) {
      bool cycle = std::all_of(chosen.begin(), chosen.end(), [&](Vertex v) { return deg[v] == 2; });
      if (cycle && is_connected(g.induced(chosen))) ++out[chosen.size()];
    }
    if (chosen.size() == max_len) return;
    for (Vertex v = from; v < n; ++v) {
      bool ok = true;
      int dv = 0;
      for (Vertex u : chosen)
        if (g.adjacent(u, v)) {
          ++dv;
          if (deg[u] == 2) ok = false;
        }
      if (!ok || dv > 2) continue;
      for (Vertex u : chosen)
        if (g.adjacent(u, v)) ++deg[u];
      deg[v] = dv;
      chosen.push_back(v);
      grow(v + 1);
      chosen.pop_back();
      for (Vertex u : chosen)
        if (g.adjacent(u, v)) --deg[u];
      deg[v] = 0;
    }
  };
  grow(0);
  return out;
}

std::map<std::size_t, std::size_t> hole_counts(const Graph &g) {
  std::map<std::size_t, std::size_t> out;
  for (const auto &h : find_holes(g, HoleQuery{})) {
    EXPECT_TRUE(is_hole(g, h));
    EXPECT_EQ(h, canonical_cycle(h));
    ++out[h.size()];
  }
  return out;
}

bool brute_hamiltonian(const Graph &g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_cycle(g, p)) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

std::vector<Vertex> cyclic_hole(std::initializer_list<u64> ks) { return std::vector<Vertex>(ks.begin(), ks.end()); }

} // namespace

TEST(Holes, MatchSubsetSearchOnTwinnedGraphs) {
  std::mt19937 rng(17);
  for (int t = 0; t < 80; ++t) {
    Graph g = twinned_graph(5 + t % 4, 9 + t % 6, rng);
    EXPECT_EQ(hole_counts(g), brute_hole_counts(g, g.order()));
    auto s = summarize_holes(g);
    ASSERT_TRUE(s.exhaustive);
    std::map<std::size_t, std::size_t> counts;
    for (auto &[len, info] : s.by_length) {
      counts[len] = info.count;
      EXPECT_TRUE(is_hole(g, info.witness));
    }
    EXPECT_EQ(counts, brute_hole_counts(g, g.order()));
  }
}

TEST(Holes, PowerGraphOfZ30) {
  auto g = build_cyclic(30);
  auto pg = build_power_graph(g);
  auto brute = brute_hole_counts(pg.graph, 8);
  auto s = summarize_holes(pg.graph);
  ASSERT_TRUE(s.exhaustive);
  std::map<std::size_t, std::size_t> counts;
  for (auto &[len, info] : s.by_length) counts[len] = info.count;
  EXPECT_EQ(counts, brute);
  EXPECT_GT(counts[6], 0u);
}

TEST(Holes, QueryFiltersAndBudget) {
  auto pg = build_power_graph(build_cyclic(210));
  HoleQuery q;
  q.min_length = 8;
  q.max_length = 8;
  auto eight = find_holes(pg.graph, q, 5);
  EXPECT_EQ(eight.size(), 5u);
  for (const auto &h : eight) EXPECT_EQ(h.size(), 8u);
  q = HoleQuery{};
  q.parity = Parity::odd;
  EXPECT_TRUE(find_holes(pg.graph, q).empty());
  q.budget = 100;
  q.parity = Parity::any;
  EXPECT_THROW(find_holes(pg.graph, q), BudgetExhausted);
}

TEST(Chordal, AgreesWithHoleSearch) {
  std::mt19937 rng(23);
  for (int t = 0; t < 120; ++t) {
    Graph g = twinned_graph(4 + t % 5, 6 + t % 8, rng);
    auto r = is_chordal(g);
    EXPECT_EQ(r.chordal, brute_hole_counts(g, g.order()).empty());
    if (r.chordal) {
      EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
    } else {
      ASSERT_TRUE(r.hole);
      EXPECT_TRUE(is_hole(g, *r.hole));
    }
  }
}

TEST(Chordal, CyclicExamples) {
  EXPECT_TRUE(is_chordal(build_power_graph(build_cyclic(12)).graph).chordal);
  EXPECT_TRUE(is_chordal(build_power_graph(build_cyclic(72)).graph).chordal == false);
  auto r = is_chordal(build_power_graph(build_cyclic(36)).graph);
  ASSERT_FALSE(r.chordal);
  EXPECT_EQ(r.hole->size(), 4u);
}

TEST(Claw, AgreesWithFourSubsets) {
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    Graph g = twinned_graph(4 + t % 4, 6 + t % 6, rng);
    bool claw = false;
    const std::size_t n = g.order();
    for (Vertex c = 0; c < n && !claw; ++c)
      for (Vertex a = 0; a < n && !claw; ++a)
        for (Vertex b = a + 1; b < n && !claw; ++b)
          for (Vertex d = b + 1; d < n && !claw; ++d) {
            std::vector<Vertex> leaves{a, b, d};
            if (std::find(leaves.begin(), leaves.end(), c) != leaves.end()) continue;
            claw = g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && g.is_independent(leaves);
          }
    auto r = is_claw_free(g);
    EXPECT_EQ(r.claw_free, !claw);
    if (r.claw) {
      auto [c, a, b, d] = *r.claw;
      EXPECT_TRUE(g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d));
      EXPECT_TRUE(g.is_independent(std::vector<Vertex>{a, b, d}));
    }
  }
}

TEST(Simplicial, MatchesDefinition) {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    Graph g = twinned_graph(5, 10, rng);
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(is_simplicial(g, v), g.is_clique(g.neighbors(v).to_vector()));
  }
}

TEST(Hamiltonian, AgreesWithPermutationSearch) {
  std::mt19937 rng(37);
  for (int t = 0; t < 150; ++t) {
    Graph g = twinned_graph(3 + t % 4, 4 + t % 6, rng);
    auto r = is_hamiltonian(g);
    ASSERT_NE(r.status, Tri::unknown);
    EXPECT_EQ(r.status == Tri::yes, brute_hamiltonian(g));
    if (r.status == Tri::yes) {
      EXPECT_TRUE(is_hamiltonian_cycle(g, r.cycle));
    }
  }
}

TEST(Hamiltonian, CyclicPowerGraphs) {
  EXPECT_EQ(is_hamiltonian(build_power_graph(build_cyclic(2)).graph).status, Tri::no);
  for (u64 n = 3; n <= 40; ++n) {
    auto pg = build_power_graph(build_cyclic(n));
    auto r = is_hamiltonian(pg.graph);
    ASSERT_EQ(r.status, Tri::yes) << n;
    EXPECT_TRUE(is_hamiltonian_cycle(pg.graph, r.cycle));
  }
  // Z_2 x Z_2 is a star.
  EXPECT_EQ(is_hamiltonian(build_power_graph(build_group("prod:2x2")).graph).status, Tri::no);
}

TEST(Hamiltonian, LiftFromClassGraph) {
  for (const char *s : {"zn:12", "zn:30", "prod:3x9", "un:35"}) {
    auto g = build_group(s);
    CyclicClassGraph cg(g);
    auto hc = is_hamiltonian(cg.undirected());
    if (hc.status != Tri::yes) continue;
    auto lift = hamiltonian_lift(cg, hc.cycle);
    EXPECT_TRUE(is_hamiltonian_cycle(build_power_graph(g).graph, lift)) << s;
  }
  CyclicClassGraph cg(build_cyclic(12));
  EXPECT_THROW(hamiltonian_lift(cg, {0, 1, 2}), InvalidArgument);
}

TEST(EvenHoles, Constructions) {
  auto four = construct_even_hole_cyclic({2, 3}, 4);
  EXPECT_EQ(four.modulus, 36u);
  EXPECT_EQ(four.vertices, (std::vector<u64>{2, 18, 3, 12}));
  EXPECT_EQ(construct_even_hole_cyclic({2, 3, 5}, 6).modulus, 30u);
  auto eight = construct_even_hole_cyclic({2, 3, 5, 7}, 8);
  EXPECT_EQ(eight.modulus, 210u);
  std::vector<Vertex> vs(eight.vertices.begin(), eight.vertices.end());
  EXPECT_TRUE(is_hole(build_power_graph(build_cyclic(210)).graph, vs));

  EXPECT_THROW(construct_even_hole_cyclic({2, 4}, 4), InvalidArgument);
  EXPECT_THROW(construct_even_hole_cyclic({3, 3}, 4), InvalidArgument);
  EXPECT_THROW(construct_even_hole_cyclic({2, 3}, 6), InvalidArgument);
  EXPECT_THROW(construct_even_hole_cyclic({2, 3, 5}, 5), InvalidArgument);
  EXPECT_THROW(construct_even_hole_cyclic({2, 3, 5, 7, 11}, 10, 1000), CapExceeded);
}

TEST(EvenHoles, ExplicitProductHole) {
  auto g = build_group("prod:12x12");
  auto pg = build_power_graph(g);
  std::vector<std::array<u64, 2>> tuples{{1, 0}, {2, 0}, {1, 6}, {3, 6}, {1, 2}, {2, 4}, {1, 8}, {3, 0}};
  std::vector<Vertex> hole;
  for (auto t : tuples) hole.push_back(g.from_tuple(t));
  EXPECT_TRUE(is_hole(pg.graph, hole));
}

TEST(PrimeNecessity, HoldsOnConstructionsAndFailsOnZ180) {
  EXPECT_TRUE(verify_hole_prime_necessity(210, cyclic_hole({2, 6, 3, 15, 5, 35, 7, 14})));
  // The 8-hole 4-12-6-18-9-45-5-20 of Z_180 uses only three primes.
  auto pg = build_power_graph(build_cyclic(180));
  auto h = cyclic_hole({4, 12, 6, 18, 9, 45, 5, 20});
  EXPECT_TRUE(is_hole(pg.graph, h));
  EXPECT_FALSE(verify_hole_prime_necessity(180, h));
}

TEST(OutVertexOrders, SourcesAreNotPrimePowers) {
  auto g = build_cyclic(210);
  auto dg = build_directed_power_graph(g);
  auto roles = hole_out_vertex_orders(g, dg, cyclic_hole({2, 6, 3, 15, 5, 35, 7, 14}));
  ASSERT_EQ(roles.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(roles[i].role, i % 2 == 0 ? HoleRole::source : HoleRole::sink);
    EXPECT_EQ(roles[i].order, 210 / std::gcd<u64>(roles[i].vertex, 210));
  }
  EXPECT_EQ(roles[0].order, 105u);
  EXPECT_FALSE(roles[0].prime_power_order);
  EXPECT_THROW(hole_out_vertex_orders(g, dg, cyclic_hole({2, 6, 3, 15})), InvalidArgument);
}

TEST(Simplicial, CyclicGcdAndParentChild) {
  for (u64 n : {12u, 18u, 20u, 36u, 72u, 100u}) {
    auto g = build_cyclic(n);
    auto pg = build_power_graph(g);
    for (u64 k = 0; k < n; ++k) EXPECT_TRUE(simplicial_gcd_check(pg.graph, n, k));
    CyclicClassGraph cg(g);
    for (std::size_t c = 0; c < cg.size(); ++c) {
      if (c == cg.identity_class() || cg.at(c).subgroup_order == n) continue;
      auto pc = class_parent_child_simplicial(cg, c, n);
      EXPECT_EQ(pc.simplicial, pc.one_parent_one_child()) << n << " class " << c;
    }
  }
  EXPECT_THROW(simplicial_gcd_check(build_power_graph(build_cyclic(16)).graph, 16, 1), InvalidArgument);
  EXPECT_TRUE(simplicial_vertices(build_power_graph(build_cyclic(30)).graph).empty());
}

TEST(AntiHoles, ComplementOfOddCycle) {
  Graph c7(7);
  for (Vertex i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
  auto anti = find_odd_anti_hole(c7.complement());
  ASSERT_TRUE(anti);
  EXPECT_EQ(anti->size(), 7u);
  EXPECT_FALSE(find_anti_hole(build_power_graph(build_cyclic(60)).graph));
}

TEST(StructureReport, Z36) {
  auto r = structure_report(build_power_graph(build_cyclic(36)).graph);
  EXPECT_FALSE(r.chordal);
  EXPECT_TRUE(r.holes.exhaustive);
  ASSERT_TRUE(r.shortest_even_hole);
  EXPECT_EQ(r.shortest_even_hole->size(), 4u);
  EXPECT_EQ(r.has_odd_hole, Tri::no);
  EXPECT_EQ(r.perfect, Tri::yes);
  EXPECT_EQ(r.hamiltonian.status, Tri::yes);
  EXPECT_FALSE(r.planar);
}

TEST(Structure, ListedValues) {
  auto pg30 = build_power_graph(build_cyclic(30)).graph;
  auto pg36 = build_power_graph(build_cyclic(36)).graph;
  EXPECT_TRUE(is_hole(pg36, cyclic_hole({2, 18, 3, 12})));
  EXPECT_TRUE(is_hole(pg30, cyclic_hole({2, 6, 3, 15, 5, 10})));
  auto holes30 = find_holes(pg30, HoleQuery{});
  EXPECT_NE(std::find(holes30.begin(), holes30.end(), cyclic_hole({2, 6, 3, 15, 5, 10})), holes30.end());
  for (u64 n : {8u, 27u, 32u, 49u, 81u, 125u}) EXPECT_TRUE(find_holes(build_power_graph(build_cyclic(n)).graph, HoleQuery{}).empty());

  EXPECT_EQ(construct_even_hole_cyclic({2, 3, 5}, 6).vertices, (std::vector<u64>{2, 6, 3, 15, 5, 10}));
  EXPECT_TRUE(verify_hole_prime_necessity(30, cyclic_hole({2, 6, 3, 15, 5, 10})));
  EXPECT_TRUE(verify_hole_prime_necessity(36, cyclic_hole({2, 18, 3, 12})));
  EXPECT_FALSE(verify_hole_prime_necessity(144, std::vector<Vertex>(8, 0)));

  EXPECT_TRUE(find_anti_holes(pg30).empty());
  EXPECT_TRUE(find_anti_holes(build_power_graph(build_group("un:60")).graph).empty());
  Graph c7(7);
  for (Vertex i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
  EXPECT_EQ(find_anti_holes(c7.complement()).size(), 1u);

  auto pg12 = build_power_graph(build_cyclic(12)).graph;
  EXPECT_TRUE(is_chordal(pg12).chordal);
  auto r36 = is_chordal(pg36);
  ASSERT_TRUE(r36.hole);
  EXPECT_EQ(*r36.hole, canonical_cycle(cyclic_hole({2, 18, 3, 12})));
  Graph k5(5);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  EXPECT_TRUE(is_chordal(k5).chordal);
  EXPECT_EQ(simplicial_vertices(k5).size(), 5u);
  EXPECT_TRUE(is_claw_free(k5).claw_free);
  EXPECT_TRUE(is_complete(k5));

  EXPECT_FALSE(is_simplicial(pg12, 6));
  EXPECT_TRUE(simplicial_vertices(build_power_graph(build_cyclic(60)).graph).empty());
  EXPECT_TRUE(std::gcd<u64>(6, 12) != 1);
  for (u64 k = 0; k < 30; ++k) EXPECT_TRUE(simplicial_gcd_check(pg30, 30, k));

  CyclicClassGraph c36(build_cyclic(36));
  EXPECT_TRUE(class_parent_child_simplicial(c36, c36.class_of(9), 36).simplicial);  // <9> has order 4
  EXPECT_TRUE(class_parent_child_simplicial(c36, c36.class_of(4), 36).simplicial);  // <4> has order 9
  CyclicClassGraph c60(build_cyclic(60));
  for (std::size_t c = 0; c < c60.size(); ++c) {
    if (c == c60.identity_class() || c60.at(c).subgroup_order == 60) continue;
    auto pc = class_parent_child_simplicial(c60, c, 60);
    if (pc.parents >= 2) {
      EXPECT_FALSE(pc.simplicial);
    }
  }
  CyclicClassGraph c49(build_cyclic(49));
  auto mid = class_parent_child_simplicial(c49, c49.class_of(7), 49);
  EXPECT_TRUE(mid.simplicial);
  EXPECT_TRUE(mid.one_parent_one_child());

  CyclicClassGraph cc30(build_cyclic(30));
  EXPECT_EQ(is_claw_free(pg30).claw_free, is_claw_free(cc30.undirected()).claw_free);
  Graph star(4);
  for (Vertex v = 1; v < 4; ++v) star.add_edge(0, v);
  EXPECT_FALSE(is_claw_free(star).claw_free);

  auto z6 = build_cyclic(6);
  auto pg6 = build_power_graph(z6).graph;
  EXPECT_TRUE(is_hamiltonian_cycle(pg6, {1, 5, 2, 4, 0, 3}));
  EXPECT_EQ(is_hamiltonian(pg6).status, Tri::yes);
  CyclicClassGraph c6(z6);
  std::vector<Vertex> class_cycle;
  for (Element rep : {1u, 2u, 0u, 3u}) class_cycle.push_back(static_cast<Vertex>(c6.class_of(rep)));
  EXPECT_EQ(hamiltonian_lift(c6, class_cycle), (std::vector<Element>{1, 5, 2, 4, 0, 3}));
  auto z18 = build_cyclic(18);
  CyclicClassGraph c18(z18);
  auto h18 = is_hamiltonian(c18.undirected());
  ASSERT_EQ(h18.status, Tri::yes);
  auto lift18 = hamiltonian_lift(c18, h18.cycle);
  EXPECT_EQ(lift18.size(), 18u);
  EXPECT_TRUE(is_hamiltonian_cycle(build_power_graph(z18).graph, lift18));
  CyclicClassGraph c2(build_cyclic(2));
  EXPECT_THROW(hamiltonian_lift(c2, {0, 1}), InvalidArgument);

  EXPECT_FALSE(is_planar(build_power_graph(build_cyclic(9)).graph));
  EXPECT_TRUE(is_planar(CyclicClassGraph(build_cyclic(9)).undirected()));
  EXPECT_TRUE(is_planar(build_power_graph(build_group("un:16")).graph));
  EXPECT_TRUE(is_complete(build_power_graph(build_cyclic(27)).graph));
  EXPECT_FALSE(is_complete(pg6));
}

TEST(OutVertexOrders, ListedHoles) {
  auto z30 = build_cyclic(30);
  auto roles30 = hole_out_vertex_orders(z30, build_directed_power_graph(z30), cyclic_hole({2, 6, 3, 15, 5, 10}));
  std::vector<std::pair<Element, std::size_t>> sources;
  for (const auto &r : roles30)
    if (r.role == HoleRole::source) {
      sources.emplace_back(r.vertex, r.order);
      EXPECT_FALSE(r.prime_power_order);
    }
  EXPECT_EQ(sources, (std::vector<std::pair<Element, std::size_t>>{{2, 15}, {3, 10}, {5, 6}}));

  auto z36 = build_cyclic(36);
  auto roles36 = hole_out_vertex_orders(z36, build_directed_power_graph(z36), cyclic_hole({2, 18, 3, 12}));
  EXPECT_EQ(roles36[0].role, HoleRole::source);
  EXPECT_EQ(roles36[0].order, 18u);
  EXPECT_EQ(roles36[2].role, HoleRole::source);
  EXPECT_EQ(roles36[2].order, 12u);
  EXPECT_EQ(roles36[1].role, HoleRole::sink);
  EXPECT_EQ(roles36[1].order, 2u);
  EXPECT_TRUE(roles36[1].prime_power_order);
}

TEST(Mirrors, ClassGraphAgreesOnCyclicGroups) {
  for (u64 n = 1; n <= 100; ++n) {
    auto g = build_cyclic(n);
    auto pg = build_power_graph(g).graph;
    CyclicClassGraph cg(g);
    const Graph &c = cg.undirected();
    EXPECT_EQ(is_chordal(pg).chordal, is_chordal(c).chordal) << n;
    EXPECT_EQ(is_claw_free(pg).claw_free, is_claw_free(c).claw_free) << n;
    EXPECT_EQ(is_complete(pg), is_complete(c)) << n;
    for (Element x = 0; x < n; ++x)
      EXPECT_EQ(is_simplicial(pg, x), is_simplicial(c, static_cast<Vertex>(cg.class_of(x)))) << n << " " << x;
  }
}
