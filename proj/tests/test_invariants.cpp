#include <gtest/gtest.h>

#include <bit>
#include <functional>
#include <random>
#include <set>

#include "pgk/invariants.hpp"

using namespace pgk;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937 &rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Digraph random_digraph(std::size_t n, double p, std::mt19937 &rng) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) out.push_back(v);
  return out;
}

std::size_t brute_omega(const Graph &g) {
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) > best && g.is_clique(members(m)))
      best = static_cast<std::size_t>(std::popcount(m));
  return best;
}

bool colourable(const Graph &g, std::size_t k) {
  std::vector<int> col(g.order(), -1);
  std::function<bool(Vertex)> go = [&](Vertex v) {
    if (v == g.order()) return true;
    for (int c = 0; c < static_cast<int>(k); ++c) {
      bool ok = true;
      for (Vertex u = 0; u < v; ++u)
        if (g.adjacent(u, v) && col[u] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      if (go(v + 1)) return true;
    }
    col[v] = -1;
    return false;
  };
  return go(0);
}

std::size_t brute_chi(const Graph &g) {
  std::size_t k = 0;
  while (!colourable(g, k)) ++k;
  return k;
}

std::size_t dfs_longest_path(const Digraph &d) {
  std::size_t best = 0;
  std::vector<bool> used(d.order(), false);
  std::function<void(Vertex, std::size_t)> go = [&](Vertex v, std::size_t len) {
    best = std::max(best, len);
    d.out_neighbors(v).for_each([&](Vertex w) {
      if (used[w]) return;
      used[w] = true;
      go(w, len + 1);
      used[w] = false;
    });
  };
  for (Vertex v = 0; v < d.order(); ++v) {
    used[v] = true;
    go(v, 1);
    used[v] = false;
  }
  return best;
}

} // namespace

TEST(Clique, MatchesSubsetSearch) {
  std::mt19937 rng(7);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = 1 + t % 14;
    Graph g = random_graph(n, 0.2 + 0.6 * (t % 5) / 4.0, rng);
    auto c = max_clique(g);
    EXPECT_TRUE(g.is_clique(c));
    EXPECT_EQ(c.size(), brute_omega(g));
    auto i = max_independent_set(g);
    EXPECT_TRUE(g.is_independent(i));
    EXPECT_EQ(i.size(), brute_omega(g.complement()));
    EXPECT_EQ(max_independent_set(g, Limits{}.clique_nodes, false).size(), i.size());
  }
}

TEST(Colouring, MatchesBacktracking) {
  std::mt19937 rng(11);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 1 + t % 12;
    Graph g = random_graph(n, 0.15 + 0.7 * (t % 4) / 3.0, rng);
    auto c = chromatic_number(g);
    EXPECT_TRUE(is_proper_colouring(g, c));
    EXPECT_EQ(c.colours, brute_chi(g));
  }
}

TEST(Colouring, OddCycleNeedsThree) {
  Graph c5(5);
  for (Vertex i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  EXPECT_EQ(max_clique(c5).size(), 2u);
  EXPECT_EQ(chromatic_number(c5).colours, 3u);
}

TEST(Clique, BudgetIsEnforced) {
  std::mt19937 rng(3);
  Graph g = random_graph(120, 0.5, rng);
  EXPECT_THROW(max_clique(g, 10), BudgetExhausted);
}

TEST(MaximalCliques, MatchSubsetSearch) {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + t % 11;
    Graph g = random_graph(n, 0.5, rng);
    // Add true twins so the quotient path is exercised.
    if (n >= 2) {
      Graph h(n + 1);
      for (auto [a, b] : g.edges()) h.add_edge(a, b);
      g.neighbors(0).for_each([&](Vertex u) { h.add_edge(static_cast<Vertex>(n), u); });
      h.add_edge(0, static_cast<Vertex>(n));
      g = h;
    }
    std::set<std::vector<Vertex>> expected, got;
    for (std::uint32_t m = 1; m < (1U << g.order()); ++m) {
      auto vs = members(m);
      if (!g.is_clique(vs)) continue;
      bool maximal = true;
      for (Vertex v = 0; v < g.order() && maximal; ++v)
        if (!(m >> v & 1U)) {
          auto more = vs;
          more.push_back(v);
          if (g.is_clique(more)) maximal = false;
        }
      if (maximal) expected.insert(vs);
    }
    for_each_maximal_clique(g, [&](const std::vector<Vertex> &c) {
      EXPECT_TRUE(got.insert(c).second);
      return true;
    });
    EXPECT_EQ(got, expected);
  }
}

TEST(LongestPath, SubsetDpMatchesDfs) {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 10;
    Digraph d = random_digraph(n, 0.1 + 0.3 * (t % 3), rng);
    auto p = longest_directed_path_bruteforce(d);
    EXPECT_TRUE(d.is_path(p));
    EXPECT_EQ(p.size(), dfs_longest_path(d));
  }
  EXPECT_THROW(longest_directed_path_bruteforce(Digraph(25)), CapExceeded);
  EXPECT_THROW(longest_directed_path_bruteforce(Digraph(10), 8), CapExceeded);
}

TEST(LongestPath, CyclicConstruction) {
  for (u64 n = 1; n <= 300; ++n) {
    auto dg = build_directed_power_graph(build_cyclic(n));
    auto path = construct_longest_path_cyclic(n);
    EXPECT_EQ(path.size(), nt::psi(n));
    std::vector<Vertex> vs(path.begin(), path.end());
    EXPECT_TRUE(dg.graph.is_path(vs)) << n;
  }
}

TEST(LongestPath, CliqueToPath) {
  for (const char *s : {"zn:36", "prod:4x4", "un:105"}) {
    auto g = build_group(s);
    auto pg = build_power_graph(g);
    auto dg = build_directed_power_graph(g);
    auto c = max_clique(pg.graph);
    auto p = clique_to_directed_path(dg.graph, c);
    EXPECT_EQ(p.size(), c.size());
    EXPECT_TRUE(dg.graph.is_path(p));
  }
}

TEST(Eccentricity, SmallGraphs) {
  Graph p5(5);
  for (Vertex i = 0; i + 1 < 5; ++i) p5.add_edge(i, i + 1);
  auto e = eccentricities(p5);
  EXPECT_EQ(e.radius, 2u);
  EXPECT_EQ(e.diameter, 4u);
  EXPECT_EQ(e.center, (std::vector<Vertex>{2}));
  EXPECT_THROW(eccentricities(Graph(2)), InvalidArgument);
}

TEST(Eccentricity, PowerGraphCenter) {
  auto g = build_cyclic(12);
  auto s = power_graph_eccentricities(build_power_graph(g));
  EXPECT_EQ(s.center, (std::vector<Vertex>{0, 1, 5, 7, 11}));
  EXPECT_EQ(s.radius, 1u);
  EXPECT_EQ(s.diameter, 2u);
}

TEST(Partition, Z12Blocks) {
  auto p = composition_partition(build_cyclic(12));
  std::vector<std::size_t> sizes;
  for (const auto &b : p.blocks) sizes.push_back(b.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 4, 4}));
  EXPECT_EQ(p.blocks[1], (std::vector<Element>{4, 6, 8}));
}

TEST(Partition, LawsHoldOnAbelianGroups) {
  for (u64 n = 1; n <= 60; ++n) {
    auto g = build_cyclic(n);
    EXPECT_TRUE(partition_law_violations(g, build_power_graph(g)).empty()) << n;
  }
  for (const char *s : {"prod:2x2", "prod:2x4", "prod:6x6", "prod:3x9", "un:35", "qn:221"}) {
    auto g = build_group(s);
    EXPECT_TRUE(partition_law_violations(g, build_power_graph(g)).empty()) << s;
  }
}

TEST(Peeling, AgreesWithColouring) {
  for (u64 n = 1; n <= 72; ++n) {
    auto g = build_cyclic(n);
    auto pg = build_power_graph(g);
    EXPECT_EQ(chromatic_via_generator_peeling(g, pg), chromatic_number(pg.graph).colours) << n;
  }
  EXPECT_THROW(chromatic_via_generator_peeling(build_group("prod:2x2"), build_power_graph(build_group("prod:2x2"))),
               InvalidArgument);
}

TEST(CliqueNumber, MaxPsiOfElementOrders) {
  for (const char *s : {"prod:2x2", "prod:6x6", "prod:4x6", "un:63", "un:120", "qn:85"}) {
    auto g = build_group(s);
    EXPECT_EQ(general_group_clique_number(g), max_clique(build_power_graph(g).graph).size()) << s;
  }
}

TEST(Invariants, ListedValues) {
  auto z6 = build_cyclic(6);
  auto pg6 = build_power_graph(z6);
  auto e6 = power_graph_eccentricities(pg6);
  EXPECT_EQ(e6.radius, 1u);
  EXPECT_EQ(e6.diameter, 2u);
  EXPECT_EQ(e6.center, (std::vector<Vertex>{0, 1, 5}));
  EXPECT_EQ(power_graph_eccentricities(build_power_graph(build_cyclic(8))).center.size(), 8u);
  EXPECT_EQ(power_graph_eccentricities(build_power_graph(build_group("prod:2x2"))).center.size(), 1u);

  auto z12 = build_cyclic(12);
  auto pg12 = build_power_graph(z12);
  EXPECT_EQ(max_clique(pg12.graph).size(), 9u);
  EXPECT_EQ(max_clique(build_power_graph(build_cyclic(27)).graph).size(), 27u);
  EXPECT_EQ(max_clique(Graph(4)).size(), 1u);
  EXPECT_EQ(chromatic_number(pg12.graph).colours, 9u);
  EXPECT_EQ(chromatic_number(build_power_graph(build_cyclic(18)).graph).colours, 15u);
  Graph k6(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) k6.add_edge(u, v);
  EXPECT_EQ(chromatic_number(k6).colours, 6u);
  EXPECT_EQ(max_independent_set(k6).size(), 1u);
  EXPECT_EQ(chromatic_via_generator_peeling(z12, pg12), 9u);
  auto z13 = build_cyclic(13);
  EXPECT_EQ(chromatic_via_generator_peeling(z13, build_power_graph(z13)), 13u);
  auto z18 = build_cyclic(18);
  EXPECT_EQ(chromatic_via_generator_peeling(z18, build_power_graph(z18)), 15u);

  auto alpha6 = max_independent_set(pg6.graph);
  EXPECT_EQ(alpha6, (std::vector<Vertex>{2, 3}));
  auto z30 = build_cyclic(30);
  CyclicClassGraph c30(z30);
  EXPECT_EQ(max_independent_set(build_power_graph(z30).graph, Limits{}.clique_nodes, false).size(),
            max_independent_set(c30.undirected(), Limits{}.clique_nodes, false).size());

  EXPECT_EQ(longest_directed_path_bruteforce(build_directed_power_graph(z12).graph).size(), 9u);
  EXPECT_EQ(longest_directed_path_bruteforce(build_directed_power_graph(build_cyclic(7)).graph).size(), 7u);
  EXPECT_EQ(longest_directed_path_bruteforce(Digraph(1)).size(), 1u);
  EXPECT_EQ(construct_longest_path_cyclic(12), (std::vector<u64>{1, 5, 7, 11, 2, 10, 4, 8, 0}));
  EXPECT_EQ(construct_longest_path_cyclic(7).size(), 7u);
  auto p18 = construct_longest_path_cyclic(18);
  EXPECT_EQ(p18.size(), 15u);
  EXPECT_EQ(p18.back(), 0u);

  auto dg6 = build_directed_power_graph(z6);
  auto path6 = clique_to_directed_path(dg6.graph, {1, 5, 2, 4, 0});
  EXPECT_EQ(path6.size(), 5u);
  EXPECT_TRUE(dg6.graph.is_path(path6));
  EXPECT_EQ(clique_to_directed_path(dg6.graph, {3}), (std::vector<Vertex>{3}));
  std::vector<Vertex> all27(27);
  std::iota(all27.begin(), all27.end(), 0);
  auto dg27 = build_directed_power_graph(build_cyclic(27));
  EXPECT_TRUE(dg27.graph.is_path(clique_to_directed_path(dg27.graph, all27)));

  EXPECT_EQ(general_group_clique_number(build_group("prod:2x2")), 2u);
  auto big = build_group("prod:12x12");
  EXPECT_EQ(general_group_clique_number(big), 9u);
  EXPECT_EQ(max_clique(build_power_graph(big).graph).size(), 9u);

  auto part = composition_partition(z12);
  EXPECT_EQ(part.blocks[2], (std::vector<Element>{2, 3, 9, 10}));
  EXPECT_EQ(part.blocks[3], (std::vector<Element>{1, 5, 7, 11}));
  auto p7 = composition_partition(build_cyclic(7));
  EXPECT_EQ(p7.blocks.size(), 2u);
  EXPECT_EQ(p7.blocks[1].size(), 6u);
  auto klein = build_group("prod:2x2");
  auto pk = composition_partition(klein);
  EXPECT_EQ(pk.blocks[1].size(), 3u);
  EXPECT_FALSE(build_power_graph(klein).graph.is_clique(pk.blocks[pk.top()]));
}

TEST(Invariants, PathCliqueAndPerfectEqualityOnSmallGroups) {
  for (const char *s : {"zn:12", "zn:18", "zn:24", "prod:2x2", "prod:2x4", "prod:2x6", "prod:3x6", "un:24", "un:35", "qn:85"}) {
    auto g = build_group(s);
    auto pg = build_power_graph(g);
    auto dg = build_directed_power_graph(g);
    auto w = max_clique(pg.graph).size();
    EXPECT_EQ(longest_directed_path_bruteforce(dg.graph).size(), w) << s;
    EXPECT_EQ(chromatic_number(pg.graph).colours, w) << s;
    for_each_maximal_clique(pg.graph, [&](const std::vector<Vertex> &c) {
      EXPECT_TRUE(dg.graph.is_path(clique_to_directed_path(dg.graph, c)));
      return true;
    });
  }
}
