#ifndef PGK_HAMILTONIAN_HPP
#define PGK_HAMILTONIAN_HPP

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "pgk/budget.hpp"
#include "pgk/graph.hpp"

namespace pgk {

enum class Tri { no, yes, unknown };

inline const char *to_string(Tri t) {
  switch (t) {
  case Tri::yes: return "true";
  case Tri::no: return "false";
  default: return "unknown";
  }
}

struct HamiltonianResult {
  Tri status = Tri::unknown;
  std::vector<Vertex> cycle; // witness when status == yes, starting at vertex 0
};

namespace detail {

class HamiltonSearch {
public:
  HamiltonSearch(const Graph &g, std::uint64_t budget)
      : g_(g), n_(g.order()), counter_(budget, "is_hamiltonian"), check_connectivity_(n_ <= 256) {}

  bool run() {
    free_ = Bitset(n_, true);
    free_.reset(0);
    usable_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) usable_[v] = static_cast<int>(g_.degree(v));
    path_ = {0};
    return extend();
  }

  const std::vector<Vertex> &path() const { return path_; }

private:
  const Graph &g_;
  std::size_t n_;
  NodeCounter counter_;
  bool check_connectivity_; // a bitset BFS per node; too slow on large graphs
  Bitset free_;
  // usable_[x]: neighbours of x that are unvisited, the start, or the path end.
  std::vector<int> usable_;
  std::vector<Vertex> path_;

  // The rest of the cycle runs from the path end through every unvisited
  // vertex back to the start, so those must be connected outside the path.
  bool rest_connected() const {
    const Vertex end = path_.back();
    Bitset seen(n_), frontier(n_);
    frontier.set(end);
    seen.set(end);
    bool start_reached = false;
    while (frontier.any()) {
      Bitset next(n_);
      frontier.for_each([&](Vertex v) {
        next |= g_.neighbors(v) & free_;
        if (g_.adjacent(v, 0)) start_reached = true;
      });
      next -= seen;
      seen |= next;
      frontier = std::move(next);
    }
    return start_reached && free_.is_subset_of(seen);
  }

  // Stepping from u makes u interior. Every unvisited neighbour of u still
  // needs two usable neighbours, and the start needs one.
  bool retire(Vertex u) {
    bool ok = true;
    g_.neighbors(u).for_each([&](Vertex x) {
      if (--usable_[x] < 2 && free_.test(x)) ok = false;
    });
    return ok && usable_[0] >= 1;
  }

  void restore(Vertex u) {
    g_.neighbors(u).for_each([&](Vertex x) { ++usable_[x]; });
  }

  bool extend() {
    counter_.tick();
    const Vertex u = path_.back();
    if (path_.size() == n_) return g_.adjacent(u, 0);
    std::vector<Vertex> cand = (g_.neighbors(u) & free_).to_vector();
    std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return usable_[a] < usable_[b]; });
    for (Vertex w : cand) {
      free_.reset(w);
      path_.push_back(w);
      bool ok = (u == 0) ? true : retire(u);
      if (ok && check_connectivity_ && path_.size() < n_) ok = rest_connected();
      if (ok && extend()) return true;
      if (u != 0) restore(u);
      path_.pop_back();
      free_.set(w);
    }
    return false;
  }
};

// For each vertex v, the number of components of g - removed - v, computed
// with Tarjan lowpoints (iteratively). Entries for removed vertices are 0.
inline std::vector<std::size_t> components_after_deleting(const Graph &g, const Bitset &removed) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> split(n, 0); // children cut off below v
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  std::vector<Vertex> roots;
  int time = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0 || removed.test(root)) continue;
    roots.push_back(root);
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      auto &[v, from] = stack.back();
      std::size_t w = g.neighbors(v).find_next(from);
      while (w < n && removed.test(w)) w = g.neighbors(v).find_next(w + 1);
      if (w < n) {
        from = w + 1;
        Vertex u = static_cast<Vertex>(w);
        if (disc[u] < 0) {
          parent[u] = v;
          disc[u] = low[u] = time++;
          stack.emplace_back(u, 0);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        Vertex done = v;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().first;
          low[p] = std::min(low[p], low[done]);
          if (low[done] >= disc[p]) ++split[p];
        }
      }
    }
  }
  const std::size_t base = roots.size();
  std::vector<std::size_t> out(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (removed.test(v)) continue;
    bool is_root = std::find(roots.begin(), roots.end(), v) != roots.end();
    // A root's component is replaced by its child subtrees; any other vertex
    // splits off `split` subtrees and keeps the part containing its parent.
    out[v] = is_root ? base - 1 + split[v] : base + split[v];
  }
  return out;
}

// Number of connected components of g minus the vertices in `removed`.
inline std::size_t components_without(const Graph &g, const Bitset &removed) {
  Bitset left = ~removed;
  std::size_t k = 0;
  for (std::size_t s = left.find_first(); s < g.order(); s = left.find_next(s)) {
    ++k;
    Bitset frontier(g.order());
    frontier.set(s);
    left.reset(s);
    while (frontier.any()) {
      Bitset next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v) & left; });
      left -= next;
      frontier = std::move(next);
    }
  }
  return k;
}

} // namespace detail

inline HamiltonianResult is_hamiltonian(const Graph &g, std::uint64_t budget = Limits{}.hamiltonian_nodes) {
  const std::size_t n = g.order();
  HamiltonianResult r;
  r.status = Tri::no;
  if (n < 3 || !is_connected(g)) return r;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 2) return r;
  // Deleting any k vertices of a Hamiltonian graph leaves at most k
  // components. Tested for every single vertex and, on small graphs, every
  // pair; larger graphs try the k highest-degree vertices instead.
  Bitset none(n);
  for (std::size_t c : detail::components_after_deleting(g, none))
    if (c > 1) return r;
  if (n <= 1024) {
    for (Vertex a = 0; a < n; ++a) {
      Bitset gone(n);
      gone.set(a);
      for (std::size_t c : detail::components_after_deleting(g, gone))
        if (c > 2) return r;
    }
  }
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  Bitset cut(n);
  for (std::size_t k = 1; k < std::min<std::size_t>(n - 1, 64); ++k) {
    cut.set(by_degree[k - 1]);
    if (detail::components_without(g, cut) > k) return r;
  }
  detail::HamiltonSearch s(g, budget);
  try {
    if (s.run()) {
      r.status = Tri::yes;
      r.cycle = s.path();
    }
  } catch (const BudgetExhausted &) {
    r.status = Tri::unknown;
  }
  return r;
}

inline bool is_hamiltonian_cycle(const Graph &g, const std::vector<Vertex> &cycle) {
  if (cycle.size() != g.order() || cycle.size() < 3) return false;
  return is_cycle(g, cycle);
}

} // namespace pgk

#endif
