#ifndef PGK_CLIQUE_HPP
#define PGK_CLIQUE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "pgk/budget.hpp"
#include "pgk/graph.hpp"

namespace pgk {

namespace detail {

// Sequential greedy colouring of the vertices of `p`, smallest index first.
// Fills `order` by ascending colour; `colour[i]` is the colour count up to and
// including order[i]. Classic bound for clique branch-and-bound.
inline void colour_sort(const Graph &g, const Bitset &p, std::vector<Vertex> &order, std::vector<unsigned> &colour) {
  order.clear();
  colour.clear();
  Bitset uncoloured = p;
  unsigned k = 0;
  while (uncoloured.any()) {
    ++k;
    Bitset q = uncoloured;
    for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
      q -= g.neighbors(static_cast<Vertex>(v));
      uncoloured.reset(v);
      order.push_back(static_cast<Vertex>(v));
      colour.push_back(k);
    }
  }
}

inline unsigned greedy_colour_count(const Graph &g, Bitset p) {
  unsigned k = 0;
  while (p.any()) {
    ++k;
    Bitset q = p;
    for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
      q -= g.neighbors(static_cast<Vertex>(v));
      p.reset(v);
    }
  }
  return k;
}

class CliqueSearch {
public:
  CliqueSearch(const Graph &g, std::uint64_t budget) : g_(g), counter_(budget, "max_clique") {}

  std::size_t omega() {
    const std::size_t n = g_.order();
    if (n == 0) return 0;
    Bitset all(n, true);
    ub_ = greedy_colour_count(g_, all);
    std::vector<Vertex> r;
    expand(all, r);
    return best_;
  }

  // Lexicographically smallest clique of exactly `target` vertices, as a
  // sorted list, or empty if none exists.
  std::vector<Vertex> lexmin(std::size_t target) {
    std::vector<Vertex> r;
    if (target == 0) return r;
    Bitset all(g_.order(), true);
    if (lex(all, r, target)) return r;
    return {};
  }

private:
  void expand(Bitset p, std::vector<Vertex> &r) {
    counter_.tick();
    std::vector<Vertex> order;
    std::vector<unsigned> colour;
    colour_sort(g_, p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (best_ >= ub_) return;
      if (r.size() + colour[i] <= best_) return;
      Vertex v = order[i];
      r.push_back(v);
      Bitset np = p & g_.neighbors(v);
      if (np.none()) {
        best_ = std::max(best_, r.size());
      } else {
        expand(std::move(np), r);
      }
      r.pop_back();
      p.reset(v);
    }
  }

  bool lex(Bitset p, std::vector<Vertex> &r, std::size_t target) {
    counter_.tick();
    if (r.size() == target) return true;
    if (r.size() + p.count() < target) return false;
    if (r.size() + greedy_colour_count(g_, p) < target) return false;
    for (std::size_t v = p.find_first(); v < p.size(); v = p.find_first()) {
      p.reset(v);
      Bitset np = p & g_.neighbors(static_cast<Vertex>(v));
      r.push_back(static_cast<Vertex>(v));
      if (lex(std::move(np), r, target)) return true;
      r.pop_back();
      if (r.size() + p.count() < target) return false;
    }
    return false;
  }

  const Graph &g_;
  NodeCounter counter_;
  std::size_t best_ = 0;
  std::size_t ub_ = 0;
};

} // namespace detail

// Exact maximum clique; ties resolved to the lexicographically smallest
// sorted vertex list.
inline std::vector<Vertex> max_clique(const Graph &g, std::uint64_t budget = Limits{}.clique_nodes) {
  detail::CliqueSearch search(g, budget);
  std::size_t w = search.omega();
  return search.lexmin(w);
}

// Exact maximum independent set. With `reduce_twins`, the search runs on one
// representative per class of true twins, which loses nothing since an
// independent set meets each such class at most once.
inline std::vector<Vertex> max_independent_set(const Graph &g, std::uint64_t budget = Limits{}.clique_nodes,
                                               bool reduce_twins = true) {
  if (!reduce_twins) return max_clique(g.complement(), budget);
  std::vector<Vertex> reps;
  for (const auto &c : twin_classes(g, false)) reps.push_back(c.front());
  std::sort(reps.begin(), reps.end());
  std::vector<Vertex> out;
  for (Vertex i : max_clique(g.induced(reps).complement(), budget)) out.push_back(reps[i]);
  return out;
}

struct Colouring {
  std::size_t colours = 0;
  std::vector<unsigned> colour_of; // 0-based
};

inline bool is_proper_colouring(const Graph &g, const Colouring &c) {
  if (c.colour_of.size() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (c.colour_of[u] >= c.colours) return false;
    bool ok = true;
    g.neighbors(u).for_each([&](Vertex v) {
      if (c.colour_of[v] == c.colour_of[u]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace detail {

class ColouringSearch {
public:
  ColouringSearch(const Graph &g, std::size_t lower_bound, std::uint64_t budget)
      : g_(g), n_(g.order()), lb_(lower_bound), counter_(budget, "chromatic_number") {}

  Colouring run() {
    best_ = dsatur_greedy();
    if (best_.colours <= lb_) return best_;
    const std::size_t width = best_.colours;
    if (n_ * width > 100'000'000) throw BudgetExhausted("chromatic_number: graph too large for exact search");
    width_ = width;
    adjacent_count_.assign(n_ * width, 0);
    saturation_.assign(n_, 0);
    colour_.assign(n_, unset);
    uncoloured_ = Bitset(n_, true);
    branch(0, 0);
    return best_;
  }

private:
  static constexpr unsigned unset = ~0U;

  Vertex pick() const {
    Vertex best = 0;
    long best_sat = -1, best_deg = -1;
    uncoloured_.for_each([&](Vertex v) {
      long s = saturation_[v];
      long d = static_cast<long>(g_.neighbors(v).and_count(uncoloured_));
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    });
    return best;
  }

  void paint(Vertex v, unsigned c) {
    colour_[v] = c;
    uncoloured_.reset(v);
    g_.neighbors(v).for_each([&](Vertex u) {
      if (adjacent_count_[u * width_ + c]++ == 0) ++saturation_[u];
    });
  }
  void unpaint(Vertex v, unsigned c) {
    colour_[v] = unset;
    uncoloured_.set(v);
    g_.neighbors(v).for_each([&](Vertex u) {
      if (--adjacent_count_[u * width_ + c] == 0) --saturation_[u];
    });
  }

  // Returns true once an optimal colouring (matching the lower bound) is found.
  bool branch(std::size_t depth, unsigned used) {
    counter_.tick();
    if (depth == n_) {
      if (used < best_.colours) {
        best_.colours = used;
        best_.colour_of = colour_;
      }
      return best_.colours <= lb_;
    }
    Vertex v = pick();
    unsigned limit = std::min<unsigned>(used + 1, static_cast<unsigned>(best_.colours) - 1);
    for (unsigned c = 0; c < limit; ++c) {
      if (adjacent_count_[v * width_ + c] != 0) continue;
      paint(v, c);
      bool done = branch(depth + 1, std::max(used, c + 1));
      unpaint(v, c);
      if (done) return true;
      if (best_.colours - 1 < limit) limit = static_cast<unsigned>(best_.colours) - 1;
    }
    return false;
  }

  Colouring dsatur_greedy() const {
    Colouring out;
    out.colour_of.assign(n_, unset);
    std::vector<Bitset> seen(n_, Bitset(n_ + 1));
    std::vector<std::size_t> sat(n_, 0);
    Bitset left(n_, true);
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex v = 0;
      long bs = -1, bd = -1;
      left.for_each([&](Vertex u) {
        long s = static_cast<long>(sat[u]);
        long d = static_cast<long>(g_.neighbors(u).and_count(left));
        if (s > bs || (s == bs && d > bd)) {
          v = u;
          bs = s;
          bd = d;
        }
      });
      unsigned c = 0;
      while (seen[v].test(c)) ++c;
      out.colour_of[v] = c;
      out.colours = std::max<std::size_t>(out.colours, c + 1);
      left.reset(v);
      g_.neighbors(v).for_each([&](Vertex u) {
        if (!seen[u].test(c)) {
          seen[u].set(c);
          ++sat[u];
        }
      });
    }
    return out;
  }

  const Graph &g_;
  std::size_t n_;
  std::size_t lb_;
  NodeCounter counter_;
  Colouring best_;
  std::size_t width_ = 0;
  std::vector<std::uint32_t> adjacent_count_;
  std::vector<std::size_t> saturation_;
  std::vector<unsigned> colour_;
  Bitset uncoloured_;
};

} // namespace detail

// Exact chromatic number by DSATUR branch-and-bound, using the clique number
// as lower bound. The certificate is the first optimal colouring found.
inline Colouring chromatic_number(const Graph &g, std::uint64_t budget = Limits{}.clique_nodes) {
  if (g.order() == 0) return {};
  std::size_t lb = max_clique(g, budget).size();
  detail::ColouringSearch search(g, lb, budget);
  return search.run();
}

// Bron-Kerbosch with pivoting. Calls `visit` with each maximal clique (sorted);
// stops early if it returns false. A maximal clique holds all or none of each
// true-twin class, so the search runs on the twin quotient and expands.
inline void for_each_maximal_clique(const Graph &full, const std::function<bool(const std::vector<Vertex> &)> &visit,
                                    std::uint64_t budget = Limits{}.clique_nodes) {
  auto classes = twin_classes(full, false);
  std::vector<Vertex> reps;
  for (const auto &c : classes) reps.push_back(c.front());
  const Graph g = full.induced(reps);
  NodeCounter counter(budget, "maximal_cliques");
  std::vector<Vertex> r;
  bool stop = false;
  std::function<void(Bitset, Bitset)> rec = [&](Bitset p, Bitset x) {
    counter.tick();
    if (p.none() && x.none()) {
      std::vector<Vertex> c;
      for (Vertex q : r) c.insert(c.end(), classes[q].begin(), classes[q].end());
      std::sort(c.begin(), c.end());
      if (!visit(c)) stop = true;
      return;
    }
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have = false;
    (p | x).for_each([&](Vertex u) {
      std::size_t k = p.and_count(g.neighbors(u));
      if (!have || k > best) {
        pivot = u;
        best = k;
        have = true;
      }
    });
    Bitset cand = p - g.neighbors(pivot);
    for (std::size_t v = cand.find_first(); v < cand.size() && !stop; v = cand.find_next(v + 1)) {
      r.push_back(static_cast<Vertex>(v));
      rec(p & g.neighbors(static_cast<Vertex>(v)), x & g.neighbors(static_cast<Vertex>(v)));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  if (g.order() > 0) rec(Bitset(g.order(), true), Bitset(g.order()));
}

} // namespace pgk

#endif
