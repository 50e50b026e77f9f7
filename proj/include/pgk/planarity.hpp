#ifndef PGK_PLANARITY_HPP
#define PGK_PLANARITY_HPP

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "pgk/graph.hpp"

namespace pgk {

namespace detail {

// Left-right planarity criterion (de Fraysseix-Rosenstiehl, in the form given
// by Brandes). Only the decision is computed; no embedding is built.
class LrPlanarity {
public:
  explicit LrPlanarity(const Graph &g) : n_(g.order()) {
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).to_vector();
  }

  bool run() {
    height_.assign(n_, -1);
    parent_edge_.assign(n_, -1);
    out_.assign(n_, {});
    for (Vertex v = 0; v < n_; ++v)
      if (height_[v] < 0) {
        height_[v] = 0;
        orient(v);
      }
    for (Vertex v = 0; v < n_; ++v)
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    ref_.assign(edges_.size(), -1);
    lowpt_edge_.assign(edges_.size(), -1);
    stack_bottom_.assign(edges_.size(), -1);
    for (Vertex v = 0; v < n_; ++v)
      if (parent_edge_[v] < 0 && !test(v)) return false;
    return true;
  }

private:
  struct Interval {
    int low = -1, high = -1;
    bool empty() const { return low < 0 && high < 0; }
  };
  struct Pair {
    Interval left, right;
    long id = -1;
  };
  struct Edge {
    Vertex from, to;
  };

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> height_, parent_edge_;
  std::vector<Edge> edges_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<std::vector<int>> out_;
  std::unordered_set<std::uint64_t> oriented_;
  std::vector<int> ref_, lowpt_edge_;
  std::vector<long> stack_bottom_;
  std::vector<Pair> stack_;
  long next_pair_id_ = 0;

  static std::uint64_t key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  void orient(Vertex v) {
    const int e = parent_edge_[v];
    for (Vertex w : adj_[v]) {
      if (!oriented_.insert(key(v, w)).second) continue;
      const int id = static_cast<int>(edges_.size());
      edges_.push_back({v, w});
      lowpt_.push_back(height_[v]);
      lowpt2_.push_back(height_[v]);
      nesting_.push_back(0);
      out_[v].push_back(id);
      if (height_[w] < 0) {
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[id] = height_[w];
      }
      nesting_[id] = 2 * lowpt_[id] + (lowpt2_[id] < height_[v] ? 1 : 0);
      if (e >= 0) {
        if (lowpt_[id] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
          lowpt_[e] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
        }
      }
    }
  }

  long top_id() const { return stack_.empty() ? -1 : stack_.back().id; }

  bool conflicting(const Interval &i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const Pair &p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void push(Pair p) {
    if (p.id < 0) p.id = next_pair_id_++;
    stack_.push_back(p);
  }

  Pair pop() {
    Pair p = stack_.back();
    stack_.pop_back();
    return p;
  }

  bool add_constraints(int ei, int e) {
    Pair p;
    do {
      Pair q = pop();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty())
          p.right = q.right;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (top_id() != stack_bottom_[ei]);
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      Pair q = pop();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      if (p.right.low >= 0) ref_[p.right.low] = q.right.high;
      if (q.right.low >= 0) p.right.low = q.right.low;
      if (p.left.empty())
        p.left = q.left;
      else if (p.left.low >= 0)
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!p.left.empty() || !p.right.empty()) push(p);
    return true;
  }

  void trim_back_edges(Vertex u) {
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) pop();
    if (stack_.empty()) return;
    Pair p = pop();
    while (p.left.high >= 0 && edges_[p.left.high].to == u) p.left.high = ref_[p.left.high];
    if (p.left.high < 0 && p.left.low >= 0) {
      ref_[p.left.low] = p.right.low;
      p.left.low = -1;
    }
    while (p.right.high >= 0 && edges_[p.right.high].to == u) p.right.high = ref_[p.right.high];
    if (p.right.high < 0 && p.right.low >= 0) {
      ref_[p.right.low] = p.left.low;
      p.right.low = -1;
    }
    push(p);
  }

  bool test(Vertex v) {
    const int e = parent_edge_[v];
    for (std::size_t k = 0; k < out_[v].size(); ++k) {
      const int ei = out_[v][k];
      const Vertex w = edges_[ei].to;
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        Pair p;
        p.right = {ei, ei};
        push(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (k == 0)
          lowpt_edge_[e] = lowpt_edge_[ei];
        else if (!add_constraints(ei, e))
          return false;
      }
    }
    if (e >= 0) {
      const Vertex u = edges_[e].from;
      trim_back_edges(u);
      if (lowpt_[e] < height_[u] && !stack_.empty()) {
        const int hl = stack_.back().left.high, hr = stack_.back().right.high;
        ref_[e] = (hl >= 0 && (hr < 0 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
      }
    }
    return true;
  }
};

} // namespace detail

inline bool is_planar(const Graph &g) {
  const std::size_t n = g.order();
  const std::size_t m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  if (n < 5) return true;
  return detail::LrPlanarity(g).run();
}

} // namespace pgk

#endif
