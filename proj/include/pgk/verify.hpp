#ifndef PGK_VERIFY_HPP
#define PGK_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgk/report.hpp"

namespace pgk {

// skip: the proposition says nothing about this group (hypothesis not met).
// unknown: a search budget ran out before the check could decide.
enum class Status { pass, fail, unknown, skip };

inline const char *to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::unknown: return "unknown";
  default: return "skip";
  }
}

struct VerificationOutcome {
  std::string theorem;
  GroupSpec spec;
  Status status = Status::unknown;
  Json witness; // counterexample on fail, certificate otherwise; null when empty
  std::string note;
  double millis = 0;
};

struct CheckResult {
  Status status = Status::unknown;
  Json witness;
  std::string note;
};

// Lazily built graphs and expensive invariants shared by the checks run on one
// group.
class CheckContext {
public:
  CheckContext(const FiniteGroup &g, const Limits &lim) : g_(g), lim_(lim) {}

  const FiniteGroup &group() const noexcept { return g_; }
  const Limits &limits() const noexcept { return lim_; }
  std::size_t order() const noexcept { return g_.order(); }

  const PowerGraph &pg() {
    if (!pg_) pg_ = build_power_graph(g_);
    return *pg_;
  }
  const DirectedPowerGraph &dg() {
    if (!dg_) dg_ = build_directed_power_graph(g_);
    return *dg_;
  }
  const CyclicClassGraph &cg() {
    if (!cg_) cg_.emplace(g_);
    return *cg_;
  }
  const ChordalityResult &chordal() {
    if (!chordal_) chordal_ = is_chordal(pg().graph);
    return *chordal_;
  }
  const EccentricitySummary &ecc() {
    if (!ecc_) ecc_ = power_graph_eccentricities(pg());
    return *ecc_;
  }
  const std::vector<Vertex> &omega_clique() {
    if (!omega_) omega_ = max_clique(pg().graph, lim_.clique_nodes);
    return *omega_;
  }
  const Colouring &colouring() {
    if (!chi_) chi_ = chromatic_number(pg().graph, lim_.clique_nodes);
    return *chi_;
  }
  const HoleSummary &holes() {
    if (!holes_) holes_ = summarize_holes(pg().graph, lim_.hole_nodes);
    return *holes_;
  }

  // For cyclic groups: the element standing for k in Z_n under a fixed generator.
  Element cyclic_element(u64 k) {
    if (!generator_) {
      for (Element x = 0; x < order(); ++x)
        if (g_.element_order(x) == order()) {
          generator_ = x;
          break;
        }
      if (!generator_) throw InvalidArgument(g_.name() + " is not cyclic");
    }
    return g_.power(*generator_, k);
  }

  Json label(Element x) const { return g_.label(x); }
  Json labels(const std::vector<Vertex> &vs) const { return pgk::labels(g_, vs); }
  Json class_labels(const std::vector<Vertex> &cls) {
    Json out = Json::array();
    for (Vertex c : cls) out.push_back(class_label(cg().at(c)) + "[" + g_.label(cg().at(c).representative) + "]");
    return out;
  }

private:
  const FiniteGroup &g_;
  Limits lim_;
  std::optional<PowerGraph> pg_;
  std::optional<DirectedPowerGraph> dg_;
  std::optional<CyclicClassGraph> cg_;
  std::optional<ChordalityResult> chordal_;
  std::optional<EccentricitySummary> ecc_;
  std::optional<std::vector<Vertex>> omega_;
  std::optional<Colouring> chi_;
  std::optional<HoleSummary> holes_;
  std::optional<Element> generator_;
};

namespace checks {

inline CheckResult pass(Json w = nullptr, std::string note = {}) { return {Status::pass, std::move(w), std::move(note)}; }
inline CheckResult fail(Json w, std::string note = {}) { return {Status::fail, std::move(w), std::move(note)}; }
inline CheckResult skip(std::string note, Json w = nullptr) { return {Status::skip, std::move(w), std::move(note)}; }
inline CheckResult unknown(std::string note, Json w = nullptr) { return {Status::unknown, std::move(w), std::move(note)}; }

// Folds the statuses of independent sub-checks: any fail wins, then unknown,
// then pass; all-skip stays skip.
inline Status combine(std::initializer_list<Status> parts) {
  bool any_unknown = false, any_pass = false;
  for (Status s : parts) {
    if (s == Status::fail) return Status::fail;
    any_unknown |= s == Status::unknown;
    any_pass |= s == Status::pass;
  }
  if (any_unknown) return Status::unknown;
  return any_pass ? Status::pass : Status::skip;
}

using BigCount = boost::multiprecision::cpp_int;

// Exact count as a JSON number when it fits, else as a decimal string.
inline Json count_json(const BigCount &k) {
  if (k <= std::numeric_limits<u64>::max()) return static_cast<u64>(k);
  return k.str();
}

inline CheckResult connected(CheckContext &c) {
  auto dist = bfs_distances(c.pg().graph, FiniteGroup::identity());
  for (Vertex v = 0; v < dist.size(); ++v)
    if (dist[v] < 0) return fail({{"unreachable_from_identity", c.label(v)}});
  return pass({{"vertices", c.order()}});
}

inline CheckResult radius_one(CheckContext &c) {
  if (c.order() == 1) return skip("trivial group");
  if (!is_connected(c.pg().graph)) return fail({{"connected", false}});
  const auto &e = c.ecc();
  bool complete = is_complete(c.pg().graph);
  Json w = {{"radius", e.radius}, {"diameter", e.diameter}, {"complete", complete}};
  if (e.radius != 1 || e.diameter != (complete ? 1u : 2u)) return fail(w);
  return pass(w);
}

inline CheckResult center_subset(CheckContext &c) {
  std::vector<Element> zc = group_center(c.group());
  for (Vertex v : c.ecc().center)
    if (!std::binary_search(zc.begin(), zc.end(), v))
      return fail({{"graph_center_vertex_not_central", c.label(v)}});
  return pass({{"graph_center_size", c.ecc().center.size()}, {"group_center_size", zc.size()}});
}

inline CheckResult center_cardinality(CheckContext &c) {
  const auto &g = c.group();
  const std::size_t n = c.order();
  if (n == 1) return skip("trivial group");
  if (!g.is_abelian()) return skip("statement covers abelian groups");
  std::size_t expected = 1;
  std::string rule = "non-cyclic";
  if (g.is_cyclic()) {
    if (nt::is_prime_power(n)) {
      expected = n;
      rule = "cyclic of prime-power order";
    } else {
      expected = nt::totient(n) + 1;
      rule = "cyclic, phi(n)+1";
    }
  }
  Json w = {{"center_size", c.ecc().center.size()}, {"expected", expected}, {"rule", rule}};
  if (c.ecc().center.size() != expected) {
    w["center"] = c.labels(c.ecc().center);
    return fail(w);
  }
  return pass(w);
}

inline CheckResult partition_laws(CheckContext &c) {
  if (!c.group().is_abelian()) return skip("statement covers abelian groups");
  CompositionPartition p = composition_partition(c.group());
  Json sizes = Json::array();
  for (const auto &b : p.blocks) sizes.push_back(b.size());
  auto bad = partition_law_violations(c.group(), c.pg());
  Json w = {{"block_sizes", sizes}};
  if (!bad.empty()) {
    w["violations"] = bad;
    return fail(w);
  }
  return pass(w);
}

inline CheckResult path_clique(CheckContext &c) {
  const auto &g = c.pg().graph;
  const auto &dg = c.dg().graph;
  std::size_t maximal = 0;
  Json bad;
  for_each_maximal_clique(
      g,
      [&](const std::vector<Vertex> &clique) {
        ++maximal;
        try {
          auto path = clique_to_directed_path(dg, clique);
          std::vector<Vertex> sorted = path;
          std::sort(sorted.begin(), sorted.end());
          if (sorted != clique) bad = {{"clique", c.labels(clique)}, {"path", c.labels(path)}};
        } catch (const InternalError &e) {
          bad = {{"clique", c.labels(clique)}, {"error", e.what()}};
        }
        return bad.is_null();
      },
      c.limits().clique_nodes);
  if (!bad.is_null()) return fail(bad, "a maximal clique has no directed path through its vertices");
  const std::size_t omega = c.omega_clique().size();
  Json w = {{"maximal_cliques", maximal}, {"omega", omega}};
  if (c.order() <= c.limits().path_bruteforce_cap) {
    auto lp = longest_directed_path_bruteforce(dg, c.limits().path_bruteforce_cap);
    w["longest_path"] = c.labels(lp);
    if (!g.is_clique(lp) || lp.size() != omega) return fail(w, "longest directed path differs from a maximum clique");
  }
  return pass(w);
}

inline CheckResult quotient_distance(CheckContext &c) {
  const auto &g = c.pg().graph;
  const auto &cg = c.cg();
  std::vector<std::vector<int>> dc;
  for (Vertex a = 0; a < cg.size(); ++a) dc.push_back(bfs_distances(cg.undirected(), a));
  std::size_t pairs = 0;
  for (Vertex u = 0; u < c.order(); ++u) {
    auto du = bfs_distances(g, u);
    for (Vertex v = u + 1; v < c.order(); ++v) {
      std::size_t a = cg.class_of(u), b = cg.class_of(v);
      if (a == b) continue;
      ++pairs;
      if (du[v] != dc[a][b])
        return fail({{"u", c.label(u)}, {"v", c.label(v)}, {"power_graph_distance", du[v]}, {"class_graph_distance", dc[a][b]}});
    }
  }
  return pass({{"cross_class_pairs", pairs}});
}

inline CheckResult alpha_equal(CheckContext &c) {
  auto a = max_independent_set(c.pg().graph, c.limits().clique_nodes, false);
  auto b = max_independent_set(c.cg().undirected(), c.limits().clique_nodes, false);
  Json w = {{"alpha_power_graph", a.size()}, {"alpha_class_graph", b.size()}, {"independent_set", c.labels(a)}};
  return a.size() == b.size() ? pass(w) : fail(w);
}

inline CheckResult complete_iff(CheckContext &c) {
  bool a = is_complete(c.pg().graph), b = is_complete(c.cg().undirected());
  Json w = {{"power_graph_complete", a}, {"class_graph_complete", b}};
  return a == b ? pass(w) : fail(w);
}

// Holes of the power graph against holes of C(G) lifted through the class
// weights. Each hole of C(G) with classes c1..ck yields w(c1)...w(ck) holes of
// the power graph.
inline CheckResult hole_mirror(CheckContext &c) {
  const auto &g = c.pg().graph;
  const auto &cg = c.cg();
  HoleQuery q;
  q.budget = c.limits().hole_nodes;
  std::map<std::size_t, BigCount> direct, lifted;
  Json bad;
  for_each_hole_class(g, q, [&](const std::vector<std::vector<Vertex>> &m) {
    BigCount count = 1;
    for (const auto &cls : m) count *= cls.size();
    direct[m.size()] += count;
    Hole h = min_lift(m);
    std::vector<Vertex> classes;
    for (Vertex v : h) classes.push_back(static_cast<Vertex>(cg.class_of(v)));
    if (!is_hole(cg.undirected(), classes)) bad = {{"power_graph_hole", c.labels(h)}, {"image_is_not_a_hole", true}};
    return bad.is_null();
  });
  if (!bad.is_null()) return fail(bad);
  for_each_hole_class(cg.undirected(), q, [&](const std::vector<std::vector<Vertex>> &m) {
    BigCount count = 1;
    for (const auto &cls : m) {
      std::size_t w = 0;
      for (Vertex x : cls) w += cg.at(x).weight();
      count *= w;
    }
    lifted[m.size()] += count;
    Hole h = min_lift(m);
    std::vector<Vertex> reps;
    for (Vertex x : h) reps.push_back(cg.at(x).representative);
    if (!is_hole(g, reps)) bad = {{"class_graph_hole", c.class_labels(h)}, {"lift_is_not_a_hole", true}};
    return bad.is_null();
  });
  if (!bad.is_null()) return fail(bad);
  auto as_json = [](const std::map<std::size_t, BigCount> &m) {
    Json j = Json::object();
    for (const auto &[len, k] : m) j["length_" + std::to_string(len)] = count_json(k);
    return j;
  };
  Json w = {{"power_graph_holes", as_json(direct)}, {"lifted_class_graph_holes", as_json(lifted)}};
  return direct == lifted ? pass(w) : fail(w);
}

inline CheckResult hamiltonian_lift_check(CheckContext &c) {
  const auto &cg = c.cg();
  const std::size_t n = c.order();
  Json w = Json::object();
  Status lift = Status::skip, corollary = Status::skip;
  std::string note;

  auto hc = is_hamiltonian(cg.undirected(), c.limits().hamiltonian_nodes);
  w["class_graph_hamiltonian"] = to_string(hc.status);
  if (hc.status == Tri::yes) {
    auto cycle = hamiltonian_lift(cg, hc.cycle);
    w["lifted_cycle"] = c.labels(cycle);
    lift = is_hamiltonian_cycle(c.pg().graph, cycle) ? Status::pass : Status::fail;
  } else if (hc.status == Tri::unknown) {
    lift = Status::unknown;
    note = "Hamiltonian search budget exhausted on C(G)";
  } else {
    note = "C(G) is not Hamiltonian";
  }

  if (c.group().is_cyclic() && n >= 2) {
    auto hp = is_hamiltonian(c.pg().graph, c.limits().hamiltonian_nodes);
    w["power_graph_hamiltonian"] = to_string(hp.status);
    if (hp.status == Tri::unknown) {
      corollary = Status::unknown;
      note = "Hamiltonian search budget exhausted";
    } else if (n == 2) {
      corollary = hp.status == Tri::no ? Status::pass : Status::fail;
    } else if (hp.status == Tri::yes && is_hamiltonian_cycle(c.pg().graph, hp.cycle)) {
      corollary = Status::pass;
      if (!w.contains("lifted_cycle")) w["power_graph_cycle"] = c.labels(hp.cycle);
    } else {
      corollary = Status::fail;
    }
  }
  Status s = combine({lift, corollary});
  if (s == Status::skip) note = "C(G) is not Hamiltonian and the cyclic case does not apply";
  return {s, w, note};
}

inline CheckResult chordal_mirror(CheckContext &c) {
  const auto &a = c.chordal();
  auto b = is_chordal(c.cg().undirected());
  Json w = {{"power_graph_chordal", a.chordal}, {"class_graph_chordal", b.chordal}};
  if (a.hole) w["power_graph_hole"] = c.labels(*a.hole);
  if (b.hole) w["class_graph_hole"] = c.class_labels(*b.hole);
  return a.chordal == b.chordal ? pass(w) : fail(w);
}

inline CheckResult claw_free_mirror(CheckContext &c) {
  auto a = is_claw_free(c.pg().graph);
  auto b = is_claw_free(c.cg().undirected());
  Json w = {{"power_graph_claw_free", a.claw_free}, {"class_graph_claw_free", b.claw_free}};
  if (a.claw) w["power_graph_claw"] = c.labels({a.claw->begin(), a.claw->end()});
  if (b.claw) w["class_graph_claw"] = c.class_labels({b.claw->begin(), b.claw->end()});
  return a.claw_free == b.claw_free ? pass(w) : fail(w);
}

inline CheckResult simplicial_mirror(CheckContext &c) {
  const auto &cg = c.cg();
  std::size_t count = 0;
  for (Element x = 0; x < c.order(); ++x) {
    bool a = is_simplicial(c.pg().graph, x);
    bool b = is_simplicial(cg.undirected(), static_cast<Vertex>(cg.class_of(x)));
    if (a != b)
      return fail({{"element", c.label(x)}, {"simplicial_in_power_graph", a}, {"class_simplicial_in_class_graph", b}});
    count += a ? 1 : 0;
  }
  return pass({{"simplicial_vertices", count}});
}

inline CheckResult embedding(CheckContext &c) {
  auto map = embed_classes(c.cg(), c.pg());
  Json w = {{"classes", c.cg().size()}, {"image", c.labels(map)}};
  return is_induced_embedding(c.cg(), c.pg(), map) ? pass(w) : fail(w);
}

// Heaviest chain in the containment order of C(G), by dynamic programming
// over classes sorted by subgroup order.
inline CheckResult weighted_path(CheckContext &c) {
  const auto &cg = c.cg();
  const std::size_t m = cg.size();
  std::vector<Vertex> topo(m);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](Vertex a, Vertex b) { return cg.at(a).subgroup_order < cg.at(b).subgroup_order; });
  std::vector<std::size_t> best(m, 0);
  std::vector<Vertex> next(m, static_cast<Vertex>(m));
  for (Vertex a : topo) {
    best[a] = cg.at(a).weight();
    cg.containment().out_neighbors(a).for_each([&](Vertex b) {
      if (cg.at(a).weight() + best[b] > best[a]) {
        best[a] = cg.at(a).weight() + best[b];
        next[a] = b;
      }
    });
  }
  Vertex top = static_cast<Vertex>(std::max_element(best.begin(), best.end()) - best.begin());
  std::vector<Vertex> chain;
  for (Vertex v = top; v < m; v = next[v]) chain.push_back(v);
  const std::size_t omega = c.omega_clique().size();
  Json w = {{"weight", best[top]}, {"chain", c.class_labels(chain)}, {"omega", omega}};
  if (best[top] != omega) return fail(w);
  if (c.order() <= c.limits().path_bruteforce_cap) {
    auto lp = longest_directed_path_bruteforce(c.dg().graph, c.limits().path_bruteforce_cap);
    w["longest_path"] = lp.size();
    if (lp.size() != best[top]) return fail(w);
  }
  return pass(w);
}

inline CheckResult no_odd_holes(CheckContext &c) {
  auto h = find_odd_hole(c.pg().graph, c.limits().hole_nodes);
  if (h) return fail({{"odd_hole", c.labels(*h)}});
  return pass();
}

inline CheckResult no_antiholes(CheckContext &c) {
  auto h = find_anti_hole(c.pg().graph, c.limits().hole_nodes);
  if (h) return fail({{"anti_hole", c.labels(*h)}});
  return pass();
}

inline CheckResult even_hole_exists(CheckContext &c) {
  if (!c.group().is_cyclic()) return skip("statement covers cyclic groups");
  const u64 n = c.order();
  auto fac = nt::factorize(n);
  std::vector<u64> primes, squared;
  for (const auto &pp : fac) {
    primes.push_back(pp.prime);
    if (pp.exponent >= 2) squared.push_back(pp.prime);
  }
  std::vector<std::size_t> required;
  if (squared.size() >= 2) required.push_back(4);
  for (std::size_t k = 3; k <= primes.size(); ++k) required.push_back(2 * k);

  const auto &summary = c.holes();
  Json observed = Json::array();
  for (const auto &[len, s] : summary.by_length) observed.push_back(len);
  Json w = {{"required_lengths", required}};
  if (summary.exhaustive) {
    w["observed_lengths"] = observed;
    w["four_hole_observed"] = summary.by_length.count(4) > 0;
  } else {
    w["observed_lengths"] = "unknown";
  }
  if (required.empty()) return skip("needs two squared primes or three distinct primes", w);

  Json built = Json::object();
  for (std::size_t len : required) {
    std::vector<u64> use = len == 4 ? std::vector<u64>{squared[0], squared[1]}
                                    : std::vector<u64>(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(len / 2));
    EvenHoleConstruction e = construct_even_hole_cyclic(use, len, c.limits().order_cap);
    std::vector<Vertex> cyc;
    for (u64 k : e.vertices) cyc.push_back(c.cyclic_element(k * (n / e.modulus)));
    built["length_" + std::to_string(len)] = c.labels(cyc);
    if (!is_hole(c.pg().graph, cyc)) {
      w["constructed"] = built;
      return fail(w, "construction embedded in the group is not a hole");
    }
    if (summary.exhaustive && !summary.by_length.count(len)) {
      w["constructed"] = built;
      return fail(w, "exhaustive enumeration missed a required length");
    }
  }
  w["constructed"] = built;
  return pass(w);
}

inline CheckResult prime_necessity(CheckContext &c) {
  const auto &summary = c.holes();
  const std::size_t k = nt::distinct_prime_count(c.order());
  Json w = {{"distinct_primes", k}};
  std::size_t longest = summary.by_length.empty() ? 0 : summary.by_length.rbegin()->first;
  if (summary.exhaustive) w["longest_hole"] = longest;
  if (!c.group().is_cyclic()) {
    if (summary.exhaustive && longest > 2 * k) w["exemption"] = "non-cyclic group exceeds the cyclic bound";
    return skip("statement covers cyclic groups", w);
  }
  for (const auto &[len, s] : summary.by_length)
    if (!verify_hole_prime_necessity(c.order(), s.witness)) {
      w["hole"] = c.labels(s.witness);
      return fail(w);
    }
  if (!summary.exhaustive) return unknown("hole enumeration budget exhausted", w);
  return pass(w);
}

// Every hole, expanded over cyclic classes only: elements of one cyclic class
// have the same arcs and order, so one member per class decides the roles.
inline CheckResult out_vertex_orders(CheckContext &c) {
  const auto &g = c.group();
  const auto &dg = c.dg();
  HoleQuery q;
  q.budget = c.limits().hole_nodes;
  std::size_t checked = 0, sources = 0;
  bool over = false;
  Json bad;
  for_each_hole_class(c.pg().graph, q, [&](const std::vector<std::vector<Vertex>> &members) {
    std::vector<std::vector<Vertex>> reduced;
    for (const auto &m : members) {
      std::vector<Vertex> r;
      for (Vertex v : m)
        if (std::none_of(r.begin(), r.end(), [&](Vertex u) { return g.same_cyclic_subgroup(u, v); })) r.push_back(v);
      reduced.push_back(std::move(r));
    }
    std::vector<std::size_t> pick(reduced.size(), 0);
    Hole h(reduced.size());
    while (true) {
      if (++checked > c.limits().hole_expansion_limit) {
        over = true;
        return false;
      }
      for (std::size_t i = 0; i < reduced.size(); ++i) h[i] = reduced[i][pick[i]];
      for (const auto &r : hole_out_vertex_orders(g, dg, h)) {
        if (r.role == HoleRole::source) ++sources;
        if (r.role == HoleRole::mixed || (r.role == HoleRole::source && r.prime_power_order)) {
          bad = {{"hole", c.labels(canonical_cycle(h))}, {"vertex", c.label(r.vertex)}, {"role", to_string(r.role)}, {"order", r.order}};
          return false;
        }
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == reduced[i].size()) pick[i++] = 0;
      if (i == pick.size()) return true;
    }
  });
  if (!bad.is_null()) return fail(bad);
  Json w = {{"holes_checked", checked}, {"sources", sources}};
  if (over) return unknown("hole expansion limit reached", w);
  return pass(w);
}

inline CheckResult prime_power_complete(CheckContext &c) {
  const auto &g = c.group();
  const u64 n = c.order();
  bool p_group = n == 1 || nt::is_prime_power(n);
  if (g.is_cyclic()) {
    bool complete = is_complete(c.pg().graph);
    Json w = {{"complete", complete}, {"prime_power_order", p_group}};
    if (complete != p_group) {
      if (!complete) {
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v)
            if (!c.pg().graph.adjacent(u, v)) {
              w["non_adjacent"] = {c.label(u), c.label(v)};
              return fail(w);
            }
      }
      return fail(w);
    }
    return pass(w);
  }
  if (g.is_abelian() && p_group) {
    const auto &ch = c.chordal();
    Json w = {{"hole_free", ch.chordal}};
    if (ch.hole) {
      w["hole"] = c.labels(*ch.hole);
      return fail(w);
    }
    return pass(w);
  }
  return skip("statement covers cyclic groups and abelian p-groups");
}

inline CheckResult psi_clique_chromatic(CheckContext &c) {
  const auto &g = c.group();
  const std::size_t omega = c.omega_clique().size();
  const std::size_t chi = c.colouring().colours;
  const std::size_t expected = general_group_clique_number(g);
  Json w = {{"omega", omega}, {"chi", chi}, {"max_psi", expected}, {"clique", c.labels(c.omega_clique())}};
  if (g.is_cyclic()) {
    const u64 n = c.order();
    w["psi"] = nt::psi(n);
    std::vector<Vertex> path;
    for (u64 k : construct_longest_path_cyclic(n)) path.push_back(c.cyclic_element(k));
    w["longest_path"] = c.labels(path);
    if (nt::psi(n) != expected || path.size() != expected || !c.dg().graph.is_path(path)) return fail(w);
  }
  if (!is_proper_colouring(c.pg().graph, c.colouring())) return fail(w, "colouring certificate is not proper");
  return omega == expected && chi == expected ? pass(w) : fail(w);
}

inline CheckResult peeling(CheckContext &c) {
  const auto &g = c.group();
  if (!g.is_cyclic()) return skip("statement covers cyclic groups");
  const u64 n = c.order();
  std::vector<Vertex> rest;
  for (Element x = 0; x < n; ++x)
    if (g.element_order(x) != n) rest.push_back(x);
  const std::size_t chi_h = chromatic_number(c.pg().graph.induced(rest), c.limits().clique_nodes).colours;
  const std::size_t chi = c.colouring().colours;
  const std::size_t peeled = chromatic_via_generator_peeling(g, c.pg(), c.limits().clique_nodes);
  Json w = {{"chi", chi}, {"phi", nt::totient(n)}, {"chi_non_generators", chi_h}, {"peeled", peeled}};
  return chi == nt::totient(n) + chi_h && chi == peeled ? pass(w) : fail(w);
}

inline CheckResult chordal_iff(CheckContext &c) {
  if (!c.group().is_cyclic()) return skip("statement covers cyclic groups");
  const u64 n = c.order();
  if (n == 1) return skip("trivial group");
  auto fac = nt::factorize(n);
  bool shape = fac.size() == 1 || (fac.size() == 2 && (fac[0].exponent == 1 || fac[1].exponent == 1));
  const auto &ch = c.chordal();
  Json w = {{"chordal", ch.chordal}, {"order_shape", shape}};
  if (ch.hole) {
    w["hole"] = c.labels(*ch.hole);
    if (!is_hole(c.pg().graph, *ch.hole)) return fail(w, "returned hole is invalid");
  }
  return ch.chordal == shape ? pass(w) : fail(w);
}

inline CheckResult simplicial_gcd(CheckContext &c) {
  const auto &g = c.group();
  const u64 n = c.order();
  if (!g.is_cyclic() || n < 2 || nt::is_prime_power(n)) return skip("statement covers cyclic groups of non-prime-power order");
  const bool zn = g.spec().family == GroupSpec::Family::zn;
  std::vector<Vertex> simplicial = simplicial_vertices(c.pg().graph), converse;
  for (Element x = 0; x < n; ++x) {
    bool sim = std::binary_search(simplicial.begin(), simplicial.end(), x);
    bool generator = g.element_order(x) == n;
    if (zn && !simplicial_gcd_check(c.pg().graph, n, x)) return fail({{"element", c.label(x)}});
    if (sim && generator) return fail({{"element", c.label(x)}});
    if (!sim && !generator) converse.push_back(x);
  }
  return pass({{"simplicial", c.labels(simplicial)}, {"non_generators_not_simplicial", c.labels(converse)}});
}

inline CheckResult no_simplicial_k3(CheckContext &c) {
  if (!c.group().is_cyclic() || nt::distinct_prime_count(c.order()) < 3)
    return skip("statement covers cyclic groups with at least three distinct primes");
  auto s = simplicial_vertices(c.pg().graph);
  if (!s.empty()) return fail({{"simplicial", c.labels(s)}});
  return pass();
}

inline CheckResult parent_child(CheckContext &c) {
  if (!c.group().is_cyclic() || c.order() < 2) return skip("statement covers non-trivial cyclic groups");
  const auto &cg = c.cg();
  std::size_t checked = 0, simplicial = 0;
  for (std::size_t k = 0; k < cg.size(); ++k) {
    if (k == cg.identity_class() || cg.at(k).subgroup_order == c.order()) continue;
    auto r = class_parent_child_simplicial(cg, k, c.order());
    ++checked;
    simplicial += r.simplicial ? 1 : 0;
    if (r.simplicial != r.one_parent_one_child())
      return fail({{"class", c.class_labels({static_cast<Vertex>(k)})},
                   {"simplicial", r.simplicial},
                   {"parents", r.parents},
                   {"children", r.children}});
  }
  return pass({{"classes_checked", checked}, {"simplicial_classes", simplicial}});
}

// n = p^m or 2 p^m with p an odd prime.
struct OddPrimePowerShape {
  u64 p = 0;
  unsigned m = 0;
  bool doubled = false;
};

inline std::optional<OddPrimePowerShape> odd_prime_power_shape(u64 n) {
  OddPrimePowerShape s;
  if (n % 2 == 0) {
    n /= 2;
    s.doubled = true;
  }
  auto fac = nt::factorize(n);
  if (fac.size() != 1 || fac[0].prime == 2) return std::nullopt;
  s.p = fac[0].prime;
  s.m = fac[0].exponent;
  return s;
}

inline CheckResult expect_chordal(CheckContext &c, bool expected, Json w) {
  const auto &ch = c.chordal();
  w["chordal"] = ch.chordal;
  w["expected_chordal"] = expected;
  if (ch.hole) w["hole"] = c.labels(*ch.hole);
  return ch.chordal == expected ? pass(w) : fail(w);
}

inline CheckResult chordal_fermat(CheckContext &c, GroupSpec::Family fam) {
  const auto &g = c.group();
  if (g.spec().family != fam) return skip(std::string("statement covers ") + (fam == GroupSpec::Family::un ? "U_n" : "Q_n"));
  const u64 n = g.spec().params.front();
  auto s = odd_prime_power_shape(n);
  if (!s || !nt::is_fermat_prime(s->p)) return skip("modulus is not p^m or 2p^m with p a Fermat prime");
  bool expected = s->m <= 2 || s->p == 3 || (fam == GroupSpec::Family::qn && s->p == 5);
  return expect_chordal(c, expected, {{"p", s->p}, {"m", s->m}});
}

inline CheckResult qn_nonplanar(CheckContext &c) {
  const auto &g = c.group();
  if (g.spec().family != GroupSpec::Family::qn) return skip("statement covers Q_n");
  const u64 n = g.spec().params.front();
  auto s = odd_prime_power_shape(n);
  if (!s) return skip("modulus is not p^m or 2p^m with p an odd prime");
  bool planar = is_planar(c.pg().graph);
  Json w = {{"p", s->p}, {"m", s->m}, {"planar", planar}};
  if (s->m == 1 && s->p <= 37) return skip("p <= 37 lies below the stated threshold; planarity recorded", w);
  return planar ? fail(w) : pass(w);
}

inline CheckResult un_planar_240(CheckContext &c) {
  const auto &g = c.group();
  if (g.spec().family != GroupSpec::Family::un) return skip("statement covers U_n");
  const u64 n = g.spec().params.front();
  if (240 % n != 0) return skip("modulus does not divide 240");
  bool planar = is_planar(c.pg().graph);
  Json w = {{"planar", planar}};
  return planar ? pass(w) : fail(w);
}

inline CheckResult odd_nonchordal(CheckContext &c, GroupSpec::Family fam) {
  const auto &g = c.group();
  if (g.spec().family != fam) return skip(std::string("statement covers ") + (fam == GroupSpec::Family::un ? "U_n" : "Q_n"));
  const u64 n = g.spec().params.front();
  if (n % 2 == 0 || nt::is_squarefree(n)) return skip("modulus is not odd and non-squarefree");
  for (const auto &pp : nt::factorize(n))
    if (nt::is_fermat_prime(pp.prime)) return skip("a Fermat prime divides the modulus");
  return expect_chordal(c, false, Json::object());
}

inline CheckResult even_nonchordal(CheckContext &c, GroupSpec::Family fam) {
  const auto &g = c.group();
  if (g.spec().family != fam) return skip(std::string("statement covers ") + (fam == GroupSpec::Family::un ? "U_n" : "Q_n"));
  const u64 n = g.spec().params.front();
  if (n % 2 != 0) return skip("modulus is odd");
  const unsigned f = nt::valuation(n, 2);
  std::size_t plain = 0, squared = 0;
  for (const auto &pp : nt::factorize(n)) {
    if (pp.prime == 2 || nt::is_fermat_prime(pp.prime)) continue;
    ++plain;
    if (pp.exponent >= 2) ++squared;
  }
  const unsigned shift = fam == GroupSpec::Family::qn ? 1 : 0;
  bool case_i = f >= 4 + shift && plain >= 2;
  bool case_ii = f >= 1 + shift && squared >= 2;
  if (!case_i && !case_ii) return skip("neither hypothesis holds");
  return expect_chordal(c, false, {{"f", f}, {"case", case_i ? "i" : "ii"}});
}

} // namespace checks

struct Theorem {
  std::string_view id;
  std::string_view statement;
  CheckResult (*check)(CheckContext &);
};

inline const std::vector<Theorem> &catalogue() {
  using F = GroupSpec::Family;
  static const std::vector<Theorem> all = {
      {"S2.connected", "the power graph of a finite group is connected", checks::connected},
      {"S2.radius-one", "the power graph has radius 1 (diameter 2 unless complete)", checks::radius_one},
      {"S2.center-subset", "vertices of the graph center lie in the center of the group", checks::center_subset},
      {"S2.center-cardinality", "abelian G: graph center has n, phi(n)+1 or 1 vertices", checks::center_cardinality},
      {"S3.partition-laws", "the composition-length blocks X_i obey the clique laws", checks::partition_laws},
      {"S4.path-clique", "every clique is traversed by a directed path and conversely", checks::path_clique},
      {"S5.quotient-distance", "d(u,v) in the power graph equals the distance of their classes in C(G)", checks::quotient_distance},
      {"S5.alpha-equal", "alpha of the power graph equals alpha of C(G)", checks::alpha_equal},
      {"S5.complete-iff", "the power graph is complete iff C(G) is complete", checks::complete_iff},
      {"S5.hole-mirror", "holes of the power graph are exactly the lifts of holes of C(G)", checks::hole_mirror},
      {"S5.hamiltonian-lift", "a Hamiltonian cycle of C(G) lifts; cyclic groups of order >= 3 are Hamiltonian", checks::hamiltonian_lift_check},
      {"S5.chordal-mirror", "the power graph is chordal iff C(G) is chordal", checks::chordal_mirror},
      {"S5.claw-free-mirror", "the power graph is claw-free iff C(G) is claw-free", checks::claw_free_mirror},
      {"S5.simplicial-mirror", "x is simplicial iff its class is simplicial in C(G)", checks::simplicial_mirror},
      {"S5.embedding", "class representatives induce a copy of C(G)", checks::embedding},
      {"S5.weighted-path", "the heaviest containment chain of C(G) weighs omega", checks::weighted_path},
      {"S6.no-odd-holes", "the power graph has no odd hole", checks::no_odd_holes},
      {"S6.no-antiholes", "the power graph has no anti-hole of length greater than 4", checks::no_antiholes},
      {"S6.even-hole-exists", "cyclic G: k distinct primes give holes of every even length up to 2k", checks::even_hole_exists},
      {"S6.prime-necessity", "cyclic G: a hole of length L needs at least L/2 distinct primes", checks::prime_necessity},
      {"S6.out-vertex-orders", "a vertex of prime-power order is never a source of a hole", checks::out_vertex_orders},
      {"S7.prime-power-complete", "cyclic G: complete iff the order is a prime power; p-groups have no holes", checks::prime_power_complete},
      {"S8.psi-clique-chromatic", "omega = chi = max Psi(|g|), which is Psi(n) for cyclic groups", checks::psi_clique_chromatic},
      {"S8.peeling", "cyclic G: chi = phi(n) + chi of the non-generator subgraph", checks::peeling},
      {"S9.chordal-iff", "Z_n: chordal iff n = p^m or p^m q", checks::chordal_iff},
      {"S9.simplicial-gcd", "Z_n, n not a prime power: k simplicial implies gcd(k, n) != 1", checks::simplicial_gcd},
      {"S9.no-simplicial-k3", "Z_n with at least three distinct primes has no simplicial vertex", checks::no_simplicial_k3},
      {"S9.parent-child", "a class of C(Z_n) is simplicial iff it has one parent and one child", checks::parent_child},
      {"S10.un-chordal-fermat", "U_n, n = p^m or 2p^m, p Fermat: chordal iff m <= 2 or p = 3",
       [](CheckContext &c) { return checks::chordal_fermat(c, F::un); }},
      {"S10.qn-chordal-fermat", "Q_n, n = p^m or 2p^m, p Fermat: chordal iff m <= 2 or p in {3, 5}",
       [](CheckContext &c) { return checks::chordal_fermat(c, F::qn); }},
      {"S10.qn-nonplanar", "Q_n is non-planar for n = p, 2p with p > 37 and for n = p^m, 2p^m with m >= 2", checks::qn_nonplanar},
      {"S10.un-planar-240", "U_n is planar when n divides 240", checks::un_planar_240},
      {"S10.un-odd-nonchordal", "U_n, n odd, not squarefree, no Fermat prime factor: not chordal",
       [](CheckContext &c) { return checks::odd_nonchordal(c, F::un); }},
      {"S10.qn-odd-nonchordal", "Q_n, n odd, not squarefree, no Fermat prime factor: not chordal",
       [](CheckContext &c) { return checks::odd_nonchordal(c, F::qn); }},
      {"S10.un-even-nonchordal", "U_n, 2^f || n: not chordal under either stated prime condition",
       [](CheckContext &c) { return checks::even_nonchordal(c, F::un); }},
      {"S10.qn-even-nonchordal", "Q_n, 2^f || n: not chordal under either stated prime condition",
       [](CheckContext &c) { return checks::even_nonchordal(c, F::qn); }},
  };
  return all;
}

inline const Theorem &find_theorem(std::string_view id) {
  for (const auto &t : catalogue())
    if (t.id == id) return t;
  throw InvalidArgument("unknown theorem id '" + std::string(id) + "' (see 'pgk list')");
}

inline std::vector<std::string> all_theorem_ids() {
  std::vector<std::string> out;
  for (const auto &t : catalogue()) out.emplace_back(t.id);
  return out;
}

// Runs checks against an already built group, sharing graphs between them.
inline std::vector<VerificationOutcome> run_checks(const std::vector<std::string> &ids, const FiniteGroup &g,
                                                   const Limits &lim) {
  std::vector<const Theorem *> ts;
  for (const auto &id : ids) ts.push_back(&find_theorem(id));
  CheckContext ctx(g, lim);
  std::vector<VerificationOutcome> out;
  for (const Theorem *t : ts) {
    VerificationOutcome o;
    o.theorem = std::string(t->id);
    o.spec = g.spec();
    auto start = std::chrono::steady_clock::now();
    try {
      CheckResult r = t->check(ctx);
      o.status = r.status;
      o.witness = std::move(r.witness);
      o.note = std::move(r.note);
    } catch (const BudgetExhausted &e) {
      o.status = Status::unknown;
      o.note = e.what();
    } catch (const InternalError &e) {
      o.status = Status::fail;
      o.witness = {{"internal_error", e.what()}};
      o.note = "internal consistency check failed";
    }
    if (o.status == Status::fail && o.witness.is_null()) throw InternalError(o.theorem + ": failure without a witness");
    o.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(o));
  }
  return out;
}

inline std::vector<VerificationOutcome> run_checks(const std::vector<std::string> &ids, const GroupSpec &spec,
                                                   const Limits &lim) {
  FiniteGroup g = build_group(spec, lim.order_cap);
  return run_checks(ids, g, lim);
}

inline VerificationOutcome run_check(std::string_view id, const GroupSpec &spec, const Limits &lim = {}) {
  return run_checks({std::string(id)}, spec, lim).front();
}

inline std::size_t sweep_key(const GroupSpec &s) { return s.params.empty() ? 0 : static_cast<std::size_t>(s.params.front()); }

// One group per n in [lo, hi], spread over `jobs` threads. Groups over the
// order cap become skip outcomes instead of aborting the sweep. Results are
// sorted by (theorem id, n).
inline std::vector<VerificationOutcome> run_sweep(const std::vector<std::string> &ids, GroupSpec::Family family,
                                                  u64 lo, u64 hi, unsigned jobs, const Limits &lim = {}) {
  if (family == GroupSpec::Family::prod) throw InvalidArgument("sweeps run over zn, un or qn");
  if (lo < 1 || lo > hi) throw InvalidArgument("sweep range must satisfy 1 <= a <= b");
  for (const auto &id : ids) find_theorem(id);
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<VerificationOutcome>> per(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      GroupSpec spec{family, {lo + i}};
      try {
        per[i] = run_checks(ids, spec, lim);
      } catch (const CapExceeded &e) {
        for (const auto &id : ids) {
          VerificationOutcome o;
          o.theorem = id;
          o.spec = spec;
          o.status = Status::skip;
          o.note = e.what();
          per[i].push_back(std::move(o));
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<VerificationOutcome> out;
  for (auto &v : per)
    for (auto &o : v) out.push_back(std::move(o));
  std::stable_sort(out.begin(), out.end(), [](const VerificationOutcome &a, const VerificationOutcome &b) {
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    return sweep_key(a.spec) < sweep_key(b.spec);
  });
  return out;
}

inline Json to_json(const VerificationOutcome &o, bool timings = false) {
  Json j = {{"theorem", o.theorem}, {"spec", o.spec.to_string()}, {"status", to_string(o.status)}, {"witness", o.witness}, {"note", o.note}};
  if (timings) j["millis"] = std::round(o.millis * 1000.0) / 1000.0;
  return j;
}

struct StatusCounts {
  std::size_t pass = 0, fail = 0, unknown = 0, skip = 0;
};

inline StatusCounts count_statuses(const std::vector<VerificationOutcome> &v) {
  StatusCounts c;
  for (const auto &o : v) switch (o.status) {
    case Status::pass: ++c.pass; break;
    case Status::fail: ++c.fail; break;
    case Status::unknown: ++c.unknown; break;
    case Status::skip: ++c.skip; break;
    }
  return c;
}

inline Json verification_json(const std::vector<VerificationOutcome> &v, bool timings = false) {
  Json outcomes = Json::array();
  for (const auto &o : v) outcomes.push_back(to_json(o, timings));
  StatusCounts c = count_statuses(v);
  return {{"outcomes", outcomes},
          {"summary", {{"total", v.size()}, {"pass", c.pass}, {"fail", c.fail}, {"unknown", c.unknown}, {"skip", c.skip}}}};
}

inline std::string verification_csv(const std::vector<VerificationOutcome> &v, bool timings = false) {
  std::vector<std::string> header{"theorem", "spec", "status", "note"};
  if (timings) header.push_back("millis");
  std::string out = csv_row(header);
  for (const auto &o : v) {
    std::vector<std::string> row{o.theorem, o.spec.to_string(), to_string(o.status), o.note};
    if (timings) row.push_back(json_scalar_text(to_json(o, true)["millis"]));
    out += csv_row(row);
  }
  return out;
}

} // namespace pgk

#endif
