#ifndef PGK_GROUPS_HPP
#define PGK_GROUPS_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "pgk/bitset.hpp"
#include "pgk/errors.hpp"
#include "pgk/numtheory.hpp"

namespace pgk {

using Element = Vertex;
using nt::u64;

inline constexpr std::size_t default_order_cap = 5000;

// Addressing of a group on the command line: zn:N, prod:N1xN2x...xNk, un:N, qn:N.
struct GroupSpec {
  enum class Family { zn, prod, un, qn };

  Family family = Family::zn;
  std::vector<u64> params;

  static GroupSpec cyclic(u64 n) { return {Family::zn, {n}}; }
  static GroupSpec product(std::vector<u64> ns) { return {Family::prod, std::move(ns)}; }
  static GroupSpec units(u64 n) { return {Family::un, {n}}; }
  static GroupSpec residues(u64 n) { return {Family::qn, {n}}; }

  static std::string_view family_name(Family f) {
    switch (f) {
    case Family::zn: return "zn";
    case Family::prod: return "prod";
    case Family::un: return "un";
    case Family::qn: return "qn";
    }
    return "?";
  }

  static Family parse_family(std::string_view tok) {
    if (tok == "zn") return Family::zn;
    if (tok == "prod") return Family::prod;
    if (tok == "un") return Family::un;
    if (tok == "qn") return Family::qn;
    throw InvalidArgument("unknown group family '" + std::string(tok) + "' (expected zn, prod, un or qn)");
  }

  static u64 parse_positive(std::string_view tok, std::string_view whole) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidArgument("bad group spec '" + std::string(whole) + "': '" + std::string(tok) +
                            "' is not a positive integer");
    if (v == 0)
      throw InvalidArgument("bad group spec '" + std::string(whole) + "': '" + std::string(tok) +
                            "' must be at least 1");
    return v;
  }

  static GroupSpec parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw InvalidArgument("bad group spec '" + std::string(text) + "': missing ':' after family");
    GroupSpec s;
    s.family = parse_family(text.substr(0, colon));
    std::string_view rest = text.substr(colon + 1);
    if (s.family == Family::prod) {
      while (true) {
        auto x = rest.find('x');
        s.params.push_back(parse_positive(rest.substr(0, x), text));
        if (x == std::string_view::npos) break;
        rest = rest.substr(x + 1);
      }
    } else {
      s.params.push_back(parse_positive(rest, text));
    }
    return s;
  }

  std::string to_string() const {
    std::string out(family_name(family));
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += 'x';
      out += std::to_string(params[i]);
    }
    return out;
  }

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

// Enumerated finite group. Element 0 is the identity. Immutable once built.
class FiniteGroup {
public:
  struct CyclicLaw {
    u64 n;
  };
  struct ProductLaw {
    std::vector<u64> moduli;
    std::vector<u64> strides;
    std::vector<std::uint32_t> digits; // element-major, one digit per factor
  };
  struct ModularLaw {
    u64 modulus;
    std::vector<u64> residues;        // element index -> residue
    std::vector<std::int32_t> index;  // residue -> element index or -1
  };
  using Law = std::variant<CyclicLaw, ProductLaw, ModularLaw>;

  FiniteGroup(GroupSpec spec, std::size_t order, Law law)
      : spec_(std::move(spec)), order_(order), law_(std::move(law)), id_(next_id()) {
    build_caches();
  }

  const GroupSpec &spec() const noexcept { return spec_; }
  std::string name() const { return spec_.to_string(); }
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }
  // Distinguishes independently built groups; graphs carry it to detect mixing.
  std::uint64_t source_id() const noexcept { return id_; }

  Element compose(Element a, Element b) const {
    return std::visit(
        [&](const auto &law) -> Element {
          using L = std::decay_t<decltype(law)>;
          if constexpr (std::is_same_v<L, CyclicLaw>) {
            return static_cast<Element>((u64{a} + b) % law.n);
          } else if constexpr (std::is_same_v<L, ProductLaw>) {
            const std::size_t k = law.moduli.size();
            const std::uint32_t *da = &law.digits[std::size_t{a} * k], *db = &law.digits[std::size_t{b} * k];
            u64 out = 0;
            for (std::size_t i = 0; i < k; ++i) {
              u64 d = u64{da[i]} + db[i];
              if (d >= law.moduli[i]) d -= law.moduli[i];
              out += d * law.strides[i];
            }
            return static_cast<Element>(out);
          } else {
            u64 r = (law.residues[a] * law.residues[b]) % law.modulus;
            return static_cast<Element>(law.index[r]);
          }
        },
        law_);
  }

  Element power(Element x, u64 k) const {
    Element r = identity();
    Element base = x;
    while (k) {
      if (k & 1U) r = compose(r, base);
      base = compose(base, base);
      k >>= 1U;
    }
    return r;
  }

  std::size_t element_order(Element x) const noexcept { return orders_[x]; }
  const std::vector<std::size_t> &element_orders() const noexcept { return orders_; }

  // <x> as a bit row: bit y set iff y is a power of x.
  const Bitset &cyclic_subgroup_bits(Element x) const noexcept { return gen_[x]; }
  std::vector<Element> cyclic_subgroup(Element x) const { return gen_[x].to_vector(); }

  // <x> <= <y>, i.e. x is a power of y.
  bool subgroup_leq(Element x, Element y) const noexcept { return gen_[y].test(x); }
  bool same_cyclic_subgroup(Element x, Element y) const noexcept { return class_of_[x] == class_of_[y]; }
  // Index of the ~-class of x; classes numbered by their smallest element.
  std::size_t cyclic_class(Element x) const noexcept { return class_of_[x]; }
  std::size_t cyclic_class_count() const noexcept { return class_count_; }

  bool is_abelian() const noexcept { return abelian_; }
  bool is_cyclic() const noexcept {
    return std::any_of(orders_.begin(), orders_.end(), [&](std::size_t o) { return o == order_; });
  }
  const std::vector<Element> &generating_set() const noexcept { return generators_; }
  bool associativity_checked() const noexcept { return associativity_checked_; }
  static constexpr std::size_t associativity_work_limit = 100'000'000;

  std::string label(Element x) const {
    return std::visit(
        [&](const auto &law) -> std::string {
          using L = std::decay_t<decltype(law)>;
          if constexpr (std::is_same_v<L, CyclicLaw>) {
            return std::to_string(x);
          } else if constexpr (std::is_same_v<L, ProductLaw>) {
            std::string s = "(";
            for (std::size_t i = 0; i < law.moduli.size(); ++i) {
              if (i) s += ',';
              s += std::to_string((x / law.strides[i]) % law.moduli[i]);
            }
            return s + ")";
          } else {
            return std::to_string(law.residues[x]);
          }
        },
        law_);
  }

  // Integer the element stands for: k in Z_n, the residue in U_n / Q_n, the
  // mixed-radix index in a product.
  u64 value(Element x) const {
    if (auto *m = std::get_if<ModularLaw>(&law_)) return m->residues[x];
    return x;
  }

  // Element index for a tuple of a product group.
  Element from_tuple(std::span<const u64> digits) const {
    auto *p = std::get_if<ProductLaw>(&law_);
    if (!p || digits.size() != p->moduli.size()) throw InvalidArgument("tuple does not match product group");
    u64 idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) idx += (digits[i] % p->moduli[i]) * p->strides[i];
    return static_cast<Element>(idx);
  }

  // Element index of a residue in U_n / Q_n.
  Element from_residue(u64 r) const {
    auto *m = std::get_if<ModularLaw>(&law_);
    if (!m) throw InvalidArgument("group is not a residue group");
    r %= m->modulus;
    if (m->index[r] < 0) throw InvalidArgument("residue " + std::to_string(r) + " is not in the group");
    return static_cast<Element>(m->index[r]);
  }

private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }

  void build_caches() {
    const std::size_t n = order_;
    if (n == 0) throw InvalidArgument("a group has at least one element");
    for (Element x = 0; x < n; ++x)
      if (compose(0, x) != x || compose(x, 0) != x)
        throw InternalError("element 0 is not an identity in " + name());

    orders_.assign(n, 0);
    gen_.assign(n, Bitset(n));
    for (Element x = 0; x < n; ++x) {
      Element y = 0;
      std::size_t k = 0;
      do {
        gen_[x].set(y);
        y = compose(y, x);
        if (++k > n) throw InternalError("powers of an element never return to the identity in " + name());
      } while (y != 0);
      orders_[x] = k;
      if (n % k != 0) throw InternalError("element order does not divide the group order in " + name());
    }

    class_of_.assign(n, n);
    class_count_ = 0;
    for (Element x = 0; x < n; ++x) {
      if (class_of_[x] != n) continue;
      gen_[x].for_each([&](Element y) {
        if (orders_[y] == orders_[x]) class_of_[y] = class_count_;
      });
      ++class_count_;
    }

    // Greedy generating set, then Light's associativity test on it: if
    // (x g) y == x (g y) for all x, y and every generator g, the law is
    // associative.
    Bitset reached(n);
    reached.set(0);
    std::vector<Element> members{0};
    for (Element x = 1; x < n; ++x) {
      if (reached.test(x)) continue;
      generators_.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (Element g : generators_) {
          Element h = compose(members[i], g);
          if (!reached.test(h)) {
            reached.set(h);
            members.push_back(h);
          }
        }
    }
    // The built-in laws are associative by construction; the test is a guard
    // against table bugs and is skipped when it would dominate build time.
    associativity_checked_ = generators_.size() * n * n <= associativity_work_limit;
    if (associativity_checked_)
      for (Element g : generators_)
        for (Element x = 0; x < n; ++x) {
          Element xg = compose(x, g);
          for (Element y = 0; y < n; ++y)
            if (compose(xg, y) != compose(x, compose(g, y)))
              throw InternalError("composition law is not associative in " + name());
        }

    abelian_ = true;
    for (Element a : generators_)
      for (Element b : generators_)
        if (compose(a, b) != compose(b, a)) abelian_ = false;
  }

  GroupSpec spec_;
  std::size_t order_;
  Law law_;
  std::uint64_t id_;
  std::vector<std::size_t> orders_;
  std::vector<Bitset> gen_;
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
  std::vector<Element> generators_;
  bool abelian_ = true;
  bool associativity_checked_ = false;
};

namespace detail {
inline void check_cap(u64 order, std::size_t cap, const std::string &what) {
  if (order > cap)
    throw CapExceeded(what + " has order " + std::to_string(order) + ", above the order cap " + std::to_string(cap));
}
} // namespace detail

inline FiniteGroup build_cyclic(u64 n, std::size_t cap = default_order_cap) {
  if (n == 0) throw InvalidArgument("zn: n must be at least 1");
  detail::check_cap(n, cap, "zn:" + std::to_string(n));
  return FiniteGroup(GroupSpec::cyclic(n), n, FiniteGroup::CyclicLaw{n});
}

inline FiniteGroup build_product(std::vector<u64> ns, std::size_t cap = default_order_cap) {
  if (ns.empty()) throw InvalidArgument("prod: at least one factor is required");
  GroupSpec spec = GroupSpec::product(ns);
  u64 order = 1;
  for (u64 m : ns) {
    if (m == 0) throw InvalidArgument("prod: factors must be at least 1");
    if (m > cap || order > cap / m) {
      throw CapExceeded(spec.to_string() + " exceeds the order cap " + std::to_string(cap));
    }
    order *= m;
  }
  std::vector<u64> strides(ns.size(), 1);
  for (std::size_t i = ns.size() - 1; i-- > 0;) strides[i] = strides[i + 1] * ns[i + 1];
  std::vector<std::uint32_t> digits(order * ns.size());
  for (u64 x = 0; x < order; ++x)
    for (std::size_t i = 0; i < ns.size(); ++i)
      digits[x * ns.size() + i] = static_cast<std::uint32_t>((x / strides[i]) % ns[i]);
  return FiniteGroup(std::move(spec), order,
                     FiniteGroup::ProductLaw{std::move(ns), std::move(strides), std::move(digits)});
}

namespace detail {
inline FiniteGroup modular_group(GroupSpec spec, u64 n, std::vector<u64> residues) {
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  // The residue of 1 (0 when n == 1) goes first so that it gets index 0.
  u64 one = 1 % n;
  auto it = std::find(residues.begin(), residues.end(), one);
  std::rotate(residues.begin(), it, it + 1);
  std::vector<std::int32_t> index(n, -1);
  for (std::size_t i = 0; i < residues.size(); ++i) index[residues[i]] = static_cast<std::int32_t>(i);
  std::size_t order = residues.size();
  return FiniteGroup(std::move(spec), order, FiniteGroup::ModularLaw{n, std::move(residues), std::move(index)});
}

inline std::vector<u64> unit_residues(u64 n) {
  std::vector<u64> rs;
  for (u64 r = 0; r < n; ++r)
    if (std::gcd(r, n) == 1) rs.push_back(r);
  return rs;
}
} // namespace detail

// Multiplicative group of units mod n.
inline FiniteGroup build_units(u64 n, std::size_t cap = default_order_cap) {
  if (n == 0) throw InvalidArgument("un: n must be at least 1");
  detail::check_cap(nt::totient(n), cap, "un:" + std::to_string(n));
  return detail::modular_group(GroupSpec::units(n), n, detail::unit_residues(n));
}

// Subgroup of squares in U_n.
inline FiniteGroup build_quadratic_residues(u64 n, std::size_t cap = default_order_cap) {
  if (n == 0) throw InvalidArgument("qn: n must be at least 1");
  detail::check_cap(nt::totient(n), cap, "qn:" + std::to_string(n));
  std::vector<u64> squares;
  for (u64 r : detail::unit_residues(n)) squares.push_back((r * r) % n);
  return detail::modular_group(GroupSpec::residues(n), n, std::move(squares));
}

inline FiniteGroup build_group(const GroupSpec &spec, std::size_t cap = default_order_cap) {
  switch (spec.family) {
  case GroupSpec::Family::zn: return build_cyclic(spec.params.at(0), cap);
  case GroupSpec::Family::prod: return build_product(spec.params, cap);
  case GroupSpec::Family::un: return build_units(spec.params.at(0), cap);
  case GroupSpec::Family::qn: return build_quadratic_residues(spec.params.at(0), cap);
  }
  throw InvalidArgument("unknown family");
}

inline FiniteGroup build_group(std::string_view spec, std::size_t cap = default_order_cap) {
  return build_group(GroupSpec::parse(spec), cap);
}

// Elements commuting with everything. Checking against a generating set is
// enough: g commutes with all of G iff it commutes with each generator.
inline std::vector<Element> group_center(const FiniteGroup &g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : g.generating_set())
      if (g.compose(x, s) != g.compose(s, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

// Sorted multiset of element orders. Two finite abelian groups are isomorphic
// iff these agree.
inline std::vector<std::size_t> abelian_order_multiset(const FiniteGroup &g) {
  if (!g.is_abelian()) throw InvalidArgument(g.name() + " is not abelian");
  std::vector<std::size_t> out = g.element_orders();
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace pgk

#endif
