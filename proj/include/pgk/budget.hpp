#ifndef PGK_BUDGET_HPP
#define PGK_BUDGET_HPP

#include <cstdint>
#include <string>

#include "pgk/errors.hpp"

namespace pgk {

// Node limits for the exhaustive searches. Running out raises BudgetExhausted.
struct Limits {
  std::size_t order_cap = 5000;
  std::uint64_t clique_nodes = 20'000'000;    // clique, colouring, independence
  std::uint64_t hamiltonian_nodes = 10'000'000;
  std::uint64_t hole_nodes = 50'000'000;      // chordless-path extensions
  std::size_t path_bruteforce_cap = 24;       // vertices
  std::size_t hole_expansion_limit = 2'000'000;
};

class NodeCounter {
public:
  NodeCounter(std::uint64_t limit, const char *what) : limit_(limit), what_(what) {}
  void tick() {
    if (++used_ > limit_)
      throw BudgetExhausted(std::string(what_) + ": search budget of " + std::to_string(limit_) +
                            " nodes exhausted");
  }
  std::uint64_t used() const noexcept { return used_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char *what_;
};

} // namespace pgk

#endif
