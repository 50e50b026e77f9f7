#ifndef PGK_NUMTHEORY_HPP
#define PGK_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <limits>
#include <numeric>
#include <vector>

#include "pgk/errors.hpp"

namespace pgk::nt {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

// Primes strictly increasing, exponents >= 1, empty exactly for 1.
using Factorization = std::vector<PrimePower>;

namespace detail {
inline void require_positive(u64 n, const char *what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": argument must be positive");
}
} // namespace detail

inline u64 checked_mul(u64 a, u64 b) {
  if (a != 0 && b > std::numeric_limits<u64>::max() / a) throw InvalidArgument("64-bit overflow");
  return a * b;
}

inline Factorization factorize(u64 n) {
  detail::require_positive(n, "factorize");
  Factorization f;
  for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

inline u64 smallest_prime_factor(u64 n) {
  detail::require_positive(n, "smallest_prime_factor");
  if (n == 1) throw InvalidArgument("smallest_prime_factor: 1 has no prime factor");
  for (u64 p = 2; p <= n / p; ++p)
    if (n % p == 0) return p;
  return n;
}

inline u64 totient(u64 n) {
  detail::require_positive(n, "totient");
  u64 r = n;
  for (const auto &[p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

// Number of prime factors counted with multiplicity.
inline unsigned big_omega(u64 n) {
  detail::require_positive(n, "big_omega");
  unsigned s = 0;
  for (const auto &pp : factorize(n)) s += pp.exponent;
  return s;
}

inline std::size_t distinct_prime_count(u64 n) { return factorize(n).size(); }

inline bool is_prime_power(u64 n) { return n > 1 && factorize(n).size() == 1; }

// Longest descending chain of cyclic subgroups, weighted by generator counts:
// psi(1) = 1 and psi(n) = phi(n) + psi(n / p) with p the smallest prime of n.
inline u64 psi(u64 n) {
  detail::require_positive(n, "psi");
  u64 total = 0;
  while (n > 1) {
    total += totient(n);
    n /= smallest_prime_factor(n);
  }
  return total + 1;
}

// p prime and p = 2^(2^t) + 1.
inline bool is_fermat_prime(u64 p) {
  if (p < 3 || !is_prime(p)) return false;
  u64 m = p - 1;
  if ((m & (m - 1)) != 0) return false;
  unsigned k = 0;
  while (m > 1) {
    m >>= 1;
    ++k;
  }
  return (k & (k - 1)) == 0;
}

inline std::vector<u64> divisors(u64 n) {
  detail::require_positive(n, "divisors");
  std::vector<u64> ds{1};
  for (const auto &[p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Exponent of p in n (the f with p^f || n).
inline unsigned valuation(u64 n, u64 p) {
  detail::require_positive(n, "valuation");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline bool is_squarefree(u64 n) {
  for (const auto &pp : factorize(n))
    if (pp.exponent > 1) return false;
  return true;
}

} // namespace pgk::nt

#endif
