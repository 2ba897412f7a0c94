#pragma once
// Brute-force reference implementations. Deliberately naive and independent
// of the library code paths they check.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t gcd_scan(const std::vector<std::uint64_t>& v) {
  std::uint64_t lo = v[0];
  for (auto x : v) lo = std::min(lo, x);
  for (std::uint64_t d = lo; d >= 1; --d) {
    bool all = true;
    for (auto x : v) all = all && x % d == 0;
    if (all) return d;
  }
  return 1;
}

// Ordered m-tuples drawn from `set` whose gcd is 1, by full enumeration.
inline std::uint64_t coprime_tuples(const std::vector<std::uint64_t>& set, unsigned m) {
  std::vector<std::size_t> pos(m, 0);
  std::uint64_t hits = 0;
  while (true) {
    std::uint64_t g = 0;
    for (unsigned i = 0; i < m; ++i) g = std::gcd(g, set[pos[i]]);
    if (g == 1) ++hits;
    unsigned i = 0;
    while (i < m && ++pos[i] == set.size()) pos[i++] = 0;
    if (i == m) break;
  }
  return hits;
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace oracle
