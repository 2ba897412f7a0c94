#include "numtheory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace udrange {

MobiusTable::MobiusTable(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("sieve_mobius: limit must be >= 1");
  values_.assign(limit + 1, 0);
  values_[1] = 1;

  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      values_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        values_[ip] = 0;  // p^2 | ip
        break;
      }
      values_[ip] = static_cast<std::int8_t>(-values_[i]);
    }
  }
}

MobiusTable sieve_mobius(std::uint64_t limit) { return MobiusTable(limit); }

namespace {

// Largest number of series terms we are willing to sum.
constexpr std::uint64_t kMaxZetaTerms = 200'000'000;

long double tail_integral(long double from, unsigned m) {
  return std::pow(from, 1.0L - static_cast<long double>(m)) / static_cast<long double>(m - 1);
}

}  // namespace

double zeta_int(unsigned m, double tol) {
  if (m < 2) throw std::domain_error("zeta_int: m must be >= 2 (series diverges at m = 1)");
  if (!(tol > 0.0)) throw std::invalid_argument("zeta_int: tol must be positive");
  // Below this the final rounding to double dominates the certified error.
  if (tol < 4e-16) throw std::invalid_argument("zeta_int: tol below double precision");

  auto half_width = [m](std::uint64_t j) {
    const long double a = static_cast<long double>(j);
    return 0.5L * (tail_integral(a, m) - tail_integral(a + 1.0L, m));
  };

  // Smallest J with half_width(J) < tol; half_width is decreasing in J.
  std::uint64_t hi = 1;
  while (half_width(hi) >= tol) {
    hi *= 2;
    if (hi > kMaxZetaTerms)
      throw std::invalid_argument("zeta_int: tol " + std::to_string(tol) + " needs too many terms for m = " +
                                  std::to_string(m));
  }
  std::uint64_t lo = hi / 2;
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (half_width(mid) < tol)
      hi = mid;
    else
      lo = mid;
  }
  const std::uint64_t terms = hi;

  // Smallest terms first.
  long double sum = 0.0L;
  for (std::uint64_t j = terms; j >= 1; --j) sum += std::pow(static_cast<long double>(j), -static_cast<long double>(m));
  const long double a = static_cast<long double>(terms);
  sum += 0.5L * (tail_integral(a, m) + tail_integral(a + 1.0L, m));
  return static_cast<double>(sum);
}

std::uint64_t gcd_all(std::span<const std::uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("gcd_all: empty input");
  std::uint64_t g = 0;
  for (std::uint64_t v : values) {
    if (v == 0) throw std::invalid_argument("gcd_all: zero value");
    if (g != 1) g = std::gcd(g, v);
  }
  return g;
}

}  // namespace udrange
