#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace udrange {

/// Tabulated Möbius function mu(j) for 1 <= j <= limit.
///
/// Values are stored in a flat signed-byte table; index 0 is unused and
/// holds 0. The table is immutable after construction.
class MobiusTable {
 public:
  explicit MobiusTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  /// mu(j). `j` must be in [1, limit].
  int operator()(std::uint64_t j) const { return values_[j]; }

  /// Raw table, `values()[j] == mu(j)`; `values()[0] == 0`.
  std::span<const std::int8_t> values() const { return values_; }

 private:
  std::uint64_t limit_;
  std::vector<std::int8_t> values_;
};

/// Linear sieve. Throws std::invalid_argument when `limit` is 0.
MobiusTable sieve_mobius(std::uint64_t limit);

/// Riemann zeta at an integer argument m >= 2, accurate to `tol`.
///
/// The partial sum up to J is bracketed by the integral bounds on the tail,
///   J^(1-m)/(m-1) > sum_{j>J} j^-m > (J+1)^(1-m)/(m-1),
/// and the bracket midpoint is added. J is the smallest value for which the
/// half-width of the bracket is below `tol`, so the error is certified.
/// Throws std::domain_error for m < 2 and std::invalid_argument for tol <= 0
/// or a tolerance finer than the working precision can certify.
double zeta_int(unsigned m, double tol);

/// gcd of all values, folded left with an early exit at 1.
/// Throws std::invalid_argument on empty input or a zero entry.
std::uint64_t gcd_all(std::span<const std::uint64_t> values);

}  // namespace udrange
