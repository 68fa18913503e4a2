#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace kummer7 {

/// Largest prime for which a Legendre table may be built (one byte per residue).
inline constexpr std::uint64_t kDefaultTableGuard = std::uint64_t{1} << 28;

/// Largest prime the counting code accepts; keeps p^2 loop bounds and residue products in 64 bits.
inline constexpr std::uint64_t kCountingPrimeLimit = std::uint64_t{1} << 31;

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// The prime field F_p for an odd prime p, optionally carrying a quadratic-character table.
///
/// Immutable once built; copies share the table.
class PrimeField {
 public:
  /// Throws ArgumentError unless p is an odd prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  bool has_table() const noexcept { return table_ != nullptr; }
  /// table()[a] = legendre(a) for 0 <= a < p; empty span without a table.
  std::span<const std::int8_t> table() const noexcept {
    return table_ ? std::span<const std::int8_t>(*table_) : std::span<const std::int8_t>();
  }

  std::uint64_t reduce(std::int64_t a) const noexcept;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return mulmod(a, b, p_); }
  /// Throws ArgumentError for a = 0.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  friend PrimeField build_legendre_table(const PrimeField&, std::uint64_t);
  std::uint64_t p_;
  std::shared_ptr<const std::vector<std::int8_t>> table_;
};

/// Quadratic character of a mod p: table lookup when available, Euler's criterion otherwise.
int legendre(std::int64_t a, const PrimeField& field);

/// Euler's criterion a^((p-1)/2), never the table.
int legendre_euler(std::uint64_t a, std::uint64_t p);

/// Copy of `field` with the quadratic-character table attached. Throws ResourceError if
/// p > guard.
PrimeField build_legendre_table(const PrimeField& field, std::uint64_t guard = kDefaultTableGuard);

/// Horner evaluation of sum coeffs[k] x^k mod p; coefficients in ascending degree.
std::uint64_t eval_poly_mod(std::span<const std::int64_t> coeffs, std::uint64_t x, const PrimeField& field);

/// Odd primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace kummer7
