#include "kummer7/finitefield.hpp"

#include <string>

#include "kummer7/errors.hpp"

namespace kummer7 {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime_u64(p)) {
    throw ArgumentError(std::to_string(p) + " is not an odd prime");
  }
}

std::uint64_t PrimeField::reduce(std::int64_t a) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ArgumentError("0 has no inverse mod " + std::to_string(p_));
  return powmod(a, p_ - 2, p_);
}

int legendre_euler(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(std::int64_t a, const PrimeField& field) {
  const std::uint64_t r = field.reduce(a);
  if (field.has_table()) return field.table()[r];
  return legendre_euler(r, field.p());
}

PrimeField build_legendre_table(const PrimeField& field, std::uint64_t guard) {
  const std::uint64_t p = field.p();
  if (p > guard) {
    throw ResourceError("Legendre table for p = " + std::to_string(p) + " exceeds the guard " +
                        std::to_string(guard));
  }
  auto table = std::make_shared<std::vector<std::int8_t>>(p, std::int8_t{-1});
  (*table)[0] = 0;
  // a^2 = (a-1)^2 + 2a - 1
  std::uint64_t sq = 0;
  for (std::uint64_t a = 1; a <= (p - 1) / 2; ++a) {
    sq += 2 * a - 1;
    if (sq >= p) sq -= p;
    (*table)[sq] = 1;
  }
  PrimeField out = field;
  out.table_ = std::move(table);
  return out;
}

std::uint64_t eval_poly_mod(std::span<const std::int64_t> coeffs, std::uint64_t x, const PrimeField& field) {
  x %= field.p();
  std::uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = field.add(field.mul(acc, x), field.reduce(*it));
  }
  return acc;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo < 3 ? 3 : lo; n <= hi; ++n) {
    if (is_prime_u64(n)) out.push_back(n);
  }
  return out;
}

}  // namespace kummer7
