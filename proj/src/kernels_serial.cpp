#include "kummer7/kernels.hpp"

namespace kummer7::kernels::serial {

namespace {

std::uint64_t p1_at(std::uint64_t x, std::uint64_t t, const PrimeField& f) {
  const std::uint64_t a = eval_poly_mod(p1_model::kA, t, f);
  const std::uint64_t b = eval_poly_mod(p1_model::kB, t, f);
  const std::uint64_t c = eval_poly_mod(p1_model::kC, t, f);
  const std::array<std::int64_t, 4> cubic{static_cast<std::int64_t>(c), static_cast<std::int64_t>(b),
                                          static_cast<std::int64_t>(a), 1};
  return eval_poly_mod(cubic, x, f);
}

std::uint64_t p2_at(const CubicMod& p2, std::uint64_t x, const PrimeField& f) {
  std::uint64_t acc = 0;
  for (int k = 3; k >= 0; --k) acc = f.add(f.mul(acc, x), p2[static_cast<std::size_t>(k)]);
  return acc;
}

}  // namespace

std::int64_t surface_character_sum(const PrimeField& field) {
  const std::uint64_t p = field.p();
  std::int64_t sum = 0;
  for (std::uint64_t t = 0; t < p; ++t) {
    for (std::uint64_t x = 0; x < p; ++x) sum += legendre_euler(p1_at(x, t, field), p);
  }
  return sum;
}

std::int64_t curve_character_sum(const CubicMod& p2, const PrimeField& field) {
  const std::uint64_t p = field.p();
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) sum += legendre_euler(p2_at(p2, x, field), p);
  return sum;
}

std::int64_t product_character_sum(const CubicMod& p2, const PrimeField& field) {
  const std::uint64_t p = field.p();
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t t = 0; t < p; ++t) {
      const std::uint64_t v1 = p1_at(x, t, field);
      for (std::uint64_t x2 = 0; x2 < p; ++x2) {
        sum += legendre_euler(field.mul(v1, p2_at(p2, x2, field)), p);
      }
    }
  }
  return sum;
}

std::int64_t p1_zero_count(const PrimeField& field) {
  const std::uint64_t p = field.p();
  std::int64_t n = 0;
  for (std::uint64_t t = 0; t < p; ++t) {
    for (std::uint64_t x = 0; x < p; ++x) n += p1_at(x, t, field) == 0 ? 1 : 0;
  }
  return n;
}

}  // namespace kummer7::kernels::serial
