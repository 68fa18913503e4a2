#include <omp.h>

#include <vector>

#include "kummer7/errors.hpp"
#include "kummer7/kernels.hpp"

namespace kummer7::kernels {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

namespace omp {

namespace {

void require_table(const PrimeField& field) {
  if (!field.has_table()) throw ArgumentError("OpenMP kernels need a Legendre table on the field");
}

// Forward differences of a monic cubic f at x = 0: f(0), f(1)-f(0), second difference; the
// third difference is the constant 6. Stepping x by one then costs three modular additions.
struct CubicStepper {
  std::uint64_t p, value, d1, d2, d3;

  CubicStepper(std::uint64_t p_, std::uint64_t a, std::uint64_t b, std::uint64_t c) : p(p_) {
    value = c;
    d1 = (1 + a + b) % p;
    d2 = (6 + 2 * a) % p;
    d3 = 6 % p;
  }

  void step() {
    value += d1;
    if (value >= p) value -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
};

std::uint64_t eval_t(std::span<const std::int64_t> coeffs, std::uint64_t t, std::uint64_t p) {
  // |coeffs| <= 32 and residues < 2^31, so every intermediate stays below 2^63.
  std::uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const std::int64_t c = *it % static_cast<std::int64_t>(p);
    acc = (acc * t + static_cast<std::uint64_t>(c < 0 ? c + static_cast<std::int64_t>(p) : c)) % p;
  }
  return acc;
}

CubicStepper p1_stepper(std::uint64_t t, std::uint64_t p) {
  return CubicStepper(p, eval_t(p1_model::kA, t, p), eval_t(p1_model::kB, t, p), eval_t(p1_model::kC, t, p));
}

}  // namespace

std::int64_t surface_character_sum(const PrimeField& field) {
  require_table(field);
  const std::uint64_t p = field.p();
  const std::int8_t* chi = field.table().data();
  const auto n = static_cast<std::int64_t>(p);
  std::int64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::int64_t t = 0; t < n; ++t) {
    CubicStepper f = p1_stepper(static_cast<std::uint64_t>(t), p);
    std::int64_t row = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      row += chi[f.value];
      f.step();
    }
    sum += row;
  }
  return sum;
}

std::int64_t curve_character_sum(const CubicMod& p2, const PrimeField& field) {
  require_table(field);
  const std::uint64_t p = field.p();
  const std::int8_t* chi = field.table().data();
  const auto n = static_cast<std::int64_t>(p);
  std::int64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::int64_t x = 0; x < n; ++x) {
    const auto xx = static_cast<std::uint64_t>(x);
    const std::uint64_t v = (((xx + p2[2]) % p * xx + p2[1]) % p * xx + p2[0]) % p;
    sum += chi[v];
  }
  return sum;
}

std::int64_t product_character_sum(const CubicMod& p2, const PrimeField& field) {
  require_table(field);
  const std::uint64_t p = field.p();
  const std::int8_t* chi = field.table().data();
  std::vector<std::uint64_t> curve_values(p);
  {
    CubicStepper g(p, p2[2], p2[1], p2[0]);
    for (std::uint64_t x2 = 0; x2 < p; ++x2) {
      curve_values[x2] = g.value;
      g.step();
    }
  }
  const auto n = static_cast<std::int64_t>(p);
  std::int64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::int64_t t = 0; t < n; ++t) {
    CubicStepper f = p1_stepper(static_cast<std::uint64_t>(t), p);
    std::int64_t row = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      for (std::uint64_t x2 = 0; x2 < p; ++x2) row += chi[f.value * curve_values[x2] % p];
      f.step();
    }
    sum += row;
  }
  return sum;
}

std::int64_t p1_zero_count(const PrimeField& field) {
  const std::uint64_t p = field.p();
  const auto n = static_cast<std::int64_t>(p);
  std::int64_t zeros = 0;
#pragma omp parallel for schedule(static) reduction(+ : zeros)
  for (std::int64_t t = 0; t < n; ++t) {
    CubicStepper f = p1_stepper(static_cast<std::uint64_t>(t), p);
    for (std::uint64_t x = 0; x < p; ++x) {
      zeros += f.value == 0 ? 1 : 0;
      f.step();
    }
  }
  return zeros;
}

}  // namespace omp

}  // namespace kummer7::kernels
