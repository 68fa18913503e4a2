#pragma once

// Brute-force reference computations shared by the tests. Nothing here calls into the
// library's counting or series code; only BigInt comes from it.

#include <cstdint>
#include <utility>
#include <vector>

#include "kummer7/bigint.hpp"

namespace oracle {

using kummer7::BigInt;

inline std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t n) {
  std::vector<BigInt> r(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// prod_delta prod_k (1 - q^(k delta))^m, first n coefficients, by literal multiplication.
/// Negative powers use 1/(1 - q^e) = sum_j q^(je).
inline std::vector<BigInt> eta_product(const std::vector<std::pair<int, int>>& factors, std::size_t n) {
  std::vector<BigInt> r(n, 0);
  r[0] = 1;
  for (auto [delta, m] : factors) {
    for (std::size_t k = 1; k * delta < n; ++k) {
      const std::size_t e = k * delta;
      std::vector<BigInt> f(n, 0);
      if (m > 0) {
        f[0] = 1;
        f[e] = -1;
      } else {
        for (std::size_t j = 0; j < n; j += e) f[j] = 1;
      }
      for (int i = 0; i < (m > 0 ? m : -m); ++i) r = mul(r, f, n);
    }
  }
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

/// Number of y in F_p with y^2 = v, for each v.
inline std::vector<int> square_roots_count(std::int64_t p) {
  std::vector<int> c(static_cast<std::size_t>(p), 0);
  for (std::int64_t y = 0; y < p; ++y) ++c[static_cast<std::size_t>(y * y % p)];
  return c;
}

inline std::int64_t p1(std::int64_t x, std::int64_t t, std::int64_t p) {
  x = mod(x, p);
  t = mod(t, p);
  const std::int64_t t2 = t * t % p, t3 = t2 * t % p, t4 = t3 * t % p;
  const std::int64_t a = mod(t4 - 6 * t3 + 3 * t2 + 2 * t + 1, p);
  const std::int64_t b = mod(8 * t2 % p * mod(t3 - 2 * t2 + 1, p), p);
  const std::int64_t u = mod(t - 1, p);
  const std::int64_t c = 16 * t4 % p * (u * u % p) % p;
  return mod(((x * x % p) * x + a * (x * x % p) + b * x + c) % p, p);
}

inline std::int64_t cubic(std::int64_t x, std::int64_t e1, std::int64_t e2, std::int64_t e3, std::int64_t p) {
  return mod(mod(x - e1, p) * mod(x - e2, p) % p * mod(x - e3, p), p);
}

/// #E(F_p) for y^2 = (x-e1)(x-e2)(x-e3) with integer roots: all (x, y) pairs plus infinity.
inline std::int64_t curve_points(std::int64_t e1, std::int64_t e2, std::int64_t e3, std::int64_t p) {
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      if (y * y % p == cubic(x, e1, e2, e3, p)) ++n;
    }
  }
  return n;
}

/// #{(x, y, t) : y^2 = p1(x, t)}.
inline std::int64_t surface_affine_points(std::int64_t p) {
  const auto sq = square_roots_count(p);
  std::int64_t n = 0;
  for (std::int64_t t = 0; t < p; ++t) {
    for (std::int64_t x = 0; x < p; ++x) n += sq[static_cast<std::size_t>(p1(x, t, p))];
  }
  return n;
}

/// #{(x, t, x2, y) : y^2 = p1(x, t) p2(x2)}, the affine model of X' by a four-fold loop that is
/// cut to three by counting square roots.
inline std::int64_t x_prime_points(std::int64_t e1, std::int64_t e2, std::int64_t e3, std::int64_t p) {
  const auto sq = square_roots_count(p);
  std::int64_t n = 0;
  for (std::int64_t t = 0; t < p; ++t) {
    for (std::int64_t x = 0; x < p; ++x) {
      const std::int64_t v = p1(x, t, p);
      for (std::int64_t x2 = 0; x2 < p; ++x2) {
        n += sq[static_cast<std::size_t>(v * cubic(x2, e1, e2, e3, p) % p)];
      }
    }
  }
  return n;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace oracle
