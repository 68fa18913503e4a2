#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kummer7/bigint.hpp"
#include "kummer7/finitefield.hpp"

namespace kummer7 {

/// y^2 = (x - e1)(x - e2)(x - e3) over Q with pairwise distinct rational roots.
///
/// Storing the 2-torsion abscissae instead of Weierstrass coefficients makes full rational
/// 2-torsion a property of the type. Roots are kept as integers over a common denominator.
class EllipticCurveQ {
 public:
  /// Throws ArgumentError on a repeated root.
  explicit EllipticCurveQ(const std::array<Rational, 3>& roots);

  /// Parses "e1,e2,e3" with entries "n" or "n/d".
  static EllipticCurveQ parse(std::string_view text);

  std::array<Rational, 3> roots() const;
  const std::array<BigInt, 3>& scaled_roots() const noexcept { return numerators_; }
  const BigInt& denominator() const noexcept { return denominator_; }

  /// Why p is a bad prime for this model, or nullopt when reduction is good.
  std::optional<std::string> bad_reduction_reason(std::uint64_t p) const;

  /// Coefficients (c0, c1, c2, 1) of p2(x) = (x-e1)(x-e2)(x-e3) mod p, ascending.
  /// Throws BadPrime when p divides the common denominator.
  std::array<std::uint64_t, 4> reduce_mod(const PrimeField& field) const;

  std::string to_string() const;

 private:
  std::array<BigInt, 3> numerators_;
  BigInt denominator_;
};

/// #E(F_p) and the trace c_p = p + 1 - #E(F_p).
struct TraceC {
  std::uint64_t p = 0;
  std::int64_t count = 0;
  std::int64_t c_p = 0;
};

/// Point count via sum_x (legendre(p2(x)) + 1) + 1. Throws BadPrime at bad reduction.
TraceC count_points(const EllipticCurveQ& curve, const PrimeField& field);

/// Always true: the representation cannot express a curve without rational 2-torsion.
constexpr bool has_rational_two_torsion(const EllipticCurveQ&) noexcept { return true; }

/// sum_t #{x in F_p : p1(x, t) = 0}, the raw affine count on the plane model of the curve of
/// nonzero 2-torsion points. This is not the smooth-model count. Meaningful for
/// p >= 5; smaller odd primes are counted the same way.
std::int64_t affine_two_torsion_count(const PrimeField& field);

}  // namespace kummer7
