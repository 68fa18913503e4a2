#pragma once

#include <array>
#include <cstdint>

#include "kummer7/finitefield.hpp"

namespace kummer7 {

/// p1(x, t) = x^3 + A(t) x^2 + B(t) x + C(t), the Weierstrass model of Y scaled to be monic
/// with integral coefficients. Coefficient lists are ascending in t.
namespace p1_model {
inline constexpr std::array<std::int64_t, 5> kA{1, 2, 3, -6, 1};             // t^4-6t^3+3t^2+2t+1
inline constexpr std::array<std::int64_t, 6> kB{0, 0, 8, 0, -16, 8};         // 8t^2(t^3-2t^2+1)
inline constexpr std::array<std::int64_t, 7> kC{0, 0, 0, 0, 16, -32, 16};    // 16t^4(t-1)^2
}  // namespace p1_model

/// Residues of p2(x) = x^3 + c2 x^2 + c1 x + c0 mod p, ascending (c0, c1, c2, 1).
using CubicMod = std::array<std::uint64_t, 4>;

/// Character-sum kernels behind the point counts. Each has a plain serial reference that
/// evaluates polynomials from scratch and uses Euler's criterion, and an OpenMP version that
/// hoists per-t coefficients and reads the field's Legendre table. The two must agree exactly.
namespace kernels {

namespace serial {
/// S1 = sum_{x,t in F_p} chi(p1(x, t)).
std::int64_t surface_character_sum(const PrimeField& field);
/// S2 = sum_{x in F_p} chi(p2(x)).
std::int64_t curve_character_sum(const CubicMod& p2, const PrimeField& field);
/// sum_{x,t,x2 in F_p} chi(p1(x, t) p2(x2)), the literal triple sum.
std::int64_t product_character_sum(const CubicMod& p2, const PrimeField& field);
/// sum_t #{x : p1(x, t) = 0 mod p}.
std::int64_t p1_zero_count(const PrimeField& field);
}  // namespace serial

namespace omp {
/// Requires field.has_table().
std::int64_t surface_character_sum(const PrimeField& field);
std::int64_t curve_character_sum(const CubicMod& p2, const PrimeField& field);
std::int64_t product_character_sum(const CubicMod& p2, const PrimeField& field);
std::int64_t p1_zero_count(const PrimeField& field);
}  // namespace omp

/// Thread count used by the OpenMP kernels (omp_get_max_threads).
int max_threads();
/// Sets the OpenMP thread count; n <= 0 leaves the runtime default.
void set_threads(int n);

}  // namespace kernels

}  // namespace kummer7
