#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "kummer7/bigint.hpp"
#include "kummer7/curves.hpp"
#include "kummer7/fibration.hpp"
#include "kummer7/finitefield.hpp"
#include "kummer7/qseries.hpp"

namespace kummer7 {

/// Hodge data of the Kummer threefold X built from Y x E.
struct KummerInvariants {
  int n_plus = 0;   // rank of the +1 eigenspace of NS(Y)
  int n_minus = 0;  // rank of the -1 eigenspace
  int c_D = 0;      // components of the fixed curve D
  int g_D = 0;      // total genus of D
  int e_D = 0;      // Euler number of D, 2 c_D - 2 g_D
  int h11 = 0;
  int h12 = 0;
  int euler_X = 0;

  /// b_0 .. b_6 of X.
  std::array<int, 7> betti() const { return {1, 0, h11, 2 * h12 + 2, h11, 0, 1}; }
};

/// (n_plus, n_minus) from n_+ - n_- = 2 + #{I_n, n > 1 even} and n_+ + n_- = rho.
/// Throws InconsistentInput on a parity mismatch or a negative solution.
std::pair<int, int> ns_eigenspace_ranks(const FiberConfiguration& fibers, int rho);

struct FixedLocus {
  int c_D = 0;
  int g_D = 0;
  int e_D = 0;
};

/// D = (O + B) x (four 2-torsion sections of E): c_D = 4(1 + #B components), g_D = 4 g(B).
FixedLocus fixed_locus_invariants(int b_components, int b_total_genus);

/// Throws TheoremConstraintViolated unless n_plus - n_minus = e_D / 4.
KummerInvariants hodge_numbers(int n_plus, int n_minus, int c_D, int g_D);

/// The Gamma_1(7) case: fibers read off the built-in j, rho(Y) = 20, B irreducible of genus 1.
KummerInvariants gamma1_7_invariants();

/// Lefschetz prediction p^3 + 20p^2 - (a_p c_p + 9p c_p + 4p b_p) + 20p + 1.
BigInt predicted_trace(std::int64_t p, std::int64_t a_p, std::int64_t b_p, std::int64_t c_p);

/// Frobenius traces on H^0 .. H^6 of X.
std::array<BigInt, 7> trace_table(std::int64_t p, std::int64_t a_p, std::int64_t b_p, std::int64_t c_p);

/// Dimensions of H^0 .. H^6 of X.
inline constexpr std::array<int, 7> kTraceTableDimensions{1, 0, 20, 30, 20, 0, 1};

/// Why p is excluded from verification for this curve, or nullopt if p is good.
std::optional<std::string> bad_prime_reason(std::uint64_t p, const EllipticCurveQ& curve);

enum class CountMethod { naive, factored };

std::string to_string(CountMethod m);
/// "naive" or "factored"; throws ParseError otherwise.
CountMethod parse_count_method(std::string_view text);

/// #X' = sum over x, x2, t of (chi(p1(x,t) p2(x2)) + 1), the literal triple sum. O(p^3).
BigInt count_X_prime_naive(const PrimeField& field, const EllipticCurveQ& curve);

/// The same count as S1 * S2 + p^3 using multiplicativity of chi. O(p^2).
BigInt count_X_prime_factored(const PrimeField& field, const EllipticCurveQ& curve);

/// The seven contributions to n_p.
struct KummerTerms {
  BigInt x_prime;        // affine model, Legendre sum
  BigInt x_infinity;     // x or x2 at infinity: 2p^2 + p
  BigInt a;              // A^1 x E: p(p - c_p + 1), counted six times
  BigInt b_surf;         // p(p - c_p + 1) + c_p, counted three times
  BigInt c;              // blown-up e_0 x E over t = infinity: p^2 + 2p + 1
  BigInt f;              // nodal-fiber correction -c_p, counted twice
  BigInt v_minus_d;      // exceptional locus: 4p(N_B + p + 1) with N_B = p + 1 - b_p

  BigInt total() const { return x_prime + x_infinity + 6 * a + 3 * b_surf + c + 2 * f + v_minus_d; }
};

struct KummerCount {
  BigInt n_counted;
  KummerTerms terms;
  std::int64_t c_p = 0;
};

/// n_p assembled from the seven terms; c_p is counted on E. Throws BadPrime.
KummerCount count_kummer(const PrimeField& field, const EllipticCurveQ& curve, std::int64_t b_p,
                         CountMethod method = CountMethod::factored);

/// One verified prime.
struct TraceRecord {
  std::uint64_t p = 0;
  std::int64_t a_p_eta = 0;
  std::int64_t a_p_count = 0;
  std::int64_t b_p = 0;
  std::int64_t c_p = 0;
  KummerTerms terms;
  BigInt n_counted;
  BigInt n_predicted;
  bool match = false;
  bool a_match = false;
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  CountMethod method = CountMethod::factored;
  /// Replaces b_p in the prediction only; exists so tests can show mismatches are caught.
  std::optional<std::int64_t> b_p_override;
};

/// Counts X and Y at p and compares with the eta-product prediction. a_p in the prediction is
/// the eta coefficient; the counted a_p is compared separately. Throws BadPrime, or RangeError
/// when a series does not reach q^p.
TraceRecord verify_prime(const PrimeField& field, const EllipticCurveQ& curve, const QSeries& g3_series,
                         const QSeries& g2B_series, const VerifyOptions& options = {});

}  // namespace kummer7
