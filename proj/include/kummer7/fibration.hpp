#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kummer7/bigint.hpp"
#include "kummer7/finitefield.hpp"
#include "kummer7/polynomial.hpp"

namespace kummer7 {

/// Picard number of Y = S(Gamma_1(7)): 2 + 3*(7-1), Mordell-Weil rank 0.
inline constexpr int kPicardNumberY = 20;

// ------------------------------------------------------------ fiber configurations

struct AtInfinity {
  friend bool operator==(const AtInfinity&, const AtInfinity&) = default;
};
/// Fiber given only by its type, for hand-built configurations.
struct Unlabeled {
  friend bool operator==(const Unlabeled&, const Unlabeled&) = default;
};
/// A rational base point, infinity, a polynomial whose roots are the base points, or none.
using FiberLocation = std::variant<Rational, AtInfinity, UPoly, Unlabeled>;

/// `multiplicity` fibers of type I_n at `location`; for a polynomial tag this is its degree.
struct Fiber {
  FiberLocation location;
  int n = 1;
  int multiplicity = 1;
};

class FiberConfiguration {
 public:
  FiberConfiguration() = default;
  explicit FiberConfiguration(std::vector<Fiber> fibers) : fibers_(std::move(fibers)) {}
  /// Unlabeled fibers of the given I_n types, e.g. {1, 1, 1, 7, 7, 7}.
  static FiberConfiguration from_types(const std::vector<int>& types);

  const std::vector<Fiber>& fibers() const noexcept { return fibers_; }
  /// Number of geometric fibers.
  int fiber_count() const;
  /// Sum of n over geometric fibers (the Euler number of the surface).
  int index_sum() const;
  int count_of_type(int n) const;
  /// Number of geometric fibers I_n with n > 1 even.
  int even_fiber_count() const;

  std::string to_string() const;

 private:
  std::vector<Fiber> fibers_;
};

std::string location_text(const FiberLocation& loc);

// ------------------------------------------------------------ built-in models of Y

/// y^2 + (1+t-t^2) x y + (t^2-t^3) y = x^3 + (t^2-t^3) x^2, homogenized in (x, y, z), as F = 0.
MPoly tate_model();
/// 4y^2 = 4x^3 + (t^4-6t^3+3t^2+2t+1) x^2 + 2t^2(t^3-2t^2+1) x + t^4(t-1)^2, as F = 0.
MPoly weierstrass_model();
/// p1(x, t) = x^3 + (t^4-6t^3+3t^2+2t+1)x^2 + 8t^2(t^3-2t^2+1)x + 16t^4(t-1)^2.
BivariatePolynomialZ p1_poly();
/// t(t-1)x(x-y)(y+z) + (t-1)(x-y-z)yz + t(x-y)xz, the model after the change of variables.
MPoly resolved_model();

/// The j-invariant of the family, in lowest terms.
RationalFunctionQ j_invariant_of_fibration();

/// Discriminant of p1 with respect to x, as a polynomial in t.
UPoly p1_discriminant();

/// Reads I_n fibers off the poles of j (semi-stable case). When expected_index_sum is given and
/// the pole orders do not add up to it, throws UnsupportedFibration. Throws NoSingularFibers
/// when j has no poles at all.
FiberConfiguration classify_fibers(const RationalFunctionQ& j,
                                   std::optional<int> expected_index_sum = std::nullopt);

// ------------------------------------------------------------ symbolic checks

/// Substitutes x = x t^2, y = y t^2 (t-1), z = x/(t-1) + y + z into the homogeneous cubic `tate`
/// and checks (t-1)^3 * F(...) == t^4 (t-1)^4 * resolved_model() in Z[x,y,z,t].
bool verify_model_identity(const MPoly& tate = tate_model());

/// Completing the square y -> y - (1+t-t^2)x/2 - (t^2-t^3)/2 in the affine Tate equation gives
/// `weierstrass` up to the factor 4.
bool verify_weierstrass_transform(const MPoly& tate = tate_model(),
                                  const MPoly& weierstrass = weierstrass_model());

/// x -> x/4, y -> y/8 in the Weierstrass model gives y^2 = p1(x, t) after clearing 256.
bool verify_p1_scaling(const MPoly& weierstrass = weierstrass_model());

/// Base point of a fiber of the resolved model: a finite t or t = infinity (chart s = 1/t).
struct FiberPoint {
  std::string label;
  std::optional<std::int64_t> t;  // nullopt means t = infinity
  std::array<std::int64_t, 3> xyz{};
};

/// P1..P3 over t=0, Q1..Q3 over t=1, R1, R2 over t=infinity.
std::vector<FiberPoint> listed_singular_points();

/// F and its three projective partials in (x, y, z) at the point, on the fiber.
std::array<BigInt, 4> fiber_gradient(const MPoly& surface, const FiberPoint& pt);
bool is_singular_point(const MPoly& surface, const FiberPoint& pt);

/// True iff every listed point is a singular point of resolved_model().
bool singular_points_check();

// ------------------------------------------------------------ point counting

/// Why Y has bad reduction at p (p = 2, 3 or 7), or nullopt.
std::optional<std::string> surface_bad_reason(std::uint64_t p);

struct SurfaceCount {
  std::uint64_t p = 0;
  std::int64_t character_sum = 0;  // S1 = sum_{x,t} chi(p1(x, t))
  std::int64_t count = 0;          // #Y(F_p) = S1 + p^2 + rho p
  std::int64_t a_p = 0;            // count - p^2 - rho p - 1
};

/// #Y(F_p) from the Legendre sum over the affine model plus rho*p for the fiber components and
/// points at infinity. Builds the Legendre table when the field lacks one. Throws BadPrime.
SurfaceCount count_Y(const PrimeField& field, int rho = kPicardNumberY);

}  // namespace kummer7
