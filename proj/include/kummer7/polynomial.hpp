#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer7/bigint.hpp"

namespace kummer7 {

/// Univariate polynomial over Z, coefficients ascending, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<std::int64_t> coeffs);
  explicit UPoly(std::vector<BigInt> coeffs);

  static UPoly monomial(const BigInt& c, std::size_t degree);
  /// v*t - u, the primitive linear factor vanishing at u/v.
  static UPoly linear_root(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& lead() const;

  BigInt operator()(const BigInt& t) const;
  Rational operator()(const Rational& t) const;

  UPoly derivative() const;
  BigInt content() const;
  /// Divided by its content, leading coefficient made positive.
  UPoly primitive_part() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const BigInt& c, const UPoly& a);
  UPoly operator-() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Multiplicity of t as a factor.
  std::size_t valuation() const;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

UPoly pow(const UPoly& a, unsigned e);

/// a / b when the quotient is in Z[t]; throws ArgumentError otherwise. Exact whenever b is
/// primitive and divides a over Q.
UPoly exact_quotient(const UPoly& a, const UPoly& b);

/// Remainder of a / b over Q, scaled to be primitive (zero iff b | a over Q).
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);

bool divides(const UPoly& b, const UPoly& a);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's square-free decomposition: primitive pairwise-coprime factors f_i with
/// a = c * prod f_i^i, listed with their multiplicity i. Constant factors are dropped.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);

/// Distinct rational roots with multiplicity, ascending. Throws ResourceError if the
/// divisor search would be unreasonably large.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& a);

/// Discriminant of a cubic a3 x^3 + a2 x^2 + a1 x + a0 whose coefficients are polynomials.
UPoly cubic_discriminant(const UPoly& a3, const UPoly& a2, const UPoly& a1, const UPoly& a0);

/// num/den over Q in lowest terms with positive leading denominator coefficient.
class RationalFunctionQ {
 public:
  /// Cancels the common factor. Throws ArgumentError on a zero denominator.
  RationalFunctionQ(UPoly num, UPoly den);

  const UPoly& numerator() const noexcept { return num_; }
  const UPoly& denominator() const noexcept { return den_; }

  /// nullopt at a pole.
  std::optional<Rational> operator()(const Rational& t) const;

  /// Order of the pole at t = infinity (0 if none).
  int pole_order_at_infinity() const noexcept;

  std::string to_string() const;

 private:
  UPoly num_;
  UPoly den_;
};

/// Sparse polynomial over Z in x, y, z, t. Bivariate and trivariate models use a subset.
class MPoly {
 public:
  enum Var : std::size_t { X = 0, Y = 1, Z = 2, T = 3 };
  static constexpr std::size_t kVars = 4;
  using Exponents = std::array<unsigned, kVars>;

  MPoly() = default;
  MPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  MPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static MPoly var(Var v);
  static MPoly monomial(const BigInt& c, const Exponents& e);
  /// Embeds a univariate polynomial in variable v.
  static MPoly from_upoly(const UPoly& p, Var v);

  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(const Exponents& e) const;

  unsigned degree_in(Var v) const;
  /// Total degree in the given variables for every term, or nullopt if mixed.
  std::optional<unsigned> homogeneous_degree(std::initializer_list<Var> vars) const;

  /// Coefficient of v^k as a polynomial in the other variables.
  MPoly coefficient_in(Var v, unsigned k) const;
  /// Requires that only v occurs.
  UPoly to_upoly(Var v) const;

  MPoly derivative(Var v) const;
  /// Replaces every variable by the given polynomial (all four).
  MPoly substitute(const std::array<MPoly, kVars>& images) const;
  /// Replaces one variable.
  MPoly substitute(Var v, const MPoly& image) const;
  /// d^deg_v(f) * f(v -> v/d): the integral polynomial from rescaling v.
  MPoly scaled_substitution(Var v, const BigInt& d) const;
  /// t^deg_t(f) * f(t -> 1/t), the chart at t = infinity in the same variable.
  MPoly reversed_in(Var v) const;
  BigInt evaluate(const std::array<BigInt, kVars>& point) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  std::map<Exponents, BigInt> terms_;
};

MPoly pow(const MPoly& a, unsigned e);

/// Polynomials in (x, t) only.
using BivariatePolynomialZ = MPoly;

}  // namespace kummer7
