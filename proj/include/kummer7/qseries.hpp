#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kummer7/bigint.hpp"

namespace kummer7 {

/// Truncated power series q^(offset24/24) * (c_0 + c_1 q + ... + c_{N-1} q^{N-1}) with exact
/// integer coefficients. N is the truncation: nothing beyond it is known.
///
/// Exponents are carried in 24ths so that single eta factors q^(delta/24) stay exact. A series
/// is classical when offset24 is a multiple of 24; only classical series support
/// integer-exponent coefficient lookup.
class QSeries {
 public:
  QSeries() = default;
  QSeries(std::int64_t offset24, std::vector<BigInt> coeffs);

  /// The constant c known through `truncation` terms.
  static QSeries constant(const BigInt& c, std::size_t truncation);

  std::int64_t offset24() const noexcept { return offset24_; }
  std::size_t truncation() const noexcept { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool classical() const noexcept { return offset24_ % 24 == 0; }

  /// Leading exponent; requires classical().
  std::int64_t leading_exponent() const;
  /// One past the last known exponent, in 24ths.
  std::int64_t reach24() const noexcept {
    return offset24_ + 24 * static_cast<std::int64_t>(coeffs_.size());
  }

  /// Drops leading zero coefficients, moving the offset up accordingly.
  QSeries normalized() const;

  /// Keeps the first n coefficients (n <= truncation).
  QSeries truncated(std::size_t n) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const BigInt& c, const QSeries& a);
  /// Throws DivisionError unless the divisor's first nonzero coefficient is +-1.
  friend QSeries operator/(const QSeries& a, const QSeries& b);

  /// Coefficientwise equality, including offset and truncation.
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::int64_t offset24_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Inverse of a unit series (leading coefficient +-1 after normalization).
QSeries inverse(const QSeries& s);
/// s^e for any integer e; negative exponents go through inverse().
QSeries pow(const QSeries& s, std::int64_t e);

/// Coefficient of q^n. Requires a classical series and n inside the known window.
BigInt coefficient(const QSeries& s, std::int64_t n);

/// Coefficients of q^first .. q^(first+count-1).
std::vector<BigInt> coefficients(const QSeries& s, std::int64_t first, std::size_t count);

/// Sparse "c*q^n" rendering in ascending n, closed by the O(q^k) truncation marker.
std::string to_string(const QSeries& s);

struct EtaFactor {
  std::int64_t delta = 1;
  std::int64_t exponent = 0;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// prod_delta eta(delta*tau)^exponent with strictly increasing deltas.
class EtaQuotient {
 public:
  explicit EtaQuotient(std::vector<EtaFactor> factors);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  /// Sum of exponents; the weight is half of this.
  std::int64_t twice_weight() const noexcept { return twice_weight_; }
  std::int64_t offset24() const noexcept { return offset24_; }

  /// Parses "delta:exponent[,delta:exponent]*", e.g. "1:3,7:3". Factors may come in any order.
  static EtaQuotient parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<EtaFactor> factors_;
  std::int64_t twice_weight_ = 0;
  std::int64_t offset24_ = 0;
};

/// prod_{n>=1} (1 - q^(n*delta)) through q^(n_terms-1), from Euler's pentagonal number theorem.
std::vector<BigInt> euler_product(std::int64_t delta, std::size_t n_terms);

/// Expansion of the quotient with n_terms coefficients from its leading q-power on.
QSeries eta_quotient_expand(const EtaQuotient& quotient, std::size_t n_terms);

/// E_4 = 1 + 240 sum sigma_3(n) q^n.
QSeries eisenstein_e4(std::size_t n_terms);

/// The modular invariant j = E_4^3 / eta^24 = q^-1 + 744 + 196884 q + ...
QSeries j_expansion(std::size_t n_terms);

/// Evaluates the integer polynomial sum coeffs[k] x^k at a classical series x.
QSeries evaluate_polynomial(std::span<const BigInt> coeffs, const QSeries& x);

/// True iff numerator(input) / denominator(input) matches target on the first n_terms
/// exponents of target. Throws DivisionError when the denominator series is not a unit and
/// RangeError when either side is too short to decide.
bool verify_hauptmodul_identity(std::span<const BigInt> numerator,
                                std::span<const BigInt> denominator, const QSeries& input,
                                const QSeries& target, std::size_t n_terms);

namespace forms {

/// (eta(tau) eta(7 tau))^3, weight 3 level 7.
EtaQuotient g3();
/// eta(tau) eta(2 tau) eta(7 tau) eta(14 tau), weight 2 level 14.
EtaQuotient g2_B();
/// u = (eta(2 tau)/eta(tau))^24, hauptmodul for Gamma_0(2).
EtaQuotient hauptmodul_u();
/// r = (eta(7 tau)/eta(tau))^4, hauptmodul for Gamma_0(7).
EtaQuotient hauptmodul_r();

/// Rational maps to X_0(1) as (numerator, denominator) coefficient lists, ascending degree.
std::pair<std::vector<BigInt>, std::vector<BigInt>> phi4();
std::pair<std::vector<BigInt>, std::vector<BigInt>> phi3();

}  // namespace forms

}  // namespace kummer7
