#include "kummer7/qseries.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "kummer7/errors.hpp"

namespace kummer7 {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Indices of nonzero entries; eta products are very sparse and this is where the time goes.
std::vector<std::size_t> support(const std::vector<BigInt>& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) idx.push_back(i);
  }
  return idx;
}

std::string exponent_text(std::int64_t e24) {
  if (e24 % 24 == 0) return std::to_string(e24 / 24);
  const std::int64_t g = std::gcd(e24 < 0 ? -e24 : e24, std::int64_t{24});
  return "(" + std::to_string(e24 / g) + "/" + std::to_string(24 / g) + ")";
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

QSeries::QSeries(std::int64_t offset24, std::vector<BigInt> coeffs)
    : offset24_(offset24), coeffs_(std::move(coeffs)) {}

QSeries QSeries::constant(const BigInt& c, std::size_t truncation) {
  std::vector<BigInt> v(truncation);
  if (truncation > 0) v[0] = c;
  return QSeries(0, std::move(v));
}

std::int64_t QSeries::leading_exponent() const {
  if (!classical()) throw FormError("series has fractional exponents (offset " +
                                    std::to_string(offset24_) + "/24)");
  return offset24_ / 24;
}

QSeries QSeries::normalized() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return QSeries(offset24_ + 24 * static_cast<std::int64_t>(k),
                 std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

QSeries QSeries::truncated(std::size_t n) const {
  if (n > coeffs_.size()) {
    throw RangeError("cannot extend a series past its truncation (" + std::to_string(n) + " > " +
                     std::to_string(coeffs_.size()) + ")");
  }
  return QSeries(offset24_, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if ((a.offset24_ - b.offset24_) % 24 != 0) {
    throw FormError("cannot add series whose exponents differ by a fractional amount");
  }
  const std::int64_t off = std::min(a.offset24_, b.offset24_);
  const std::int64_t reach = std::min(a.reach24(), b.reach24());
  const std::int64_t n = std::max<std::int64_t>(0, (reach - off) / 24);
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (const QSeries* s : {&a, &b}) {
    const std::int64_t shift = (s->offset24_ - off) / 24;
    for (std::int64_t i = shift; i < n; ++i) c[static_cast<std::size_t>(i)] += s->coeffs_[static_cast<std::size_t>(i - shift)];
  }
  return QSeries(off, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<BigInt> c(n);
  const auto sa = support(a.coeffs_);
  const auto sb = support(b.coeffs_);
  const bool a_sparser = sa.size() <= sb.size();
  const auto& outer = a_sparser ? sa : sb;
  const auto& outer_c = a_sparser ? a.coeffs_ : b.coeffs_;
  const auto& inner_c = a_sparser ? b.coeffs_ : a.coeffs_;
  for (std::size_t i : outer) {
    if (i >= n) break;
    const BigInt& ci = outer_c[i];
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!inner_c[j].is_zero()) c[i + j] += ci * inner_c[j];
    }
  }
  return QSeries(a.offset24_ + b.offset24_, std::move(c));
}

QSeries operator*(const BigInt& k, const QSeries& a) {
  QSeries r = a;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

QSeries inverse(const QSeries& s) {
  const QSeries u = s.normalized();
  if (u.truncation() == 0) throw DivisionError("cannot invert a series with no known nonzero term");
  const BigInt& lead = u.coeffs()[0];
  if (lead != 1 && lead != -1) {
    throw DivisionError("leading coefficient " + lead.str() + " is not a unit");
  }
  const std::size_t n = u.truncation();
  const auto& a = u.coeffs();
  std::vector<std::size_t> nz;
  for (std::size_t k = 1; k < n; ++k) {
    if (!a[k].is_zero()) nz.push_back(k);
  }
  // lead = +-1, so dividing by it is multiplying by it.
  std::vector<BigInt> r(n);
  r[0] = lead;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t k : nz) {
      if (k > i) break;
      acc += a[k] * r[i - k];
    }
    r[i] = -lead * acc;
  }
  return QSeries(-u.offset24(), std::move(r));
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * inverse(b); }

QSeries pow(const QSeries& s, std::int64_t e) {
  if (e < 0) return pow(inverse(s), -e);
  QSeries result = QSeries::constant(1, s.truncation());
  QSeries base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigInt coefficient(const QSeries& s, std::int64_t n) {
  const std::int64_t lead = s.leading_exponent();
  const std::int64_t idx = n - lead;
  if (idx < 0 || idx >= static_cast<std::int64_t>(s.truncation())) {
    throw RangeError("q^" + std::to_string(n) + " is outside the known window [" +
                     std::to_string(lead) + ", " +
                     std::to_string(lead + static_cast<std::int64_t>(s.truncation())) + ")");
  }
  return s.coeffs()[static_cast<std::size_t>(idx)];
}

std::vector<BigInt> coefficients(const QSeries& s, std::int64_t first, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(coefficient(s, first + static_cast<std::int64_t>(k)));
  return out;
}

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < s.truncation(); ++k) {
    const BigInt& c = s.coeffs()[k];
    if (c.is_zero()) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      os << (c < 0 ? "-" : "");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << mag << "*q^" << exponent_text(s.offset24() + 24 * static_cast<std::int64_t>(k));
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << exponent_text(s.reach24()) << ")";
  return os.str();
}

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ArgumentError("eta quotient needs at least one factor");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].delta <= 0) throw ArgumentError("eta factor delta must be positive");
    if (i > 0 && factors_[i].delta <= factors_[i - 1].delta) {
      throw ArgumentError("eta factor deltas must be strictly increasing");
    }
    twice_weight_ += factors_[i].exponent;
    offset24_ += factors_[i].delta * factors_[i].exponent;
  }
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  std::vector<EtaFactor> out;
  auto parse_int = [&](std::string_view tok) {
    std::int64_t v = 0;
    auto b = tok.data();
    if (!tok.empty() && tok.front() == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad integer '" + std::string(tok) + "' in eta quotient '" + std::string(text) + "'");
    }
    return v;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected delta:exponent, got '" + std::string(item) + "'");
    }
    out.push_back({parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))});
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end(), [](const EtaFactor& a, const EtaFactor& b) { return a.delta < b.delta; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].delta == out[i - 1].delta) {
      throw ParseError("delta " + std::to_string(out[i].delta) + " repeated in eta quotient");
    }
  }
  if (!out.empty() && out.front().delta <= 0) throw ParseError("eta factor delta must be positive");
  return EtaQuotient(std::move(out));
}

std::string EtaQuotient::to_string() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += ',';
    s += std::to_string(f.delta) + ":" + std::to_string(f.exponent);
  }
  return s;
}

std::vector<BigInt> euler_product(std::int64_t delta, std::size_t n_terms) {
  std::vector<BigInt> c(n_terms);
  if (n_terms == 0) return c;
  c[0] = 1;
  const auto n = static_cast<std::int64_t>(n_terms);
  // Generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ... with sign (-1)^k.
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t g1 = delta * (k * (3 * k - 1) / 2);
    const std::int64_t g2 = delta * (k * (3 * k + 1) / 2);
    if (g1 >= n) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(g1)] += sign;
    if (g2 < n) c[static_cast<std::size_t>(g2)] += sign;
  }
  return c;
}

QSeries eta_quotient_expand(const EtaQuotient& quotient, std::size_t n_terms) {
  if (n_terms == 0) throw ArgumentError("n_terms must be at least 1");
  QSeries acc = QSeries::constant(1, n_terms);
  for (const auto& f : quotient.factors()) {
    const QSeries base(0, euler_product(f.delta, n_terms));
    acc = acc * pow(base, f.exponent);
  }
  return QSeries(quotient.offset24(), acc.coeffs());
}

QSeries eisenstein_e4(std::size_t n_terms) {
  if (n_terms == 0) throw ArgumentError("n_terms must be at least 1");
  std::vector<BigInt> sigma3(n_terms);
  for (std::size_t d = 1; d < n_terms; ++d) {
    const BigInt d3 = BigInt(d) * d * d;
    for (std::size_t m = d; m < n_terms; m += d) sigma3[m] += d3;
  }
  sigma3[0] = 1;
  for (std::size_t m = 1; m < n_terms; ++m) sigma3[m] *= 240;
  return QSeries(0, std::move(sigma3));
}

QSeries j_expansion(std::size_t n_terms) {
  if (n_terms == 0) throw ArgumentError("n_terms must be at least 1");
  const QSeries e4 = eisenstein_e4(n_terms);
  const QSeries delta = eta_quotient_expand(EtaQuotient({{1, 24}}), n_terms);
  return pow(e4, 3) / delta;
}

QSeries evaluate_polynomial(std::span<const BigInt> coeffs, const QSeries& x) {
  const std::int64_t lead = x.leading_exponent();
  if (coeffs.empty()) return QSeries::constant(0, x.truncation());
  // Constants are exact; give them more reach than any power of x can have.
  const std::size_t deg = coeffs.size() - 1;
  const std::size_t const_trunc =
      x.truncation() + static_cast<std::size_t>(std::abs(lead)) * (deg + 1) + deg + 1;
  QSeries acc = QSeries::constant(coeffs[deg], const_trunc);
  for (std::size_t k = deg; k-- > 0;) {
    acc = acc * x + QSeries::constant(coeffs[k], const_trunc);
  }
  return acc;
}

bool verify_hauptmodul_identity(std::span<const BigInt> numerator,
                                std::span<const BigInt> denominator, const QSeries& input,
                                const QSeries& target, std::size_t n_terms) {
  if (n_terms == 0) throw ArgumentError("n_terms must be at least 1");
  if (n_terms > target.truncation()) {
    throw RangeError("target known through " + std::to_string(target.truncation()) +
                     " terms, " + std::to_string(n_terms) + " requested");
  }
  const QSeries num = evaluate_polynomial(numerator, input);
  const QSeries den = evaluate_polynomial(denominator, input);
  const QSeries ratio = (num / den).normalized();

  const std::int64_t t_lead = target.leading_exponent();
  const std::int64_t last = t_lead + static_cast<std::int64_t>(n_terms) - 1;
  if (ratio.truncation() == 0 || floor_div(ratio.reach24(), 24) <= last) {
    throw RangeError("input series too short to check the identity through q^" + std::to_string(last));
  }
  const std::int64_t r_lead = ratio.leading_exponent();
  for (std::int64_t e = std::min(r_lead, t_lead); e <= last; ++e) {
    const BigInt lhs = e < r_lead ? BigInt(0) : coefficient(ratio, e);
    const BigInt rhs = e < t_lead ? BigInt(0) : coefficient(target, e);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace forms {

EtaQuotient g3() { return EtaQuotient({{1, 3}, {7, 3}}); }
EtaQuotient g2_B() { return EtaQuotient({{1, 1}, {2, 1}, {7, 1}, {14, 1}}); }
EtaQuotient hauptmodul_u() { return EtaQuotient({{1, -24}, {2, 24}}); }
EtaQuotient hauptmodul_r() { return EtaQuotient({{1, -4}, {7, 4}}); }

std::pair<std::vector<BigInt>, std::vector<BigInt>> phi4() {
  // (256u + 1)^3 / u
  const std::vector<BigInt> lin{1, 256};
  return {poly_mul(poly_mul(lin, lin), lin), {0, 1}};
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> phi3() {
  // (7^4 r^2 + 7^2*5 r + 1)^3 (49 r^2 + 13 r + 1) / r
  const std::vector<BigInt> quad{1, 49 * 5, 7 * 7 * 7 * 7};
  const std::vector<BigInt> other{1, 13, 49};
  return {poly_mul(poly_mul(poly_mul(quad, quad), quad), other), {0, 1}};
}

}  // namespace forms

}  // namespace kummer7
