#include "kummer7/curves.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "kummer7/errors.hpp"
#include "kummer7/kernels.hpp"

namespace kummer7 {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

BigInt parse_bigint(const std::string& tok, std::string_view context) {
  std::string digits = tok;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad integer '" + tok + "' in '" + std::string(context) + "'");
  }
  BigInt v(digits);
  return tok.front() == '-' ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view text, std::string_view context) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(s, context));
  const BigInt num = parse_bigint(trim(s.substr(0, slash)), context);
  const BigInt den = parse_bigint(trim(s.substr(slash + 1)), context);
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(context) + "'");
  return Rational(num, den);
}

std::uint64_t mod_u(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

EllipticCurveQ::EllipticCurveQ(const std::array<Rational, 3>& roots) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (roots[static_cast<std::size_t>(i)] == roots[static_cast<std::size_t>(j)]) {
        throw ArgumentError("repeated root " + roots[static_cast<std::size_t>(i)].str() + ": curve is singular");
      }
    }
  }
  denominator_ = 1;
  for (const auto& r : roots) denominator_ = boost::multiprecision::lcm(denominator_, boost::multiprecision::denominator(r));
  for (std::size_t i = 0; i < 3; ++i) {
    numerators_[i] = boost::multiprecision::numerator(roots[i]) * (denominator_ / boost::multiprecision::denominator(roots[i]));
  }
}

EllipticCurveQ EllipticCurveQ::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw ParseError("curve needs exactly three roots e1,e2,e3, got '" + std::string(text) + "'");
  }
  return EllipticCurveQ({parse_rational(parts[0], text), parse_rational(parts[1], text), parse_rational(parts[2], text)});
}

std::array<Rational, 3> EllipticCurveQ::roots() const {
  return {Rational(numerators_[0], denominator_), Rational(numerators_[1], denominator_),
          Rational(numerators_[2], denominator_)};
}

std::optional<std::string> EllipticCurveQ::bad_reduction_reason(std::uint64_t p) const {
  if (p == 2) return "characteristic 2";
  if (mod_u(denominator_, p) == 0) return "p divides the root denominator " + denominator_.str();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const BigInt diff = numerators_[i] - numerators_[j];
      if (mod_u(diff, p) == 0) {
        const Rational d(diff, denominator_);
        return "p divides the root difference e" + std::to_string(i + 1) + " - e" + std::to_string(j + 1) + " = " + d.str();
      }
    }
  }
  return std::nullopt;
}

std::array<std::uint64_t, 4> EllipticCurveQ::reduce_mod(const PrimeField& field) const {
  const std::uint64_t p = field.p();
  if (mod_u(denominator_, p) == 0) {
    throw BadPrime(static_cast<long long>(p), "p divides the root denominator " + denominator_.str());
  }
  const std::uint64_t dinv = field.inv(mod_u(denominator_, p));
  std::array<std::uint64_t, 3> e{};
  for (std::size_t i = 0; i < 3; ++i) e[i] = field.mul(mod_u(numerators_[i], p), dinv);
  const std::uint64_t s1 = field.add(field.add(e[0], e[1]), e[2]);
  const std::uint64_t s2 = field.add(field.add(field.mul(e[0], e[1]), field.mul(e[0], e[2])), field.mul(e[1], e[2]));
  const std::uint64_t s3 = field.mul(field.mul(e[0], e[1]), e[2]);
  return {field.sub(0, s3), s2, field.sub(0, s1), 1};
}

std::string EllipticCurveQ::to_string() const {
  const auto r = roots();
  return r[0].str() + "," + r[1].str() + "," + r[2].str();
}

TraceC count_points(const EllipticCurveQ& curve, const PrimeField& field) {
  if (auto reason = curve.bad_reduction_reason(field.p())) {
    throw BadPrime(static_cast<long long>(field.p()), *reason);
  }
  const CubicMod p2 = curve.reduce_mod(field);
  const std::int64_t s2 = field.has_table() ? kernels::omp::curve_character_sum(p2, field)
                                            : kernels::serial::curve_character_sum(p2, field);
  const auto p = static_cast<std::int64_t>(field.p());
  TraceC out;
  out.p = field.p();
  out.count = s2 + p + 1;
  out.c_p = p + 1 - out.count;
  return out;
}

std::int64_t affine_two_torsion_count(const PrimeField& field) {
  return kernels::omp::p1_zero_count(field);
}

}  // namespace kummer7
