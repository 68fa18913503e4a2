#include "kummer7/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kummer7/errors.hpp"

namespace kummer7 {

namespace {

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

std::vector<BigInt> positive_divisors(const BigInt& n) {
  const BigInt limit("1000000000000");
  if (n > limit) throw ResourceError("divisor search for rational roots too large: " + n.str());
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void append_term(std::ostringstream& os, const BigInt& c, const std::string& mono, bool& first) {
  if (c.is_zero()) return;
  const BigInt mag = babs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << mono;
  } else {
    os << mag << "*" << mono;
  }
  first = false;
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::initializer_list<std::int64_t> coeffs) {
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UPoly::UPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rational& root) {
  return UPoly(std::vector<BigInt>{-boost::multiprecision::numerator(root), boost::multiprecision::denominator(root)});
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& UPoly::lead() const {
  if (coeffs_.empty()) throw ArgumentError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigInt UPoly::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * k;
  return UPoly(std::move(d));
}

BigInt UPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, babs(c));
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (lead() < 0) g = -g;
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) c /= g;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const BigInt& c, const UPoly& a) {
  std::vector<BigInt> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

std::size_t UPoly::valuation() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return k;
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    std::string mono;
    if (k == 1) mono = std::string(1, var);
    if (k > 1) mono = std::string(1, var) + "^" + std::to_string(k);
    append_term(os, coeffs_[k], mono, first);
  }
  return os.str();
}

UPoly pow(const UPoly& a, unsigned e) {
  UPoly r{1};
  UPoly b = a;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw ArgumentError("division by the zero polynomial");
  UPoly r = a;
  std::vector<BigInt> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (r.lead() % b.lead() != 0) {
      throw ArgumentError("quotient (" + a.to_string() + ") / (" + b.to_string() + ") is not integral");
    }
    const BigInt c = r.lead() / b.lead();
    const auto k = static_cast<std::size_t>(r.degree() - b.degree());
    q[k] = c;
    r = r - UPoly::monomial(c, k) * b;
  }
  if (!r.is_zero()) throw ArgumentError("(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
  return UPoly(std::move(q));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw ArgumentError("division by the zero polynomial");
  UPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto k = static_cast<std::size_t>(r.degree() - b.degree());
    r = b.lead() * r - UPoly::monomial(r.lead(), k) * b;
  }
  return r.primitive_part();
}

bool divides(const UPoly& b, const UPoly& a) { return pseudo_remainder(a, b).is_zero(); }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly u = a.primitive_part();
  UPoly v = b.primitive_part();
  while (!v.is_zero()) {
    UPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  if (u.degree() == 0) return UPoly{1};
  return u;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a) {
  std::vector<std::pair<UPoly, int>> out;
  const UPoly f = a.primitive_part();
  if (f.degree() < 1) return out;
  const UPoly fp = f.derivative();
  const UPoly c = gcd(f, fp);
  UPoly w = exact_quotient(f, c);
  UPoly y = exact_quotient(fp, c);
  UPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    const UPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& a) {
  std::vector<std::pair<Rational, int>> out;
  UPoly f = a.primitive_part();
  if (f.degree() < 1) return out;
  if (const std::size_t k = f.valuation(); k > 0) {
    out.emplace_back(Rational(0), static_cast<int>(k));
    f = UPoly(std::vector<BigInt>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
  }
  if (f.degree() >= 1) {
    const auto nums = positive_divisors(babs(f.coeff(0)));
    const auto dens = positive_divisors(babs(f.lead()));
    std::set<Rational> candidates;
    for (const auto& u : nums) {
      for (const auto& v : dens) {
        candidates.insert(Rational(u, v));
        candidates.insert(Rational(-u, v));
      }
    }
    for (const auto& r : candidates) {
      int mult = 0;
      while (f.degree() >= 1 && f(r) == 0) {
        f = exact_quotient(f, UPoly::linear_root(r));
        ++mult;
      }
      if (mult > 0) out.emplace_back(r, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

UPoly cubic_discriminant(const UPoly& a3, const UPoly& a2, const UPoly& a1, const UPoly& a0) {
  const UPoly& a = a3;
  const UPoly& b = a2;
  const UPoly& c = a1;
  const UPoly& d = a0;
  return b * b * c * c - BigInt(4) * a * c * c * c - BigInt(4) * b * b * b * d -
         BigInt(27) * a * a * d * d + BigInt(18) * a * b * c * d;
}

// ---------------------------------------------------------------- RationalFunctionQ

RationalFunctionQ::RationalFunctionQ(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArgumentError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly{1};
    return;
  }
  const UPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  BigInt k = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_.lead() < 0) k = -k;
  num_ = exact_quotient(num_, UPoly(std::vector<BigInt>{k}));
  den_ = exact_quotient(den_, UPoly(std::vector<BigInt>{k}));
}

std::optional<Rational> RationalFunctionQ::operator()(const Rational& t) const {
  const Rational d = den_(t);
  if (d == 0) return std::nullopt;
  return num_(t) / d;
}

int RationalFunctionQ::pole_order_at_infinity() const noexcept {
  return std::max(0, num_.degree() - den_.degree());
}

std::string RationalFunctionQ::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(std::int64_t c) : MPoly(BigInt(c)) {}

MPoly::MPoly(const BigInt& c) {
  if (!c.is_zero()) terms_[Exponents{}] = c;
}

MPoly MPoly::var(Var v) {
  Exponents e{};
  e[v] = 1;
  return monomial(1, e);
}

MPoly MPoly::monomial(const BigInt& c, const Exponents& e) {
  MPoly m;
  m.add_term(e, c);
  return m;
}

MPoly MPoly::from_upoly(const UPoly& p, Var v) {
  MPoly m;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Exponents e{};
    e[v] = static_cast<unsigned>(k);
    m.add_term(e, p.coeffs()[k]);
  }
  return m;
}

void MPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BigInt MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned MPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

std::optional<unsigned> MPoly::homogeneous_degree(std::initializer_list<Var> vars) const {
  std::optional<unsigned> deg;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (Var v : vars) d += e[v];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

MPoly MPoly::coefficient_in(Var v, unsigned k) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponents f = e;
    f[v] = 0;
    out.add_term(f, c);
  }
  return out;
}

UPoly MPoly::to_upoly(Var v) const {
  std::vector<BigInt> coeffs(degree_in(v) + 1);
  for (const auto& [e, c] : terms_) {
    for (std::size_t w = 0; w < kVars; ++w) {
      if (w != v && e[w] != 0) throw ArgumentError("polynomial is not univariate in the requested variable");
    }
    coeffs[e[v]] += c;
  }
  return UPoly(std::move(coeffs));
}

MPoly MPoly::derivative(Var v) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents f = e;
    f[v] -= 1;
    out.add_term(f, c * e[v]);
  }
  return out;
}

MPoly MPoly::substitute(const std::array<MPoly, kVars>& images) const {
  std::array<std::vector<MPoly>, kVars> powers;
  for (std::size_t v = 0; v < kVars; ++v) {
    powers[v].push_back(MPoly(1));
    const unsigned d = degree_in(static_cast<Var>(v));
    for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * images[v]);
  }
  MPoly out;
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    for (std::size_t v = 0; v < kVars; ++v) {
      if (e[v] > 0) term = term * powers[v][e[v]];
    }
    out = out + term;
  }
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& image) const {
  std::array<MPoly, kVars> images{var(X), var(Y), var(Z), var(T)};
  images[v] = image;
  return substitute(images);
}

MPoly MPoly::scaled_substitution(Var v, const BigInt& d) const {
  const unsigned deg = degree_in(v);
  MPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * boost::multiprecision::pow(d, deg - e[v]));
  return out;
}

MPoly MPoly::reversed_in(Var v) const {
  const unsigned deg = degree_in(v);
  MPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[v] = deg - e[v];
    out.add_term(f, c);
  }
  return out;
}

BigInt MPoly::evaluate(const std::array<BigInt, kVars>& point) const {
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t v = 0; v < kVars; ++v) {
      if (e[v] > 0) term *= boost::multiprecision::pow(point[v], e[v]);
    }
    acc += term;
  }
  return acc;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e{};
      for (std::size_t v = 0; v < MPoly::kVars; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly pow(const MPoly& a, unsigned e) {
  MPoly r(1);
  MPoly b = a;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr std::array<char, kVars> names{'x', 'y', 'z', 't'};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t v = 0; v < kVars; ++v) {
      if (it->first[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (it->first[v] > 1) mono += "^" + std::to_string(it->first[v]);
    }
    append_term(os, it->second, mono, first);
  }
  return os.str();
}

}  // namespace kummer7
