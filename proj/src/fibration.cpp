#include "kummer7/fibration.hpp"

#include <sstream>

#include "kummer7/errors.hpp"
#include "kummer7/kernels.hpp"

namespace kummer7 {

namespace {

const MPoly x = MPoly::var(MPoly::X);
const MPoly y = MPoly::var(MPoly::Y);
const MPoly z = MPoly::var(MPoly::Z);
const MPoly t = MPoly::var(MPoly::T);


}  // namespace

// ------------------------------------------------------------ fiber configurations

FiberConfiguration FiberConfiguration::from_types(const std::vector<int>& types) {
  std::vector<Fiber> fibers;
  for (int n : types) {
    if (n < 1) throw ArgumentError("fiber type I_n needs n >= 1");
    fibers.push_back({Unlabeled{}, n, 1});
  }
  return FiberConfiguration(std::move(fibers));
}

int FiberConfiguration::fiber_count() const {
  int c = 0;
  for (const auto& f : fibers_) c += f.multiplicity;
  return c;
}

int FiberConfiguration::index_sum() const {
  int s = 0;
  for (const auto& f : fibers_) s += f.n * f.multiplicity;
  return s;
}

int FiberConfiguration::count_of_type(int n) const {
  int c = 0;
  for (const auto& f : fibers_) {
    if (f.n == n) c += f.multiplicity;
  }
  return c;
}

int FiberConfiguration::even_fiber_count() const {
  int c = 0;
  for (const auto& f : fibers_) {
    if (f.n > 1 && f.n % 2 == 0) c += f.multiplicity;
  }
  return c;
}

std::string location_text(const FiberLocation& loc) {
  struct Visitor {
    std::string operator()(const Rational& r) const { return "t=" + r.str(); }
    std::string operator()(const AtInfinity&) const { return "t=infinity"; }
    std::string operator()(const UPoly& p) const { return "roots of " + p.to_string(); }
    std::string operator()(const Unlabeled&) const { return "unspecified"; }
  };
  return std::visit(Visitor{}, loc);
}

std::string FiberConfiguration::to_string() const {
  std::ostringstream os;
  for (const auto& f : fibers_) {
    os << f.multiplicity << "x I" << f.n << " at " << location_text(f.location) << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------ built-in models

MPoly tate_model() {
  const MPoly a1 = 1 + t - t * t;
  const MPoly a3 = t * t - pow(t, 3);
  const MPoly a2 = t * t - pow(t, 3);
  return y * y * z + a1 * x * y * z + a3 * y * z * z - pow(x, 3) - a2 * x * x * z;
}

MPoly weierstrass_model() {
  const MPoly c2 = pow(t, 4) - 6 * pow(t, 3) + 3 * t * t + 2 * t + 1;
  const MPoly c1 = 2 * t * t * (pow(t, 3) - 2 * t * t + 1);
  const MPoly c0 = pow(t, 4) * pow(t - 1, 2);
  return 4 * y * y - (4 * pow(x, 3) + c2 * x * x + c1 * x + c0);
}

BivariatePolynomialZ p1_poly() {
  const MPoly c2 = pow(t, 4) - 6 * pow(t, 3) + 3 * t * t + 2 * t + 1;
  const MPoly c1 = 8 * t * t * (pow(t, 3) - 2 * t * t + 1);
  const MPoly c0 = 16 * pow(t, 4) * pow(t - 1, 2);
  return pow(x, 3) + c2 * x * x + c1 * x + c0;
}

MPoly resolved_model() {
  return t * (t - 1) * x * (x - y) * (y + z) + (t - 1) * (x - y - z) * y * z + t * (x - y) * x * z;
}

RationalFunctionQ j_invariant_of_fibration() {
  const UPoly a{1, -1, 1};                     // t^2 - t + 1
  const UPoly b{1, 5, -10, -15, 30, -11, 1};   // t^6 - 11t^5 + 30t^4 - 15t^3 - 10t^2 + 5t + 1
  const UPoly tt{0, 1};
  const UPoly tm1{-1, 1};
  const UPoly c{1, 5, -8, 1};                  // t^3 - 8t^2 + 5t + 1
  return RationalFunctionQ(pow(a, 3) * pow(b, 3), pow(tt, 7) * pow(tm1, 7) * c);
}

UPoly p1_discriminant() {
  const MPoly f = p1_poly();
  return cubic_discriminant(f.coefficient_in(MPoly::X, 3).to_upoly(MPoly::T),
                            f.coefficient_in(MPoly::X, 2).to_upoly(MPoly::T),
                            f.coefficient_in(MPoly::X, 1).to_upoly(MPoly::T),
                            f.coefficient_in(MPoly::X, 0).to_upoly(MPoly::T));
}

FiberConfiguration classify_fibers(const RationalFunctionQ& j, std::optional<int> expected_index_sum) {
  const int at_infinity = j.pole_order_at_infinity();
  if (j.denominator().degree() <= 0 && at_infinity == 0) {
    throw NoSingularFibers("j = " + j.to_string() + " has no poles");
  }
  std::vector<Fiber> rational_fibers;
  std::vector<Fiber> tagged_fibers;
  for (const auto& [factor, n] : squarefree_decomposition(j.denominator())) {
    UPoly rest = factor;
    for (const auto& [root, mult] : rational_roots(factor)) {
      rational_fibers.push_back({root, n, 1});
      rest = exact_quotient(rest, UPoly::linear_root(root));
    }
    if (rest.degree() > 0) tagged_fibers.push_back({rest.primitive_part(), n, rest.degree()});
  }
  std::sort(rational_fibers.begin(), rational_fibers.end(), [](const Fiber& a, const Fiber& b) {
    return std::get<Rational>(a.location) < std::get<Rational>(b.location);
  });
  std::vector<Fiber> fibers = std::move(rational_fibers);
  if (at_infinity > 0) fibers.push_back({AtInfinity{}, at_infinity, 1});
  fibers.insert(fibers.end(), tagged_fibers.begin(), tagged_fibers.end());

  FiberConfiguration config(std::move(fibers));
  if (expected_index_sum && config.index_sum() != *expected_index_sum) {
    throw UnsupportedFibration("pole orders of j add up to " + std::to_string(config.index_sum()) +
                               ", expected " + std::to_string(*expected_index_sum) +
                               "; the fibration is not semi-stable as given");
  }
  return config;
}

// ------------------------------------------------------------ symbolic checks

bool verify_model_identity(const MPoly& tate) {
  if (tate.homogeneous_degree({MPoly::X, MPoly::Y, MPoly::Z}) != 3U) return false;
  // F homogeneous of degree 3 in (x,y,z), so (t-1)^3 F(a, b, c) = F((t-1)a, (t-1)b, (t-1)c),
  // which keeps z' = x'/(t-1) + y' + z' integral.
  const MPoly tm1 = t - 1;
  const MPoly lhs = tate.substitute({x * t * t * tm1, y * t * t * tm1 * tm1, x + tm1 * (y + z), t});
  const MPoly rhs = pow(t, 4) * pow(tm1, 4) * resolved_model();
  return lhs == rhs;
}

bool verify_weierstrass_transform(const MPoly& tate, const MPoly& weierstrass) {
  const MPoly affine = tate.substitute(MPoly::Z, MPoly(1));
  const MPoly a1 = affine.coefficient_in(MPoly::Y, 1).coefficient_in(MPoly::X, 1);
  const MPoly a3 = affine.coefficient_in(MPoly::Y, 1).coefficient_in(MPoly::X, 0);
  if (affine.degree_in(MPoly::Y) != 2 || weierstrass.degree_in(MPoly::Y) != 2) return false;
  // With W = 2*y_old and Y = 2*y_new the shift reads W = Y - a1 x - a3.
  const MPoly shifted = affine.scaled_substitution(MPoly::Y, 2).substitute(MPoly::Y, y - a1 * x - a3);
  return 4 * shifted == weierstrass.scaled_substitution(MPoly::Y, 2);
}

bool verify_p1_scaling(const MPoly& weierstrass) {
  const MPoly scaled = weierstrass.scaled_substitution(MPoly::X, 4).scaled_substitution(MPoly::Y, 8);
  return scaled == 256 * (y * y - p1_poly());
}

std::vector<FiberPoint> listed_singular_points() {
  return {
      {"P1", 0, {1, 0, 1}},       {"P2", 0, {1, 1, 0}}, {"P3", 0, {1, 0, 0}},
      {"Q1", 1, {0, 0, 1}},       {"Q2", 1, {0, 1, 0}}, {"Q3", 1, {1, 1, 0}},
      {"R1", std::nullopt, {0, 0, 1}}, {"R2", std::nullopt, {0, 1, -1}},
  };
}

std::array<BigInt, 4> fiber_gradient(const MPoly& surface, const FiberPoint& pt) {
  // At infinity work in s = 1/t: s^deg_t(F) F(1/s), then s = 0.
  const MPoly chart = pt.t ? surface : surface.reversed_in(MPoly::T);
  const BigInt tval = pt.t ? BigInt(*pt.t) : BigInt(0);
  const std::array<BigInt, 4> at{pt.xyz[0], pt.xyz[1], pt.xyz[2], tval};
  return {chart.evaluate(at), chart.derivative(MPoly::X).evaluate(at), chart.derivative(MPoly::Y).evaluate(at),
          chart.derivative(MPoly::Z).evaluate(at)};
}

bool is_singular_point(const MPoly& surface, const FiberPoint& pt) {
  for (const auto& v : fiber_gradient(surface, pt)) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool singular_points_check() {
  const MPoly f = resolved_model();
  for (const auto& pt : listed_singular_points()) {
    if (!is_singular_point(f, pt)) return false;
  }
  return true;
}

// ------------------------------------------------------------ point counting

std::optional<std::string> surface_bad_reason(std::uint64_t p) {
  if (p == 2 || p == 3) return "characteristic " + std::to_string(p) + " excluded";
  if (p == 7) return "7 divides the level of Gamma_1(7)";
  return std::nullopt;
}

SurfaceCount count_Y(const PrimeField& field, int rho) {
  if (auto reason = surface_bad_reason(field.p())) {
    throw BadPrime(static_cast<long long>(field.p()), *reason);
  }
  const PrimeField f = field.has_table() ? field : build_legendre_table(field);
  const auto p = static_cast<std::int64_t>(f.p());
  SurfaceCount out;
  out.p = f.p();
  out.character_sum = kernels::omp::surface_character_sum(f);
  out.count = out.character_sum + p * p + rho * p;
  out.a_p = out.count - p * p - rho * p - 1;
  return out;
}

}  // namespace kummer7
