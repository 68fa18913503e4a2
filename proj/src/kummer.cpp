#include "kummer7/kummer.hpp"

#include "kummer7/errors.hpp"
#include "kummer7/kernels.hpp"

namespace kummer7 {

namespace {

// The naive path accumulates up to p^3 in int64.
constexpr std::uint64_t kNaiveLimit = std::uint64_t{1} << 20;

void require_good(std::uint64_t p, const EllipticCurveQ& curve) {
  if (auto reason = bad_prime_reason(p, curve)) throw BadPrime(static_cast<long long>(p), *reason);
}

std::int64_t narrow(const BigInt& v, const char* what) {
  auto r = to_int64(v);
  if (!r) throw RangeError(std::string(what) + " does not fit in 64 bits");
  return *r;
}

}  // namespace

std::pair<int, int> ns_eigenspace_ranks(const FiberConfiguration& fibers, int rho) {
  if (rho < 2) throw InconsistentInput("rho(Y) must be at least 2, got " + std::to_string(rho));
  const int diff = 2 + fibers.even_fiber_count();
  if ((rho - diff) % 2 != 0) {
    throw InconsistentInput("parity mismatch: rho = " + std::to_string(rho) + " but n+ - n- = " + std::to_string(diff));
  }
  const int n_plus = (rho + diff) / 2;
  const int n_minus = (rho - diff) / 2;
  if (n_minus < 0) {
    throw InconsistentInput("rho = " + std::to_string(rho) + " too small for n+ - n- = " + std::to_string(diff));
  }
  return {n_plus, n_minus};
}

FixedLocus fixed_locus_invariants(int b_components, int b_total_genus) {
  if (b_components < 1 || b_total_genus < 0) throw ArgumentError("B needs >= 1 component and genus >= 0");
  FixedLocus d;
  d.c_D = 4 * (1 + b_components);
  d.g_D = 4 * b_total_genus;
  d.e_D = 2 * d.c_D - 2 * d.g_D;
  return d;
}

KummerInvariants hodge_numbers(int n_plus, int n_minus, int c_D, int g_D) {
  KummerInvariants k;
  k.n_plus = n_plus;
  k.n_minus = n_minus;
  k.c_D = c_D;
  k.g_D = g_D;
  k.e_D = 2 * c_D - 2 * g_D;
  if (4 * (n_plus - n_minus) != k.e_D) {
    throw TheoremConstraintViolated("n+ - n- = " + std::to_string(n_plus - n_minus) + " but e(D)/4 = " +
                                    std::to_string(k.e_D) + "/4");
  }
  k.h11 = n_plus + 1 + c_D;
  k.h12 = 1 + n_minus + g_D;
  k.euler_X = 2 * (k.h11 - k.h12);
  return k;
}

KummerInvariants gamma1_7_invariants() {
  const FiberConfiguration fibers = classify_fibers(j_invariant_of_fibration(), 24);
  const auto [n_plus, n_minus] = ns_eigenspace_ranks(fibers, kPicardNumberY);
  // B: irreducible, genus 1.
  const FixedLocus d = fixed_locus_invariants(1, 1);
  return hodge_numbers(n_plus, n_minus, d.c_D, d.g_D);
}

BigInt predicted_trace(std::int64_t p, std::int64_t a_p, std::int64_t b_p, std::int64_t c_p) {
  const BigInt P = p;
  return P * P * P + 20 * P * P - (BigInt(a_p) * c_p + 9 * P * c_p + 4 * P * b_p) + 20 * P + 1;
}

std::array<BigInt, 7> trace_table(std::int64_t p, std::int64_t a_p, std::int64_t b_p, std::int64_t c_p) {
  const BigInt P = p;
  return {BigInt(1), BigInt(0), 20 * P, BigInt(a_p) * c_p + 9 * P * c_p + 4 * P * b_p, 20 * P * P, BigInt(0), P * P * P};
}

std::optional<std::string> bad_prime_reason(std::uint64_t p, const EllipticCurveQ& curve) {
  if (auto r = surface_bad_reason(p)) return r;
  if (14 % p == 0) return "p divides the conductor 14 of B";
  if (auto r = curve.bad_reduction_reason(p)) return "E has bad reduction: " + *r;
  return std::nullopt;
}

std::string to_string(CountMethod m) { return m == CountMethod::naive ? "naive" : "factored"; }

CountMethod parse_count_method(std::string_view text) {
  if (text == "naive") return CountMethod::naive;
  if (text == "factored") return CountMethod::factored;
  throw ParseError("unknown counting method '" + std::string(text) + "' (naive|factored)");
}

BigInt count_X_prime_naive(const PrimeField& field, const EllipticCurveQ& curve) {
  require_good(field.p(), curve);
  if (field.p() > kNaiveLimit) throw ResourceError("naive triple sum is limited to p <= 2^20");
  const PrimeField f = field.has_table() ? field : build_legendre_table(field);
  const BigInt p = f.p();
  return kernels::omp::product_character_sum(curve.reduce_mod(f), f) + p * p * p;
}

BigInt count_X_prime_factored(const PrimeField& field, const EllipticCurveQ& curve) {
  require_good(field.p(), curve);
  const PrimeField f = field.has_table() ? field : build_legendre_table(field);
  const BigInt p = f.p();
  const BigInt s1 = kernels::omp::surface_character_sum(f);
  const BigInt s2 = kernels::omp::curve_character_sum(curve.reduce_mod(f), f);
  return s1 * s2 + p * p * p;
}

KummerCount count_kummer(const PrimeField& field, const EllipticCurveQ& curve, std::int64_t b_p, CountMethod method) {
  require_good(field.p(), curve);
  const PrimeField f = field.has_table() ? field : build_legendre_table(field);
  const TraceC e = count_points(curve, f);
  const BigInt p = f.p();
  const BigInt c = e.c_p;

  KummerCount out;
  out.c_p = e.c_p;
  KummerTerms& t = out.terms;
  t.x_prime = method == CountMethod::naive ? count_X_prime_naive(f, curve) : count_X_prime_factored(f, curve);
  t.x_infinity = 2 * p * p + p;
  t.a = p * (p - c + 1);
  t.b_surf = p * (p - c + 1) + c;
  t.c = p * p + 2 * p + 1;
  t.f = -c;
  const BigInt n_B = p + 1 - b_p;  // points on the curve B
  t.v_minus_d = 4 * p * (n_B + p + 1);
  out.n_counted = t.total();
  return out;
}

TraceRecord verify_prime(const PrimeField& field, const EllipticCurveQ& curve, const QSeries& g3_series,
                         const QSeries& g2B_series, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_good(field.p(), curve);
  const auto n = static_cast<std::int64_t>(field.p());

  TraceRecord rec;
  rec.p = field.p();
  rec.a_p_eta = narrow(coefficient(g3_series, n), "a_p");
  rec.b_p = narrow(coefficient(g2B_series, n), "b_p");

  const PrimeField f = field.has_table() ? field : build_legendre_table(field);
  rec.a_p_count = count_Y(f).a_p;
  KummerCount kc = count_kummer(f, curve, rec.b_p, options.method);
  rec.c_p = kc.c_p;
  rec.terms = std::move(kc.terms);
  rec.n_counted = std::move(kc.n_counted);

  const std::int64_t b_pred = options.b_p_override.value_or(rec.b_p);
  if (options.b_p_override) rec.b_p = b_pred;
  rec.n_predicted = predicted_trace(n, rec.a_p_eta, b_pred, rec.c_p);
  rec.match = rec.n_counted == rec.n_predicted;
  rec.a_match = rec.a_p_count == rec.a_p_eta;
  rec.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return rec;
}

}  // namespace kummer7
