#include <doctest.h>

#include <random>

#include "kummer7/errors.hpp"
#include "kummer7/kernels.hpp"
#include "kummer7/kummer.hpp"
#include "oracles.hpp"

using namespace kummer7;

namespace {

const EllipticCurveQ kE{{Rational(0), Rational(1), Rational(-1)}};

bool good(std::uint64_t p, const EllipticCurveQ& e = kE) { return !bad_prime_reason(p, e).has_value(); }

}  // namespace

TEST_CASE("eigenspace ranks") {
  CHECK(ns_eigenspace_ranks(FiberConfiguration::from_types({1, 1, 1, 7, 7, 7}), 20) == std::pair{11, 9});
  CHECK(ns_eigenspace_ranks(FiberConfiguration::from_types({2}), 3) == std::pair{3, 0});
  CHECK(ns_eigenspace_ranks(FiberConfiguration{}, 2) == std::pair{2, 0});
  CHECK_THROWS_AS(ns_eigenspace_ranks(FiberConfiguration{}, 3), InconsistentInput);
  CHECK_THROWS_AS(ns_eigenspace_ranks(FiberConfiguration::from_types({2, 2, 2}), 3), InconsistentInput);
  CHECK_THROWS_AS(ns_eigenspace_ranks(FiberConfiguration{}, 1), InconsistentInput);
  // The built-in j gives the same configuration.
  CHECK(ns_eigenspace_ranks(classify_fibers(j_invariant_of_fibration()), kPicardNumberY) == std::pair{11, 9});
}

TEST_CASE("fixed locus") {
  const auto d1 = fixed_locus_invariants(1, 1);
  CHECK((d1.c_D == 8 && d1.g_D == 4 && d1.e_D == 8));
  const auto d2 = fixed_locus_invariants(1, 0);
  CHECK((d2.c_D == 8 && d2.g_D == 0 && d2.e_D == 16));
  const auto d3 = fixed_locus_invariants(2, 0);
  CHECK((d3.c_D == 12 && d3.g_D == 0 && d3.e_D == 24));
  CHECK_THROWS_AS(fixed_locus_invariants(0, 0), ArgumentError);
}

TEST_CASE("Hodge numbers") {
  const KummerInvariants k = hodge_numbers(11, 9, 8, 4);
  CHECK(k.h11 == 20);
  CHECK(k.h12 == 14);
  CHECK(k.euler_X == 12);
  CHECK(k.e_D == 8);
  CHECK(k.euler_X * 2 == 3 * k.e_D);
  CHECK(k.betti() == std::array<int, 7>{1, 0, 20, 30, 20, 0, 1});
  CHECK(k.betti() == kTraceTableDimensions);

  const KummerInvariants small = hodge_numbers(2, 0, 4, 0);
  CHECK(small.h11 == 7);
  CHECK(small.h12 == 1);
  CHECK(small.euler_X == 12);
  CHECK_THROWS_AS(hodge_numbers(11, 9, 8, 3), TheoremConstraintViolated);

  const KummerInvariants g = gamma1_7_invariants();
  CHECK(g.n_plus == 11);
  CHECK(g.n_minus == 9);
  CHECK(g.h11 == 20);
  CHECK(g.h12 == 14);
}

TEST_CASE("predicted trace") {
  CHECK(predicted_trace(5, 0, 0, -2) == 816);
  CHECK(predicted_trace(11, -6, 0, 0) == 3972);
  for (std::int64_t p : {5, 13, 97, 1000003}) {
    const BigInt P = p;
    CHECK(predicted_trace(p, 0, 0, 0) == P * P * P + 20 * P * P + 20 * P + 1);
  }
  const auto t = trace_table(5, 0, 0, -2);
  CHECK(t[3] == -90);
  CHECK(t[2] == 100);
  CHECK(t[4] == 500);
}

TEST_CASE("trace table alternating sum for 1000 random tuples") {
  std::mt19937_64 rng(20260);
  std::uniform_int_distribution<std::int64_t> pd(2, 1'000'000'007);
  std::uniform_int_distribution<std::int64_t> td(-2'000'000, 2'000'000);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t p = pd(rng), a = td(rng), b = td(rng), c = td(rng);
    const auto t = trace_table(p, a, b, c);
    BigInt alt = 0;
    for (std::size_t k = 0; k < t.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * t[k];
    CHECK(alt == predicted_trace(p, a, b, c));
  }
}

TEST_CASE("bad primes") {
  CHECK(bad_prime_reason(2, kE).has_value());
  CHECK(bad_prime_reason(3, kE).has_value());
  CHECK(bad_prime_reason(7, kE).has_value());
  CHECK_FALSE(bad_prime_reason(5, kE).has_value());
  CHECK(bad_prime_reason(5, EllipticCurveQ::parse("0,1,6")).has_value());
  CHECK_THROWS_AS(count_X_prime_factored(PrimeField(7), kE), BadPrime);
  CHECK_THROWS_AS(count_X_prime_naive(PrimeField(3), kE), BadPrime);
  CHECK_THROWS_AS(count_kummer(PrimeField(7), kE, 0), BadPrime);
  CHECK(to_string(CountMethod::naive) == "naive");
  CHECK(parse_count_method("factored") == CountMethod::factored);
  CHECK_THROWS_AS(parse_count_method("fast"), ParseError);
}

TEST_CASE("X' counts") {
  CHECK(count_X_prime_naive(PrimeField(5), kE) == 127);
  CHECK(count_X_prime_naive(PrimeField(11), kE) == 1331);
  CHECK(count_X_prime_factored(PrimeField(5), kE) == 127);
  CHECK(count_X_prime_factored(PrimeField(11), kE) == 1331);
  const PrimeField f5 = build_legendre_table(PrimeField(5));
  CHECK(kernels::omp::surface_character_sum(f5) == 1);
  CHECK(kernels::omp::curve_character_sum(kE.reduce_mod(f5), f5) == 2);
}

TEST_CASE("naive and factored agree, and match the point-count oracle, for good p <= 31") {
  const std::vector<std::array<int, 3>> curves = {{0, 1, -1}, {0, 1, 2}, {-2, 3, 5}};
  for (const auto& e : curves) {
    const EllipticCurveQ c{{Rational(e[0]), Rational(e[1]), Rational(e[2])}};
    for (std::uint64_t p : primes_in_range(5, 31)) {
      if (!good(p, c)) continue;
      CAPTURE(p);
      const BigInt naive = count_X_prime_naive(PrimeField(p), c);
      CHECK(naive == count_X_prime_factored(PrimeField(p), c));
      CHECK(naive == oracle::x_prime_points(e[0], e[1], e[2], static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("character sums are the traces, good p <= 97") {
  for (std::uint64_t p : primes_in_range(5, 97)) {
    if (!good(p)) continue;
    CAPTURE(p);
    const PrimeField f = build_legendre_table(PrimeField(p));
    const SurfaceCount y = count_Y(f);
    const TraceC e = count_points(kE, f);
    CHECK(kernels::omp::surface_character_sum(f) == y.a_p + 1);
    CHECK(kernels::omp::curve_character_sum(kE.reduce_mod(f), f) == -e.c_p);
  }
}

TEST_CASE("count_kummer at p = 5") {
  const KummerCount k = count_kummer(PrimeField(5), kE, 0, CountMethod::naive);
  const KummerTerms& t = k.terms;
  CHECK(t.x_prime == 127);
  CHECK(t.x_infinity == 55);
  CHECK(t.a == 40);
  CHECK(t.b_surf == 38);
  CHECK(t.c == 36);
  CHECK(t.f == 2);
  CHECK(t.v_minus_d == 240);
  CHECK(k.n_counted == 816);
  CHECK(k.n_counted == t.total());
  CHECK(k.c_p == -2);
  CHECK(k.n_counted == predicted_trace(5, 0, 0, -2));
}

TEST_CASE("count_kummer at p = 11 and the X_infinity term") {
  CHECK(count_kummer(PrimeField(11), kE, 0).n_counted == 3972);
  for (std::uint64_t p : {5, 13, 17, 101}) {
    const BigInt P = p;
    CHECK(count_kummer(PrimeField(p), kE, 0).terms.x_infinity == 2 * P * P + P);
  }
}

TEST_CASE("verify_prime") {
  const QSeries g3 = eta_quotient_expand(forms::g3(), 97);
  const QSeries g2B = eta_quotient_expand(forms::g2_B(), 97);
  const TraceRecord r5 = verify_prime(PrimeField(5), kE, g3, g2B);
  CHECK(r5.match);
  CHECK(r5.a_match);
  CHECK(r5.n_counted == 816);
  const TraceRecord r11 = verify_prime(PrimeField(11), kE, g3, g2B);
  CHECK(r11.match);
  CHECK(r11.a_match);
  CHECK(r11.a_p_eta == -6);
  CHECK_THROWS_AS(verify_prime(PrimeField(7), kE, g3, g2B), BadPrime);
  const QSeries short_g3 = eta_quotient_expand(forms::g3(), 10);
  CHECK_THROWS_AS(verify_prime(PrimeField(11), kE, short_g3, g2B), RangeError);

  VerifyOptions corrupt;
  corrupt.b_p_override = 1;
  const TraceRecord bad = verify_prime(PrimeField(11), kE, g3, g2B, corrupt);
  CHECK_FALSE(bad.match);
  CHECK(bad.a_match);
  CHECK(bad.b_p == 1);
}

TEST_CASE("every good prime matches for several curves") {
  const QSeries g3 = eta_quotient_expand(forms::g3(), 97);
  const QSeries g2B = eta_quotient_expand(forms::g2_B(), 97);
  for (const char* spec : {"0,1,-1", "0,1,2", "-2,3,5", "1/2,-1/3,2"}) {
    const EllipticCurveQ c = EllipticCurveQ::parse(spec);
    for (std::uint64_t p : primes_in_range(5, 97)) {
      if (!good(p, c)) continue;
      CAPTURE(spec);
      CAPTURE(p);
      const TraceRecord r = verify_prime(PrimeField(p), c, g3, g2B);
      CHECK(r.match);
      CHECK(r.a_match);
    }
  }
}
