#include "kummer7/cli.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kummer7/curves.hpp"
#include "kummer7/errors.hpp"
#include "kummer7/fibration.hpp"
#include "kummer7/kummer.hpp"
#include "kummer7/qseries.hpp"
#include "kummer7/report.hpp"

namespace kummer7::cli {

namespace {

struct VerifyArgs {
  std::uint64_t p_min = 5;
  std::uint64_t p_max = 97;
  std::string curve = "0,1,-1";
  std::string method = "factored";
  std::string format = "csv";
  std::string output;
  std::optional<int> threads;
  bool no_timing = false;
  std::vector<std::string> overrides;
};

struct EtaArgs {
  std::string quotient;
  std::size_t terms = 20;
};

struct CountArgs {
  std::uint64_t p = 0;
  std::string target = "surface";
  std::string curve = "0,1,-1";
  std::string method = "factored";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyConfig config;
  try {
    config.p_min = a.p_min;
    config.p_max = a.p_max;
    config.curve = EllipticCurveQ::parse(a.curve);
    config.method = parse_count_method(a.method);
    if (a.format == "csv") {
      config.format = ReportFormat::csv;
    } else if (a.format == "json") {
      config.format = ReportFormat::json;
    } else {
      throw ParseError("unknown format '" + a.format + "' (csv|json)");
    }
    if (!a.output.empty()) config.output_path = a.output;
    config.threads = a.threads;
    config.timing = !a.no_timing;
    for (const auto& o : a.overrides) {
      const auto [p, v] = parse_override(o);
      config.b_p_overrides[p] = v;
    }
    config.validate();
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const SweepResult result = run_sweep(config);
  auto emit = [&](std::ostream& os) {
    if (config.format == ReportFormat::csv) {
      write_csv(result, config, os);
    } else {
      write_json(result, config, os);
    }
  };
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "cannot open " << *config.output_path << " for writing\n";
      return kExitUsage;
    }
    emit(file);
    err << "verified " << result.rows.size() << " primes, skipped " << result.skipped.size() << ", mismatches "
        << result.mismatches() << "\n";
  } else {
    emit(out);
  }
  return result.mismatches() == 0 ? kExitOk : kExitMismatch;
}

int cmd_eta(const EtaArgs& a, std::ostream& out) {
  const EtaQuotient q = EtaQuotient::parse(a.quotient);
  out << to_string(eta_quotient_expand(q, a.terms)) << "\n";
  return kExitOk;
}

int cmd_hodge(std::ostream& out) {
  const KummerInvariants k = gamma1_7_invariants();
  out << "n_plus=" << k.n_plus << "\n"
      << "n_minus=" << k.n_minus << "\n"
      << "c_D=" << k.c_D << "\n"
      << "g_D=" << k.g_D << "\n"
      << "e_D=" << k.e_D << "\n"
      << "h11=" << k.h11 << "\n"
      << "h12=" << k.h12 << "\n"
      << "euler_X=" << k.euler_X << "\n"
      << "betti=";
  const auto b = k.betti();
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << "\n";
  return kExitOk;
}

int cmd_fibers(std::ostream& out) {
  const RationalFunctionQ j = j_invariant_of_fibration();
  const FiberConfiguration config = classify_fibers(j, 24);
  out << "j = " << j.to_string() << "\n";
  out << config.to_string();
  out << "I7 fibers: " << config.count_of_type(7) << ", I1 fibers: " << config.count_of_type(1)
      << ", index sum: " << config.index_sum() << "\n";
  return kExitOk;
}

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const EllipticCurveQ curve = EllipticCurveQ::parse(a.curve);
    const PrimeField field = build_legendre_table(PrimeField(a.p));
    if (a.target == "surface") {
      const SurfaceCount s = count_Y(field);
      out << "p=" << s.p << " count=" << s.count << " a_p=" << s.a_p << "\n";
    } else if (a.target == "curve") {
      const TraceC c = count_points(curve, field);
      out << "p=" << c.p << " count=" << c.count << " c_p=" << c.c_p << "\n";
    } else if (a.target == "kummer") {
      if (auto reason = bad_prime_reason(a.p, curve)) throw BadPrime(static_cast<long long>(a.p), *reason);
      const QSeries g2B = eta_quotient_expand(forms::g2_B(), a.p);
      const auto b_p = static_cast<std::int64_t>(coefficient(g2B, static_cast<std::int64_t>(a.p)));
      const KummerCount k = count_kummer(field, curve, b_p, parse_count_method(a.method));
      const KummerTerms& t = k.terms;
      out << "p=" << a.p << " b_p=" << b_p << " c_p=" << k.c_p << "\n"
          << "X'=" << t.x_prime << " X_inf=" << t.x_infinity << " A=" << t.a << " B_surf=" << t.b_surf
          << " C=" << t.c << " F=" << t.f << " V-D=" << t.v_minus_d << "\n"
          << "n_counted=" << k.n_counted << "\n";
    } else {
      throw ParseError("unknown target '" + a.target + "' (surface|curve|kummer)");
    }
  } catch (const BadPrime& e) {
    err << "skipped p=" << e.prime() << ": " << e.reason() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_identities(std::size_t terms, std::ostream& out) {
  const QSeries j = j_expansion(terms);
  const QSeries u = eta_quotient_expand(forms::hauptmodul_u(), terms);
  const QSeries r = eta_quotient_expand(forms::hauptmodul_r(), terms);
  const auto [n3, d3] = forms::phi3();
  const auto [n4, d4] = forms::phi4();
  const bool ok3 = verify_hauptmodul_identity(n3, d3, r, j, terms);
  const bool ok4 = verify_hauptmodul_identity(n4, d4, u, j, terms);
  out << "phi3: " << (ok3 ? "ok" : "FAIL") << "\n";
  out << "phi4: " << (ok4 ? "ok" : "FAIL") << "\n";
  return ok3 && ok4 ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point-count verification of the Kummer threefold X(Gamma_1(7))", "kummer7"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify the trace formula for every good prime in a range");
  verify->add_option("--pmin", va.p_min, "smallest prime considered")->capture_default_str();
  verify->add_option("--pmax", va.p_max, "largest prime considered")->capture_default_str();
  verify->add_option("--curve", va.curve, "2-torsion abscissae e1,e2,e3 of E (n or n/d)")->capture_default_str();
  verify->add_option("--method", va.method, "X' counting: naive|factored")->capture_default_str();
  verify->add_option("--format", va.format, "csv|json")->capture_default_str();
  verify->add_option("-o,--output", va.output, "write the report here instead of stdout");
  verify->add_option("--threads", va.threads, "OpenMP threads (default: runtime)");
  verify->add_flag("--no-timing", va.no_timing, "omit the elapsed_ms column");
  verify->add_option("--override-bp", va.overrides, "p:value, replace b_p in the prediction (negative testing)");

  EtaArgs ea;
  auto* eta = app.add_subcommand("eta", "expand an eta quotient delta:exponent[,delta:exponent]*");
  eta->add_option("quotient", ea.quotient, "e.g. 1:3,7:3")->required();
  eta->add_option("terms", ea.terms, "number of coefficients")->capture_default_str()->check(CLI::PositiveNumber);

  app.add_subcommand("hodge", "Hodge numbers and NS eigenspace ranks of X(Gamma_1(7))");
  app.add_subcommand("fibers", "singular fibers of Y read off the j-invariant");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "point counts at one prime");
  count->add_option("--p", ca.p, "the prime")->required();
  count->add_option("--target", ca.target, "surface|curve|kummer")->capture_default_str();
  count->add_option("--curve", ca.curve, "2-torsion abscissae of E")->capture_default_str();
  count->add_option("--method", ca.method, "naive|factored (kummer target)")->capture_default_str();

  std::size_t id_terms = 30;
  auto* identities = app.add_subcommand("identities", "check the hauptmodul maps phi3, phi4 against j");
  identities->add_option("terms", id_terms, "number of coefficients of j")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") return cmd_verify(va, out, err);
    if (name == "eta") return cmd_eta(ea, out);
    if (name == "hodge") return cmd_hodge(out);
    if (name == "fibers") return cmd_fibers(out);
    if (name == "count") return cmd_count(ca, out, err);
    if (name == "identities") return cmd_identities(id_terms, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kummer7::cli
