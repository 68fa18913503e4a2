#include "kummer7/report.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "kummer7/errors.hpp"
#include "kummer7/kernels.hpp"

namespace kummer7 {

namespace {

constexpr const char* kBpNote =
    "b_p is the eta coefficient of g2^B; it enters both the count (#B = p+1-b_p) and the prediction, "
    "so agreement checks the counting terms and a_p modularity, not b_p independently";

nlohmann::ordered_json big_json(const BigInt& v) {
  if (auto i = to_int64(v)) return *i;
  return v.str();
}

std::string elapsed_ms(std::chrono::nanoseconds ns) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << static_cast<double>(ns.count()) / 1e6;
  return os.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

void VerifyConfig::validate() const {
  if (p_min < 5) throw ArgumentError("--pmin must be at least 5");
  if (p_min > p_max) throw ArgumentError("--pmin exceeds --pmax");
  const std::uint64_t limit = std::min(kCountingPrimeLimit, kDefaultTableGuard);
  if (p_max >= limit) throw ArgumentError("--pmax must be below " + std::to_string(limit));
  if (threads && *threads < 1) throw ArgumentError("--threads must be positive");
}

std::size_t SweepResult::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const TraceRecord& r) { return !r.match || !r.a_match; }));
}

SweepResult run_sweep(const VerifyConfig& config) {
  config.validate();
  if (config.threads) kernels::set_threads(*config.threads);

  SweepResult result;
  std::vector<std::uint64_t> good;
  for (std::uint64_t p : primes_in_range(config.p_min, config.p_max)) {
    if (auto reason = bad_prime_reason(p, config.curve)) {
      result.skipped.push_back({p, *reason});
    } else {
      good.push_back(p);
    }
  }

  const auto n_terms = static_cast<std::size_t>(config.p_max);
  const QSeries g3 = eta_quotient_expand(forms::g3(), n_terms);
  const QSeries g2B = eta_quotient_expand(forms::g2_B(), n_terms);

  result.rows.resize(good.size());
  std::vector<std::exception_ptr> errors(good.size());
  const auto n = static_cast<std::int64_t>(good.size());
  // Largest primes first: their O(p^2) cost dominates.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = n - 1; k >= 0; --k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      VerifyOptions opts;
      opts.method = config.method;
      if (auto it = config.b_p_overrides.find(good[i]); it != config.b_p_overrides.end()) {
        opts.b_p_override = it->second;
      }
      const PrimeField field = build_legendre_table(PrimeField(good[i]));
      result.rows[i] = verify_prime(field, config.curve, g3, g2B, opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

void write_csv(const SweepResult& result, const VerifyConfig& config, std::ostream& os) {
  os << "# kummer7 verify curve=" << config.curve.to_string() << " method=" << to_string(config.method)
     << " range=[" << config.p_min << "," << config.p_max << "]\n";
  os << "# " << kBpNote << "\n";
  for (const auto& [p, v] : config.b_p_overrides) os << "# override b_" << p << "=" << v << "\n";
  os << kCsvHeader << (config.timing ? ",elapsed_ms" : "") << "\n";
  for (const auto& r : result.rows) {
    os << r.p << ',' << r.a_p_eta << ',' << r.a_p_count << ',' << r.b_p << ',' << r.c_p << ',' << r.n_counted
       << ',' << r.n_predicted << ',' << flag(r.match) << ',' << flag(r.a_match);
    if (config.timing) os << ',' << elapsed_ms(r.elapsed);
    os << "\n";
  }
  os << "# summary checked=" << result.rows.size() << " skipped=" << result.skipped.size()
     << " mismatches=" << result.mismatches() << "\n";
  for (const auto& s : result.skipped) os << "# skipped p=" << s.p << ": " << s.reason << "\n";
}

void write_json(const SweepResult& result, const VerifyConfig& config, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["curve"] = config.curve.to_string();
  doc["method"] = to_string(config.method);
  doc["p_min"] = config.p_min;
  doc["p_max"] = config.p_max;
  doc["note"] = kBpNote;
  if (!config.b_p_overrides.empty()) {
    nlohmann::ordered_json ov = nlohmann::ordered_json::object();
    for (const auto& [p, v] : config.b_p_overrides) ov[std::to_string(p)] = v;
    doc["b_p_overrides"] = ov;
  }
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["a_p_eta"] = r.a_p_eta;
    j["a_p_count"] = r.a_p_count;
    j["b_p"] = r.b_p;
    j["c_p"] = r.c_p;
    j["n_counted"] = big_json(r.n_counted);
    j["n_predicted"] = big_json(r.n_predicted);
    j["match"] = r.match;
    j["a_match"] = r.a_match;
    if (config.timing) j["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1e6;
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& s : result.skipped) skipped.push_back({{"p", s.p}, {"reason", s.reason}});
  doc["summary"] = {{"checked", result.rows.size()}, {"skipped", skipped}, {"mismatches", result.mismatches()}};
  os << doc.dump(2) << "\n";
}

std::pair<std::uint64_t, std::int64_t> parse_override(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("override must look like p:value, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string ps = text.substr(0, colon);
    const std::string vs = text.substr(colon + 1);
    const unsigned long long p = std::stoull(ps, &used);
    if (used != ps.size()) throw std::invalid_argument(ps);
    const long long v = std::stoll(vs, &used);
    if (used != vs.size()) throw std::invalid_argument(vs);
    return {p, v};
  } catch (const std::logic_error&) {
    throw ParseError("override must look like p:value, got '" + text + "'");
  }
}

}  // namespace kummer7
