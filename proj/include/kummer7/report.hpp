#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kummer7/curves.hpp"
#include "kummer7/kummer.hpp"

namespace kummer7 {

enum class ReportFormat { csv, json };

struct VerifyConfig {
  std::uint64_t p_min = 5;
  std::uint64_t p_max = 97;
  EllipticCurveQ curve{{Rational(0), Rational(1), Rational(-1)}};
  CountMethod method = CountMethod::factored;
  ReportFormat format = ReportFormat::csv;
  std::optional<std::string> output_path;
  std::optional<int> threads;
  bool timing = true;
  /// p -> b_p used in the prediction instead of the eta coefficient.
  std::map<std::uint64_t, std::int64_t> b_p_overrides;

  /// Throws ArgumentError unless 5 <= p_min <= p_max < field-size guard.
  void validate() const;
};

struct SkippedPrime {
  std::uint64_t p = 0;
  std::string reason;
};

struct SweepResult {
  std::vector<TraceRecord> rows;  // ascending p
  std::vector<SkippedPrime> skipped;

  std::size_t mismatches() const;
};

/// Expands g3 and g2^B once, then verifies every good prime in range on the OpenMP pool.
/// Rows come back in ascending p whatever the completion order.
SweepResult run_sweep(const VerifyConfig& config);

inline constexpr const char* kCsvHeader = "p,a_p_eta,a_p_count,b_p,c_p,n_counted,n_predicted,match,a_match";

void write_csv(const SweepResult& result, const VerifyConfig& config, std::ostream& os);
void write_json(const SweepResult& result, const VerifyConfig& config, std::ostream& os);

/// Parses "p:value".
std::pair<std::uint64_t, std::int64_t> parse_override(const std::string& text);

}  // namespace kummer7
