#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrpc/bound.hpp"
#include "lrpc/product_ring.hpp"

namespace lrpc {

struct ExperimentConfig {
  std::string ring_spec = "Z4";
  /// "m=<int> [f=<poly>]"
  std::string ext_spec = "m=20";
  std::size_t n = 20;
  std::size_t k = 8;
  std::size_t lambda = 2;
  std::size_t t_from = 1;
  std::size_t t_to = 6;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  bool fresh_code_per_trial = false;
  bool record_timing = false;

  /// Throws InvalidConfig.
  void validate() const;
};

/// Failure reasons in CSV column order: lines 5, 8, 14, 16, 18.
constexpr std::array<FailureLine, 5> kFailureLines = {FailureLine::Line5, FailureLine::Line8, FailureLine::Line14,
                                                      FailureLine::Line16, FailureLine::Line18};

struct TrialRecord {
  std::size_t t = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double empirical_failure = 0;
  /// 1 - theoretical bound; absent when the bound's hypotheses do not hold.
  std::optional<double> bound_failure;
  std::array<std::uint64_t, 5> reasons{};
  double wall_ms = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// One outcome of sending a random codeword through an error of rank t.
struct TrialOutcome {
  bool success = false;
  /// Line of the first failing factor; a wrong codeword counts as Line18.
  FailureLine reason = FailureLine::None;
};

TrialOutcome run_single_trial(const ProductLrpcCode& code, std::size_t t, Rng& rng);

/// 1 - product of the local bounds for error rank t in every factor.
std::optional<Rational> failure_bound(const ProductExtension& ext, std::size_t n, std::size_t k, std::size_t lambda,
                                      std::size_t t);

std::vector<TrialRecord> run_trials(const ExperimentConfig& config);

extern const char* const kCsvHeader;

std::string format_csv(const std::vector<TrialRecord>& records, int precision = 6);
void emit_csv(const std::vector<TrialRecord>& records, const std::string& path, int precision = 6);
/// Inverse of format_csv up to the printed precision; throws ParseError.
std::vector<TrialRecord> parse_csv(const std::string& text);

}  // namespace lrpc
