#include "lrpc/simulation.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrpc/errors.hpp"
#include "lrpc/ring_spec.hpp"

namespace lrpc {

const char* const kCsvHeader =
    "t,trials,failures,empirical_failure,bound_failure,reason_line5,reason_line8,reason_line14,reason_line16,"
    "reason_line18,wall_ms";

void ExperimentConfig::validate() const {
  if (trials == 0) throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
  if (t_from > t_to) throw Error(ErrorCode::InvalidConfig, "empty t range");
  if (n == 0 || k == 0 || k >= n) throw Error(ErrorCode::InvalidConfig, "need 0 < k < n");
  if (lambda == 0) throw Error(ErrorCode::InvalidConfig, "lambda must be at least 1");
}

TrialOutcome run_single_trial(const ProductLrpcCode& code, std::size_t t, Rng& rng) {
  const std::size_t n = code.params().n;
  const auto c = code.random_codeword(rng);
  std::vector<std::vector<ExtElem>> received;
  for (std::size_t j = 0; j < code.rho(); ++j) {
    const Extension& S = code.part(j).ext();
    const auto e = sample_error(S, n, t, rng);
    std::vector<ExtElem> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(S.add(c[i][j], e.e[i]));
    received.push_back(std::move(r));
  }
  const auto res = decode_product(code, recombine(received));
  TrialOutcome out;
  if (!res.success) {
    out.reason = res.failures.front().line;
  } else if (res.codeword != c) {
    out.reason = FailureLine::Line18;
  } else {
    out.success = true;
  }
  return out;
}

std::optional<Rational> failure_bound(const ProductExtension& ext, std::size_t n, std::size_t k, std::size_t lambda,
                                      std::size_t t) {
  std::vector<BoundInput> inputs;
  for (const auto& f : ext.factors()) inputs.push_back({f->ring().q(), lambda, t, f->m(), n, k});
  try {
    return Rational(1) - product_bound(inputs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::HypothesisViolated) return std::nullopt;
    throw;
  }
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& config) {
  config.validate();
  const RingSpec spec = parse_ring_spec(config.ring_spec);
  if (spec.ext && !config.ext_spec.empty()) throw Error(ErrorCode::InvalidConfig, "extension given twice");
  if (!spec.ext && config.ext_spec.empty()) throw Error(ErrorCode::InvalidConfig, "missing extension");
  const ProductExtension ext = spec.ext ? *spec.ext : parse_extension_spec(spec.ring, config.ext_spec);
  const CodeParams params{config.n, config.k, config.lambda, 0};

  std::vector<TrialRecord> records;
  for (std::size_t t = config.t_from; t <= config.t_to; ++t) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.t = t;
    rec.trials = config.trials;
    std::optional<ProductLrpcCode> shared;
    if (!config.fresh_code_per_trial) {
      Rng code_rng(derive_seed(config.seed, t, UINT64_MAX));
      shared = ProductLrpcCode::generate(params, ext, code_rng);
    }
    for (std::uint64_t i = 0; i < config.trials; ++i) {
      Rng rng(derive_seed(config.seed, t, i));
      TrialOutcome out;
      if (shared) {
        out = run_single_trial(*shared, t, rng);
      } else {
        const auto code = ProductLrpcCode::generate(params, ext, rng);
        out = run_single_trial(code, t, rng);
      }
      if (out.success) continue;
      ++rec.failures;
      for (std::size_t r = 0; r < kFailureLines.size(); ++r)
        if (kFailureLines[r] == out.reason) ++rec.reasons[r];
    }
    rec.empirical_failure = static_cast<double>(rec.failures) / static_cast<double>(rec.trials);
    if (auto b = failure_bound(ext, config.n, config.k, config.lambda, t)) rec.bound_failure = to_double(*b);
    if (config.record_timing)
      rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    records.push_back(rec);
  }
  return records;
}

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

}  // namespace

std::string format_csv(const std::vector<TrialRecord>& records, int precision) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.t) + "," + std::to_string(r.trials) + "," + std::to_string(r.failures) + ",";
    out += fixed(r.empirical_failure, precision) + ",";
    if (r.bound_failure) out += fixed(*r.bound_failure, precision);
    for (auto c : r.reasons) out += "," + std::to_string(c);
    out += "," + fixed(r.wall_ms, precision) + "\n";
  }
  return out;
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path, int precision) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  f << format_csv(records, precision);
  if (!f.flush()) throw Error(ErrorCode::IoError, "cannot write " + path);
}

std::vector<TrialRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError(0, "CSV header");
  std::size_t offset = line.size() + 1;
  std::vector<TrialRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) {
      offset += 1;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 11) throw ParseError(offset, "11 CSV fields");
    TrialRecord r;
    try {
      r.t = std::stoull(cells[0]);
      r.trials = std::stoull(cells[1]);
      r.failures = std::stoull(cells[2]);
      r.empirical_failure = std::stod(cells[3]);
      if (!cells[4].empty()) r.bound_failure = std::stod(cells[4]);
      for (std::size_t i = 0; i < 5; ++i) r.reasons[i] = std::stoull(cells[5 + i]);
      r.wall_ms = std::stod(cells[10]);
    } catch (const std::logic_error&) {
      throw ParseError(offset, "numeric CSV field");
    }
    out.push_back(r);
    offset += line.size() + 1;
  }
  return out;
}

}  // namespace lrpc
