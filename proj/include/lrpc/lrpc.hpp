#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrpc/extension.hpp"
#include "lrpc/modlin.hpp"

namespace lrpc {

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  /// Design error rank; 0 disables the checks that depend on it.
  std::size_t t_max = 0;

  /// Throws InvalidConfig on k, n, t_max and GenerationFailed when
  /// lambda < n / (n - k).
  void validate(unsigned m) const;
};

struct PropertyFlags {
  bool unique_decoding = false;
  bool maximal_row_span = false;
  bool unity = false;
  bool square_property = false;
};

/// Coordinates of h over the basis f_1, ..., f_lambda of F; nullopt when h is not in F.
std::optional<VecR> decompose_in_basis(const Extension& S, const std::vector<ExtElem>& f_basis, const ExtElem& h);

/// H_ext: row i * lambda + l, column j holds h_{i,j,l}. Throws NotInF.
MatR build_h_ext(const Extension& S, const MatS& H, const std::vector<ExtElem>& f_basis);

/// LRPC code over S given by its parity-check matrix. Immutable.
class LrpcCode {
 public:
  static constexpr int kGenerationAttempts = 1000;

  /// Samples F and H with the unique-decoding, maximal-row-span and unity
  /// properties and F with the square property.
  static LrpcCode generate(const CodeParams& params, ExtPtr ext, Rng& rng);
  /// Builds a code from an explicit parity-check matrix and basis of F
  /// (f_basis[0] must be 1); property flags are computed, not assumed.
  static LrpcCode from_parts(const CodeParams& params, ExtPtr ext, MatS H, std::vector<ExtElem> f_basis);

  const CodeParams& params() const noexcept { return params_; }
  const Extension& ext() const noexcept { return *ext_; }
  const ExtPtr& ext_ptr() const noexcept { return ext_; }
  const MatS& H() const noexcept { return H_; }
  const std::vector<ExtElem>& f_basis() const noexcept { return f_; }
  const std::vector<ExtElem>& f_inverse() const noexcept { return f_inv_; }
  const MatR& H_ext() const noexcept { return H_ext_; }
  const PropertyFlags& flags() const noexcept { return flags_; }
  const SquarePropertyReport& square_report() const noexcept { return square_; }
  /// Support of F in R^m.
  Submodule F() const;
  /// Systematic generator matrix (k x n) with H * G^T = 0.
  const MatS& generator() const noexcept { return G_; }

  std::vector<ExtElem> encode(const std::vector<ExtElem>& msg) const;
  std::vector<ExtElem> syndrome(const std::vector<ExtElem>& r) const;
  bool is_codeword(const std::vector<ExtElem>& c) const;
  std::vector<ExtElem> random_codeword(Rng& rng) const;

  /// P with P * H_ext = [I_n; 0] (present with the unique-decoding property).
  const std::optional<MatR>& h_ext_transform() const noexcept { return h_ext_p_; }

 private:
  LrpcCode() = default;
  void finish();

  CodeParams params_;
  ExtPtr ext_;
  MatS H_;
  std::vector<ExtElem> f_;
  std::vector<ExtElem> f_inv_;
  MatR H_ext_;
  PropertyFlags flags_;
  SquarePropertyReport square_;
  std::optional<MatR> h_ext_p_;
  MatS G_;
};

enum class FailureLine { None = 0, Line5 = 5, Line8 = 8, Line14 = 14, Line16 = 16, Line18 = 18 };

const char* to_string(FailureLine line);

struct DecoderState {
  std::vector<ExtElem> s;
  std::optional<Submodule> S_supp;
  std::size_t nu = 0;
  std::size_t t_prime = 0;
  std::vector<Submodule> S_i;
  std::optional<Submodule> E_prime;
  std::optional<std::vector<ExtElem>> e_prime;
};

struct DecodeResult {
  bool success = false;
  std::vector<ExtElem> codeword;
  FailureLine failure = FailureLine::None;
  DecoderState state;
};

/// Error vector with support E (basis eps_1..eps_t) and syndrome s, if one
/// exists; throws RankDeficient unless frk(E F) = lambda * t.
std::optional<std::vector<ExtElem>> erasure_decode(const LrpcCode& code, const std::vector<ExtElem>& E_basis,
                                                   const std::vector<ExtElem>& s);

DecodeResult decode_local(const LrpcCode& code, const std::vector<ExtElem>& r);

struct ErrorSample {
  std::vector<ExtElem> e;
  std::vector<ExtElem> support_basis;
};

/// Uniform error of length n whose support is free of rank exactly t.
ErrorSample sample_error(const Extension& S, std::size_t n, std::size_t t, Rng& rng);

/// Syndrome condition frk(S) = lambda t and intersection condition (the
/// intersection of f_i^{-1} S is free of rank t), computed with the general
/// kernel intersection rather than the decoder's code path.
struct ConditionCheck {
  bool syndrome_condition = false;
  bool intersection_condition = false;
};
ConditionCheck check_decoding_conditions(const LrpcCode& code, const std::vector<ExtElem>& e, std::size_t t);

}  // namespace lrpc
