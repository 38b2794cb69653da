#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrpc/lrpc.hpp"

namespace lrpc {

/// Element of R_1 x ... x R_rho: one coordinate per factor.
using ProdElem = std::vector<RingElem>;
using ProdExtElem = std::vector<ExtElem>;

/// Finite commutative ring given as a product of local rings.
class ProductRing {
 public:
  explicit ProductRing(std::vector<RingPtr> factors);
  /// Z_N split into Z_{p^e} factors by CRT, ordered by increasing p.
  static ProductRing integers_mod(std::uint64_t N);

  std::size_t rho() const noexcept { return factors_.size(); }
  const std::vector<RingPtr>& factors() const noexcept { return factors_; }
  const LocalRing& factor(std::size_t j) const;
  /// N for rings built from Z_N (or a product of Z_{p^e} with coprime moduli).
  std::optional<std::uint64_t> modulus() const noexcept { return modulus_; }
  std::string name() const;

  ProdElem zero() const;
  ProdElem one() const;
  ProdElem add(const ProdElem& a, const ProdElem& b) const;
  ProdElem mul(const ProdElem& a, const ProdElem& b) const;
  bool is_unit(const ProdElem& a) const;

  /// CRT images of an integer; requires modulus().
  ProdElem from_integer(std::int64_t x) const;
  /// The residue in [0, N) with the given factor images; requires modulus().
  std::uint64_t to_integer(const ProdElem& a) const;

 private:
  std::vector<RingPtr> factors_;
  std::optional<std::uint64_t> modulus_;
};

/// Phi_j on elements, vectors and matrices.
const RingElem& project(const ProdElem& a, std::size_t j);
std::vector<RingElem> project(const std::vector<ProdElem>& v, std::size_t j);
Matrix<RingElem> project(const Matrix<ProdElem>& a, std::size_t j);
const ExtElem& project(const ProdExtElem& a, std::size_t j);
std::vector<ExtElem> project(const std::vector<ProdExtElem>& v, std::size_t j);
Matrix<ExtElem> project(const Matrix<ProdExtElem>& a, std::size_t j);

/// Inverse of the projections: the element with the given factor images.
ProdExtElem recombine(const std::vector<ExtElem>& parts);
std::vector<ProdExtElem> recombine(const std::vector<std::vector<ExtElem>>& parts);

/// Product of degree-m extensions of the factors of a product ring.
class ProductExtension {
 public:
  explicit ProductExtension(std::vector<ExtPtr> factors);
  /// Default moduli for every factor.
  static ProductExtension create(const ProductRing& ring, unsigned m);

  std::size_t rho() const noexcept { return factors_.size(); }
  unsigned m() const noexcept { return m_; }
  const std::vector<ExtPtr>& factors() const noexcept { return factors_; }
  const ExtPtr& factor(std::size_t j) const;

  ProdExtElem zero() const;
  ProdExtElem add(const ProdExtElem& a, const ProdExtElem& b) const;
  ProdExtElem sub(const ProdExtElem& a, const ProdExtElem& b) const;
  ProdExtElem mul(const ProdExtElem& a, const ProdExtElem& b) const;
  ProdExtElem random(Rng& rng) const;

 private:
  std::vector<ExtPtr> factors_;
  unsigned m_ = 0;
};

struct LocalizedRank {
  std::size_t rank = 0;
  std::size_t free_rank = 0;
  bool is_free = false;
};

/// Rank data of the submodule of R^n generated by the rows of gens, from its
/// projections onto the factors.
LocalizedRank localized_rank(const ProductRing& ring, const Matrix<ProdElem>& gens);
/// Rows are R-linearly independent iff every projection is.
bool linearly_independent(const ProductRing& ring, const Matrix<ProdElem>& rows);

/// LRPC code over a product ring: one local code per factor with common n, k, lambda.
class ProductLrpcCode {
 public:
  static ProductLrpcCode generate(const CodeParams& params, const ProductExtension& ext, Rng& rng);
  explicit ProductLrpcCode(std::vector<LrpcCode> parts);

  const CodeParams& params() const noexcept { return parts_.front().params(); }
  std::size_t rho() const noexcept { return parts_.size(); }
  const std::vector<LrpcCode>& parts() const noexcept { return parts_; }
  const LrpcCode& part(std::size_t j) const;

  Matrix<ProdExtElem> H() const;
  std::vector<ProdExtElem> f_basis() const;
  std::vector<ProdExtElem> encode(const std::vector<ProdExtElem>& msg) const;
  std::vector<ProdExtElem> syndrome(const std::vector<ProdExtElem>& r) const;
  std::vector<ProdExtElem> random_codeword(Rng& rng) const;

 private:
  std::vector<LrpcCode> parts_;
};

struct FactorFailure {
  std::size_t factor = 0;
  FailureLine line = FailureLine::None;
};

struct ProductDecodeResult {
  bool success = false;
  std::vector<ProdExtElem> codeword;
  std::vector<FactorFailure> failures;
  std::vector<DecodeResult> factor_results;
};

ProductDecodeResult decode_product(const ProductLrpcCode& code, const std::vector<ProdExtElem>& r);

}  // namespace lrpc
