#pragma once

#include <optional>
#include <vector>

#include "lrpc/matrix.hpp"
#include "lrpc/zmod.hpp"

namespace lrpc {

/// Complete solution set of A x = b over Z/p^s: every solution is
/// particular + (Z/p^s-combination of kernel).
struct ChainSolution {
  std::optional<std::vector<Coeff>> particular;
  std::vector<std::vector<Coeff>> kernel;
};

/// Diagonal reduction L * A * V = diag(p^v_0, ..., p^v_{r-1}, 0, ...) over the
/// chain ring Z/p^s with minimal-valuation pivoting. L is applied to the right
/// hand sides on the fly; V is accumulated explicitly.
class ChainReduction {
 public:
  ChainReduction(const ZMod& z, Matrix<Coeff> a, Matrix<Coeff> rhs);

  std::size_t rank() const noexcept { return valuations_.size(); }
  const std::vector<unsigned>& pivot_valuations() const noexcept { return valuations_; }

  /// Solution for right hand side column `col`.
  ChainSolution solve(std::size_t col) const;
  /// Generators of the solution module of A x = 0.
  std::vector<std::vector<Coeff>> kernel() const;

 private:
  std::vector<Coeff> apply_v(const std::vector<Coeff>& y) const;

  ZMod z_;
  std::size_t rows_;
  std::size_t cols_;
  Matrix<Coeff> rhs_;  // L * b
  Matrix<Coeff> v_;    // column transform
  std::vector<unsigned> valuations_;
};

ChainSolution chain_solve(const ZMod& z, const Matrix<Coeff>& a, const std::vector<Coeff>& b);

/// Inverse of a square matrix over Z/p^s, or nullopt when it is singular.
std::optional<Matrix<Coeff>> invert_matrix(const ZMod& z, Matrix<Coeff> a);

}  // namespace lrpc
