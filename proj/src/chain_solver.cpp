#include "lrpc/chain_solver.hpp"

#include <cassert>

namespace lrpc {

ChainReduction::ChainReduction(const ZMod& z, Matrix<Coeff> a, Matrix<Coeff> rhs)
    : z_(z), rows_(a.rows()), cols_(a.cols()), rhs_(std::move(rhs)), v_(a.cols(), a.cols(), 0) {
  assert(rhs_.rows() == rows_);
  for (std::size_t j = 0; j < cols_; ++j) v_(j, j) = 1;

  const std::size_t limit = std::min(rows_, cols_);
  for (std::size_t k = 0; k < limit; ++k) {
    // Pivot of least valuation in the trailing block.
    std::size_t pi = rows_, pj = cols_;
    unsigned best = z_.s();
    for (std::size_t i = k; i < rows_ && best > 0; ++i) {
      for (std::size_t j = k; j < cols_; ++j) {
        const Coeff x = a(i, j);
        if (x == 0) continue;
        const unsigned v = z_.valuation(x);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    }
    if (pi == rows_) break;

    a.swap_rows(pi, k);
    rhs_.swap_rows(pi, k);
    a.swap_cols(pj, k);
    v_.swap_cols(pj, k);

    const Coeff pivot_power = z_.pow_p(best);
    const Coeff unit = z_.divide_by_p_power(a(k, k), best);
    const Coeff unit_inv = z_.inverse(unit);
    for (std::size_t j = k; j < cols_; ++j) a(k, j) = z_.mul(a(k, j), unit_inv);
    for (std::size_t j = 0; j < rhs_.cols(); ++j) rhs_(k, j) = z_.mul(rhs_(k, j), unit_inv);
    a(k, k) = pivot_power;

    for (std::size_t i = k + 1; i < rows_; ++i) {
      const Coeff x = a(i, k);
      if (x == 0) continue;
      const Coeff factor = z_.divide_by_p_power(x, best);
      for (std::size_t j = k; j < cols_; ++j) a(i, j) = z_.sub(a(i, j), z_.mul(factor, a(k, j)));
      for (std::size_t j = 0; j < rhs_.cols(); ++j) {
        rhs_(i, j) = z_.sub(rhs_(i, j), z_.mul(factor, rhs_(k, j)));
      }
    }
    // Column operations only touch row k now; rows below are zero in column k.
    for (std::size_t j = k + 1; j < cols_; ++j) {
      const Coeff x = a(k, j);
      if (x == 0) continue;
      const Coeff factor = z_.divide_by_p_power(x, best);
      a(k, j) = 0;
      for (std::size_t i = 0; i < cols_; ++i) v_(i, j) = z_.sub(v_(i, j), z_.mul(factor, v_(i, k)));
    }
    valuations_.push_back(best);
  }
}

std::vector<Coeff> ChainReduction::apply_v(const std::vector<Coeff>& y) const {
  std::vector<Coeff> x(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < cols_; ++i) x[i] = z_.add(x[i], z_.mul(v_(i, j), y[j]));
  }
  return x;
}

std::vector<std::vector<Coeff>> ChainReduction::kernel() const {
  std::vector<std::vector<Coeff>> out;
  for (std::size_t i = 0; i < cols_; ++i) {
    std::vector<Coeff> y(cols_, 0);
    if (i < rank()) {
      if (valuations_[i] == 0) continue;
      y[i] = z_.pow_p(z_.s() - valuations_[i]);
    } else {
      y[i] = 1;
    }
    out.push_back(apply_v(y));
  }
  return out;
}

ChainSolution ChainReduction::solve(std::size_t col) const {
  ChainSolution sol;
  sol.kernel = kernel();
  std::vector<Coeff> y(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Coeff c = rhs_(i, col);
    if (i < rank()) {
      if (z_.valuation(c) < valuations_[i]) return sol;
      y[i] = z_.divide_by_p_power(c, valuations_[i]);
    } else if (c != 0) {
      return sol;
    }
  }
  sol.particular = apply_v(y);
  return sol;
}

ChainSolution chain_solve(const ZMod& z, const Matrix<Coeff>& a, const std::vector<Coeff>& b) {
  Matrix<Coeff> rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return ChainReduction(z, a, std::move(rhs)).solve(0);
}

std::optional<Matrix<Coeff>> invert_matrix(const ZMod& z, Matrix<Coeff> a) {
  const std::size_t n = a.rows();
  Matrix<Coeff> inv(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && !z.is_unit(a(piv, k))) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(piv, k);
    inv.swap_rows(piv, k);
    const Coeff u = z.inverse(a(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = z.mul(a(k, j), u);
      inv(k, j) = z.mul(inv(k, j), u);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Coeff f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = z.sub(a(i, j), z.mul(f, a(k, j)));
        inv(i, j) = z.sub(inv(i, j), z.mul(f, inv(k, j)));
      }
    }
  }
  return inv;
}

}  // namespace lrpc
