#pragma once

#include <optional>
#include <vector>

#include "lrpc/extension.hpp"
#include "lrpc/local_ring.hpp"
#include "lrpc/matrix.hpp"

namespace lrpc {

/// Element operations over R, in the shape the elimination templates expect.
struct RingOps {
  using Elem = RingElem;
  const LocalRing& R;

  Elem zero() const { return R.zero(); }
  Elem one() const { return R.one(); }
  bool is_zero(const Elem& a) const { return R.is_zero(a); }
  bool is_unit(const Elem& a) const { return R.is_unit(a); }
  Elem inverse(const Elem& a) const { return R.inverse(a); }
  Elem mul(const Elem& a, const Elem& b) const { return R.mul(a, b); }
  Elem add(const Elem& a, const Elem& b) const { return R.add(a, b); }
  Elem neg(const Elem& a) const { return R.neg(a); }
  void sub_mul_to(Elem& acc, const Elem& a, const Elem& b) const { R.sub_mul_to(acc, a, b); }
};

/// Element operations over the extension S.
struct ExtOps {
  using Elem = ExtElem;
  const Extension& S;

  Elem zero() const { return S.zero(); }
  Elem one() const { return S.one(); }
  bool is_zero(const Elem& a) const { return S.is_zero(a); }
  bool is_unit(const Elem& a) const { return S.is_unit(a); }
  Elem inverse(const Elem& a) const { return S.inverse(a); }
  Elem mul(const Elem& a, const Elem& b) const { return S.mul(a, b); }
  Elem add(const Elem& a, const Elem& b) const { return S.add(a, b); }
  Elem neg(const Elem& a) const { return S.neg(a); }
  void sub_mul_to(Elem& acc, const Elem& a, const Elem& b) const { S.sub_mul_to(acc, a, b); }
};

template <class Ops>
Matrix<typename Ops::Elem> identity_matrix(const Ops& ops, std::size_t n) {
  Matrix<typename Ops::Elem> m(n, n, ops.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ops.one();
  return m;
}

template <class Ops>
Matrix<typename Ops::Elem> multiply(const Ops& ops, const Matrix<typename Ops::Elem>& a,
                                    const Matrix<typename Ops::Elem>& b) {
  Matrix<typename Ops::Elem> out(a.rows(), b.cols(), ops.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ops.is_zero(a(i, k))) continue;
      const auto neg = ops.neg(a(i, k));
      for (std::size_t j = 0; j < b.cols(); ++j) ops.sub_mul_to(out(i, j), neg, b(k, j));
    }
  }
  return out;
}

/// A = P * T * Q with T = [T1 T2; 0 T3], T1 upper uni-triangular r x r and
/// every entry of T3 a non-unit. Q is the column permutation with perm[k] the
/// original column placed at position k of T. P_inv is the inverse of P.
template <class Ops>
struct TriFactorization {
  using Elem = typename Ops::Elem;
  Matrix<Elem> P;
  Matrix<Elem> P_inv;
  Matrix<Elem> T;
  std::vector<std::size_t> perm;
  std::size_t r = 0;

  /// T3 = 0.
  bool t3_zero(const Ops& ops) const {
    for (std::size_t i = r; i < T.rows(); ++i)
      for (std::size_t j = r; j < T.cols(); ++j)
        if (!ops.is_zero(T(i, j))) return false;
    return true;
  }
  /// Permutation matrix Q with A = P * T * Q.
  Matrix<Elem> Q(const Ops& ops) const {
    Matrix<Elem> q(perm.size(), perm.size(), ops.zero());
    for (std::size_t k = 0; k < perm.size(); ++k) q(k, perm[k]) = ops.one();
    return q;
  }
  /// Rows of P^{-1} * A, i.e. T with the columns returned to their places.
  Matrix<Elem> reduced_rows(const Ops& ops, std::size_t count) const {
    Matrix<Elem> out(count, T.cols(), ops.zero());
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t k = 0; k < T.cols(); ++k) out(i, perm[k]) = T(i, k);
    return out;
  }
};

/// Unit-pivot reduction: repeatedly take the leftmost remaining column that
/// has a unit in the remaining rows, move it and that row into pivot position,
/// scale the pivot to 1 and clear the entries below it.
template <class Ops>
TriFactorization<Ops> unit_pivot_factor(const Ops& ops, Matrix<typename Ops::Elem> a, bool track_p = true) {
  using Elem = typename Ops::Elem;
  TriFactorization<Ops> f;
  const std::size_t rows = a.rows(), cols = a.cols();
  f.perm.resize(cols);
  for (std::size_t k = 0; k < cols; ++k) f.perm[k] = k;
  if (track_p) {
    f.P = identity_matrix(ops, rows);
    f.P_inv = identity_matrix(ops, rows);
  }
  std::size_t h = 0;
  while (h < rows && h < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = h; j < cols && pr == rows; ++j) {
      for (std::size_t i = h; i < rows; ++i) {
        if (ops.is_unit(a(i, j))) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    a.swap_rows(pr, h);
    a.swap_cols(pc, h);
    std::swap(f.perm[pc], f.perm[h]);
    if (track_p) {
      f.P_inv.swap_rows(pr, h);
      f.P.swap_cols(pr, h);
    }
    const Elem pivot = a(h, h);
    const Elem inv = ops.inverse(pivot);
    for (std::size_t j = h; j < cols; ++j) a(h, j) = ops.mul(a(h, j), inv);
    if (track_p) {
      for (std::size_t j = 0; j < rows; ++j) f.P_inv(h, j) = ops.mul(f.P_inv(h, j), inv);
      for (std::size_t i = 0; i < rows; ++i) f.P(i, h) = ops.mul(f.P(i, h), pivot);
    }
    for (std::size_t i = h + 1; i < rows; ++i) {
      if (ops.is_zero(a(i, h))) continue;
      const Elem c = a(i, h);
      for (std::size_t j = h; j < cols; ++j) ops.sub_mul_to(a(i, j), c, a(h, j));
      if (track_p) {
        for (std::size_t j = 0; j < rows; ++j) ops.sub_mul_to(f.P_inv(i, j), c, f.P_inv(h, j));
        // P <- P * (I + c e_i e_h^T): column h += c * column i.
        const Elem negc = ops.neg(c);
        for (std::size_t k = 0; k < rows; ++k) ops.sub_mul_to(f.P(k, h), negc, f.P(k, i));
      }
    }
    ++h;
  }
  f.r = h;
  f.T = std::move(a);
  return f;
}

/// For A (a x b) whose columns are linearly independent (free column rank b),
/// returns an invertible P with P * A = [I_b; 0]; nullopt when some column
/// has no unit pivot left.
template <class Ops>
std::optional<Matrix<typename Ops::Elem>> full_column_rank_transform(const Ops& ops, Matrix<typename Ops::Elem> a) {
  using Elem = typename Ops::Elem;
  const std::size_t rows = a.rows(), cols = a.cols();
  if (cols > rows) return std::nullopt;
  Matrix<Elem> p = identity_matrix(ops, rows);
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t pr = k;
    while (pr < rows && !ops.is_unit(a(pr, k))) ++pr;
    if (pr == rows) return std::nullopt;
    a.swap_rows(pr, k);
    p.swap_rows(pr, k);
    const Elem inv = ops.inverse(a(k, k));
    for (std::size_t j = k; j < cols; ++j) a(k, j) = ops.mul(a(k, j), inv);
    for (std::size_t j = 0; j < rows; ++j) p(k, j) = ops.mul(p(k, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || ops.is_zero(a(i, k))) continue;
      const Elem c = a(i, k);
      for (std::size_t j = k; j < cols; ++j) ops.sub_mul_to(a(i, j), c, a(k, j));
      for (std::size_t j = 0; j < rows; ++j) ops.sub_mul_to(p(i, j), c, p(k, j));
    }
  }
  return p;
}

/// Reduced row echelon form with unit pivots and no column exchanges; for a
/// free module the result is the same for every generating set. Returns the
/// pivot columns; rows past the pivots are left as they fall out.
template <class Ops>
std::vector<std::size_t> unit_rref(const Ops& ops, Matrix<typename Ops::Elem>& a) {
  using Elem = typename Ops::Elem;
  std::vector<std::size_t> pivots;
  std::size_t h = 0;
  for (std::size_t col = 0; col < a.cols() && h < a.rows(); ++col) {
    std::size_t pr = h;
    while (pr < a.rows() && !ops.is_unit(a(pr, col))) ++pr;
    if (pr == a.rows()) continue;
    a.swap_rows(pr, h);
    const Elem inv = ops.inverse(a(h, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a(h, j) = ops.mul(a(h, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == h || ops.is_zero(a(i, col))) continue;
      const Elem c = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) ops.sub_mul_to(a(i, j), c, a(h, j));
    }
    pivots.push_back(col);
    ++h;
  }
  return pivots;
}

}  // namespace lrpc
