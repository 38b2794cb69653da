#pragma once

// Brute-force reference implementations. They only use ring addition and
// multiplication plus exhaustive enumeration, never the library's elimination code.

#include <cstdint>
#include <set>
#include <vector>

#include "lrpc/modlin.hpp"

namespace oracle {

using lrpc::LocalRing;
using lrpc::MatR;
using lrpc::RingElem;
using lrpc::VecR;

inline std::vector<RingElem> all_elements(const LocalRing& R) {
  std::vector<RingElem> out;
  for (std::uint64_t i = 0; i < R.cardinality(); ++i) out.push_back(R.element(i));
  return out;
}

/// Every vector of R^n.
inline std::vector<VecR> all_vectors(const LocalRing& R, std::size_t n) {
  const auto elems = all_elements(R);
  std::vector<VecR> out{VecR{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VecR> next;
    for (const auto& v : out)
      for (const auto& e : elems) {
        VecR w = v;
        w.push_back(e);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline VecR axpy(const LocalRing& R, const VecR& y, const RingElem& a, const VecR& x) {
  VecR out = y;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(out[i], R.mul(a, x[i]));
  return out;
}

/// The set of all R-combinations of the given vectors in R^n.
inline std::set<VecR> span(const LocalRing& R, std::size_t n, const std::vector<VecR>& gens) {
  const auto elems = all_elements(R);
  std::set<VecR> out{VecR(n, R.zero())};
  for (const auto& g : gens) {
    std::set<VecR> next;
    for (const auto& v : out)
      for (const auto& a : elems) next.insert(axpy(R, v, a, g));
    out = std::move(next);
  }
  return out;
}

inline std::vector<VecR> rows(const MatR& m) {
  std::vector<VecR> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
  return out;
}

inline VecR mat_vec(const LocalRing& R, const MatR& A, const VecR& x) {
  VecR out(A.rows(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i] = R.add(out[i], R.mul(A(i, j), x[j]));
  return out;
}

/// All x with A x = b.
inline std::set<VecR> solutions(const LocalRing& R, const MatR& A, const VecR& b) {
  std::set<VecR> out;
  for (const auto& x : all_vectors(R, A.cols()))
    if (mat_vec(R, A, x) == b) out.insert(x);
  return out;
}

/// |R v| = |R|, i.e. no nonzero c kills v.
inline bool torsion_free(const LocalRing& R, const VecR& v) {
  for (const auto& c : all_elements(R)) {
    if (R.is_zero(c)) continue;
    bool killed = true;
    for (const auto& x : v) killed = killed && R.is_zero(R.mul(c, x));
    if (killed) return false;
  }
  return true;
}

/// Vectors are independent iff their span has |R|^r elements.
inline bool independent(const LocalRing& R, std::size_t n, const std::vector<VecR>& vs) {
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) expect *= R.cardinality();
  return span(R, n, vs).size() == expect;
}

struct FreeInfo {
  std::size_t free_rank = 0;
  bool is_free = false;
};

/// Free rank and freeness of N inside R^n for n <= 2. A free submodule of
/// rank r has |R|^r elements, so rank 2 means N = R^2, and N is free of rank
/// r iff it contains a free rank-r submodule and |N| = |R|^r.
inline FreeInfo free_info(const LocalRing& R, std::size_t n, const std::set<VecR>& N) {
  if (N.size() == 1) return {0, true};
  if (n == 2 && N.size() == R.cardinality() * R.cardinality()) return {2, true};
  for (const auto& v : N)
    if (torsion_free(R, v)) return {1, N.size() == R.cardinality()};
  return {0, false};
}

inline std::set<VecR> intersection(const std::set<VecR>& a, const std::set<VecR>& b) {
  std::set<VecR> out;
  for (const auto& v : a)
    if (b.count(v)) out.insert(v);
  return out;
}

/// Number of r-tuples in R^n that are linearly independent, by exhaustive
/// enumeration of all tuples.
inline std::uint64_t count_independent_exhaustive(const LocalRing& R, std::size_t n, std::size_t r) {
  const auto vecs = all_vectors(R, n);
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    std::vector<VecR> tuple;
    for (auto i : idx) tuple.push_back(vecs[i]);
    if (independent(R, n, tuple)) ++count;
    std::size_t k = 0;
    while (k < r && ++idx[k] == vecs.size()) idx[k++] = 0;
    if (k == r) break;
  }
  return count;
}

/// Number of v in R^n such that (e_1, ..., e_i, v) is independent: the
/// combination sum a_j e_j + c v vanishes only for c = 0 iff no nonzero c
/// kills the last n - i coordinates of v.
inline std::uint64_t count_extensions_of_standard_prefix(const LocalRing& R, std::size_t n, std::size_t i) {
  std::uint64_t tail_count = 0;
  for (const auto& tail : all_vectors(R, n - i))
    if (torsion_free(R, tail)) ++tail_count;
  std::uint64_t head = 1;
  for (std::size_t j = 0; j < i; ++j) head *= R.cardinality();
  return head * tail_count;
}

/// Span of {a b : a in A, b in B} for element sets of S given as coordinate vectors.
inline std::set<VecR> product_span(const lrpc::Extension& S, const std::set<VecR>& A, const std::set<VecR>& B) {
  const LocalRing& R = S.ring();
  std::set<VecR> out{VecR(S.m(), R.zero())};
  const auto elems = all_elements(R);
  for (const auto& a : A) {
    const auto ea = S.unrep(a);
    for (const auto& b : B) {
      const VecR p = S.vec_rep(S.mul(ea, S.unrep(b)));
      if (out.count(p)) continue;
      std::set<VecR> next;
      for (const auto& v : out)
        for (const auto& c : elems) next.insert(axpy(R, v, c, p));
      out = std::move(next);
    }
  }
  return out;
}

/// Random entry, biased towards the maximal ideal so that non-free modules are common.
inline RingElem random_entry(const LocalRing& R, lrpc::Rng& rng) {
  RingElem x = R.random(rng);
  if (lrpc::uniform_below(rng, 2) == 0) {
    const auto gens = R.maximal_ideal_gens();
    x = R.mul(x, gens[lrpc::uniform_below(rng, gens.size())]);
  }
  return x;
}

inline MatR random_matrix(const LocalRing& R, std::size_t rows, std::size_t cols, lrpc::Rng& rng) {
  MatR m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_entry(R, rng);
  return m;
}

}  // namespace oracle
