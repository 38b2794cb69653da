#include "lrpc/modlin.hpp"

#include "lrpc/chain_solver.hpp"
#include "lrpc/errors.hpp"

namespace lrpc {

namespace {

// Expansion of an R-matrix to Z/p^s: block (i, j) is the multiplication
// matrix of A(i, j) acting on the coordinates of x_j.
Matrix<Coeff> expand(const LocalRing& R, const MatR& A) {
  const unsigned d = R.dim();
  Matrix<Coeff> out(A.rows() * d, A.cols() * d, 0);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const RingElem& a = A(i, j);
      if (R.is_zero(a)) continue;
      if (d == 1) {
        out(i, j) = a[0];
        continue;
      }
      const Matrix<Coeff> m = R.mult_matrix(a);
      for (unsigned u = 0; u < d; ++u)
        for (unsigned v = 0; v < d; ++v) out(i * d + u, j * d + v) = m(u, v);
    }
  }
  return out;
}

VecR unflatten(const LocalRing& R, const std::vector<Coeff>& flat) {
  const unsigned d = R.dim();
  VecR out(flat.size() / d, R.zero());
  for (std::size_t j = 0; j < out.size(); ++j)
    for (unsigned t = 0; t < d; ++t) out[j][t] = flat[j * d + t];
  return out;
}

void check_matrix(const LocalRing& R, const MatR& A) {
  for (const auto& a : A.data()) R.check(a);
}

bool is_zero_vec(const LocalRing& R, std::span<const RingElem> v) {
  for (const auto& x : v)
    if (!R.is_zero(x)) return false;
  return true;
}

// For each column of rhs (n x c over R, as vectors v), whether x G = v is solvable.
std::vector<bool> solvable_left(const LocalRing& R, const MatR& G, const MatR& rhs_rows) {
  const unsigned d = R.dim();
  const std::size_t n = rhs_rows.cols();
  Matrix<Coeff> rhs(n * d, rhs_rows.rows(), 0);
  for (std::size_t c = 0; c < rhs_rows.rows(); ++c)
    for (std::size_t j = 0; j < n; ++j)
      for (unsigned t = 0; t < d; ++t) rhs(j * d + t, c) = rhs_rows(c, j)[t];
  const MatR gt = G.rows() == 0 ? MatR(n, 0) : G.transposed();
  ChainReduction red(R.zmod(), expand(R, gt), std::move(rhs));
  std::vector<bool> out;
  for (std::size_t c = 0; c < rhs_rows.rows(); ++c) out.push_back(red.solve(c).particular.has_value());
  return out;
}

void check_same(const Submodule& a, const Submodule& b) {
  if (a.ring_ptr() != b.ring_ptr() && a.ring().name() != b.ring().name()) {
    throw Error(ErrorCode::RingMismatch, "submodules over different rings");
  }
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "submodules of different ambient spaces");
}

void check_in_extension(const Extension& S, const Submodule& A) {
  if (A.ambient_dim() != S.m() || A.ring().dim() != S.ring().dim() ||
      (A.ring_ptr() != S.ring_ptr() && A.ring().name() != S.ring().name())) {
    throw Error(ErrorCode::ExtensionMismatch, "submodule does not live in this extension");
  }
}

}  // namespace

SolutionSet solve_linear(const LocalRing& R, const MatR& A, const VecR& b) {
  if (b.size() != A.rows()) throw Error(ErrorCode::AmbientMismatch, "right hand side length differs from row count");
  check_matrix(R, A);
  for (const auto& x : b) R.check(x);
  const unsigned d = R.dim();
  Matrix<Coeff> rhs(A.rows() * d, 1, 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (unsigned t = 0; t < d; ++t) rhs(i * d + t, 0) = b[i][t];
  ChainReduction red(R.zmod(), expand(R, A), std::move(rhs));
  ChainSolution sol = red.solve(0);
  SolutionSet out;
  if (sol.particular) out.particular = unflatten(R, *sol.particular);
  for (const auto& k : sol.kernel) out.kernel_gens.push_back(unflatten(R, k));
  return out;
}

std::vector<VecR> kernel_gens(const LocalRing& R, const MatR& A) {
  ChainReduction red(R.zmod(), expand(R, A), Matrix<Coeff>(A.rows() * R.dim(), 0));
  std::vector<VecR> out;
  for (const auto& k : red.kernel()) out.push_back(unflatten(R, k));
  return out;
}

RingFactorization unit_pivot_factor(const LocalRing& R, const MatR& A, bool track_p) {
  return unit_pivot_factor(RingOps{R}, A, track_p);
}

std::size_t residue_rank(const LocalRing& R, const MatR& A) {
  Matrix<FqElem> res(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) res(i, j) = R.residue(A(i, j));
  return R.residue_field().rank(std::move(res));
}

Submodule::Submodule(RingPtr ring, std::size_t ambient, MatR gens)
    : ring_(std::move(ring)), n_(ambient), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  if (gens_.rows() == 0) gens_ = MatR(0, n_);
  if (gens_.cols() != n_) throw Error(ErrorCode::AmbientMismatch, "generator length differs from ambient dimension");
  check_matrix(*ring_, gens_);
}

Submodule Submodule::zero(RingPtr ring, std::size_t ambient) { return Submodule(std::move(ring), ambient, MatR(0, ambient)); }

Submodule Submodule::full(RingPtr ring, std::size_t ambient) {
  MatR id = identity_matrix(RingOps{*ring}, ambient);
  return Submodule(std::move(ring), ambient, std::move(id));
}

Submodule Submodule::from_rows(RingPtr ring, std::size_t ambient, const std::vector<VecR>& rows) {
  MatR m(0, ambient);
  for (const auto& r : rows) {
    if (r.size() != ambient) throw Error(ErrorCode::AmbientMismatch, "generator length differs from ambient dimension");
    m.append_row(r);
  }
  return Submodule(std::move(ring), ambient, std::move(m));
}

const RingFactorization& Submodule::factorization() const {
  std::call_once(cache_->once, [this] { cache_->factorization = unit_pivot_factor(*ring_, gens_, true); });
  return *cache_->factorization;
}

bool Submodule::is_free() const { return factorization().t3_zero(RingOps{*ring_}); }

bool Submodule::is_zero() const { return is_zero_vec(*ring_, gens_.data()); }

MatR Submodule::basis() const {
  if (!is_free()) throw Error(ErrorCode::NotFree, "module is not free");
  const auto& f = factorization();
  return f.reduced_rows(RingOps{*ring_}, f.r);
}

Submodule Submodule::simplified() const {
  if (is_free()) return Submodule(ring_, n_, basis());
  MatR m(0, n_);
  for (std::size_t i = 0; i < gens_.rows(); ++i)
    if (!is_zero_vec(*ring_, gens_.row(i))) m.append_row(gens_.row(i));
  return Submodule(ring_, n_, std::move(m));
}

bool Submodule::contains(const VecR& v) const {
  if (v.size() != n_) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  MatR rows(0, n_);
  rows.append_row(v);
  return solvable_left(*ring_, gens_, rows)[0];
}

bool Submodule::contains(const Submodule& other) const {
  check_same(*this, other);
  if (other.num_gens() == 0) return true;
  for (bool ok : solvable_left(*ring_, gens_, other.gens_))
    if (!ok) return false;
  return true;
}

FreeModuleTest free_module_test(const Submodule& N) { return {N.pivot_rank(), N.is_free()}; }

std::size_t free_rank(const Submodule& N) { return residue_rank(N.ring(), N.gens()); }

std::size_t module_rank(const Submodule& N) {
  const LocalRing& R = N.ring();
  std::vector<VecR> gens;
  for (std::size_t i = 0; i < N.num_gens(); ++i)
    if (!is_zero_vec(R, N.gens().row(i))) gens.push_back(N.gen(i));
  // Generators of m * N.
  std::vector<VecR> mgens;
  for (const auto& g : gens) {
    for (const auto& z : R.maximal_ideal_gens()) {
      VecR h;
      for (const auto& x : g) h.push_back(R.mul(z, x));
      if (!is_zero_vec(R, h)) mgens.push_back(std::move(h));
    }
  }
  std::vector<bool> kept(gens.size(), true);
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<VecR> others = mgens;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i && kept[j]) others.push_back(gens[j]);
    if (Submodule::from_rows(N.ring_ptr(), N.ambient_dim(), others).contains(gens[i])) kept[i] = false;
  }
  std::size_t r = 0;
  for (bool k : kept) r += k;
  return r;
}

Submodule module_sum(const Submodule& a, const Submodule& b) {
  check_same(a, b);
  MatR m = a.gens();
  for (std::size_t i = 0; i < b.num_gens(); ++i) m.append_row(b.gens().row(i));
  return Submodule(a.ring_ptr(), a.ambient_dim(), std::move(m));
}

bool module_equal(const Submodule& a, const Submodule& b) { return a.contains(b) && b.contains(a); }

Submodule intersect_with_free(const Submodule& N, const Submodule& G) {
  check_same(N, G);
  if (!G.is_free()) throw Error(ErrorCode::NotFree, "intersect_with_free needs a free second operand");
  const LocalRing& R = N.ring();
  const std::size_t n = N.ambient_dim();
  const std::size_t r = G.pivot_rank();
  if (r == 0 || N.num_gens() == 0) return Submodule::zero(N.ring_ptr(), n);
  if (r == n) return N;
  const RingOps ops{R};
  auto P = full_column_rank_transform(ops, G.basis().transposed());
  if (!P) throw Error(ErrorCode::RankDeficient, "basis of a free module without unit pivots");
  // v lies in G iff rows r.. of P annihilate v.
  const std::size_t k = N.num_gens();
  MatR M(n - r, k, R.zero());
  for (std::size_t a = 0; a < n - r; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      RingElem acc = R.zero();
      for (std::size_t j = 0; j < n; ++j) {
        if (R.is_zero((*P)(r + a, j))) continue;
        R.sub_mul_to(acc, (*P)(r + a, j), N.gens()(i, j));
      }
      M(a, i) = R.neg(acc);
    }
  }
  MatR out(0, n);
  for (const VecR& x : kernel_gens(R, M)) {
    VecR v(n, R.zero());
    for (std::size_t i = 0; i < k; ++i) {
      if (R.is_zero(x[i])) continue;
      const RingElem neg = R.neg(x[i]);
      for (std::size_t j = 0; j < n; ++j) R.sub_mul_to(v[j], neg, N.gens()(i, j));
    }
    if (!is_zero_vec(R, v)) out.append_row(v);
  }
  return Submodule(N.ring_ptr(), n, std::move(out)).simplified();
}

Submodule intersect(const Submodule& N, const Submodule& G) {
  check_same(N, G);
  const LocalRing& R = N.ring();
  const std::size_t n = N.ambient_dim(), k1 = N.num_gens(), k2 = G.num_gens();
  if (k1 == 0 || k2 == 0) return Submodule::zero(N.ring_ptr(), n);
  MatR M(n, k1 + k2, R.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k1; ++i) M(j, i) = N.gens()(i, j);
    for (std::size_t i = 0; i < k2; ++i) M(j, k1 + i) = R.neg(G.gens()(i, j));
  }
  MatR out(0, n);
  for (const VecR& x : kernel_gens(R, M)) {
    VecR v(n, R.zero());
    for (std::size_t i = 0; i < k1; ++i) {
      if (R.is_zero(x[i])) continue;
      const RingElem neg = R.neg(x[i]);
      for (std::size_t j = 0; j < n; ++j) R.sub_mul_to(v[j], neg, N.gens()(i, j));
    }
    if (!is_zero_vec(R, v)) out.append_row(v);
  }
  return Submodule(N.ring_ptr(), n, std::move(out)).simplified();
}

Submodule intersect_any(const Submodule& N, const Submodule& G) {
  if (G.is_free()) return intersect_with_free(N, G);
  if (N.is_free()) return intersect_with_free(G, N);
  return intersect(N, G);
}

Submodule support(const Extension& S, const std::vector<ExtElem>& u) {
  MatR m(0, S.m());
  for (const auto& x : u) {
    S.check(x);
    m.append_row(S.vec_rep(x));
  }
  return Submodule(S.ring_ptr(), S.m(), std::move(m));
}

std::vector<ExtElem> generator_elements(const Extension& S, const Submodule& A) {
  check_in_extension(S, A);
  std::vector<ExtElem> out;
  for (std::size_t i = 0; i < A.num_gens(); ++i) out.push_back(S.unrep(A.gen(i)));
  return out;
}

Submodule module_product(const Extension& S, const Submodule& A, const Submodule& B) {
  check_in_extension(S, A);
  check_in_extension(S, B);
  const auto a = generator_elements(S, A);
  const auto b = generator_elements(S, B);
  std::vector<ExtElem> prods;
  for (const auto& x : a)
    for (const auto& y : b) prods.push_back(S.mul(x, y));
  return support(S, prods);
}

Submodule scale_module(const Extension& S, const ExtElem& c, const Submodule& A) {
  check_in_extension(S, A);
  std::vector<ExtElem> prods;
  for (const auto& x : generator_elements(S, A)) prods.push_back(S.mul(c, x));
  return support(S, prods);
}

boost::multiprecision::cpp_int count_independent_tuples(const LocalRing& R, std::size_t n, std::size_t r) {
  using boost::multiprecision::cpp_int;
  if (r > n) return 0;
  const cpp_int q = R.q();
  cpp_int out = boost::multiprecision::pow(q, static_cast<unsigned>((R.upsilon() - 1) * n * r));
  const cpp_int qn = boost::multiprecision::pow(q, static_cast<unsigned>(n));
  for (std::size_t i = 0; i < r; ++i) out *= qn - boost::multiprecision::pow(q, static_cast<unsigned>(i));
  return out;
}

MatR canonical_basis(const Submodule& N) {
  MatR b = N.basis();
  const auto pivots = unit_rref(RingOps{N.ring()}, b);
  return b.row_block(0, pivots.size());
}

Submodule sample_free_submodule(RingPtr ring, std::size_t n, std::size_t alpha, Rng& rng) {
  if (alpha > n) throw Error(ErrorCode::BadRank, "rank exceeds ambient dimension");
  if (alpha == 0) return Submodule::zero(ring, n);
  for (;;) {
    MatR a(alpha, n);
    for (std::size_t i = 0; i < alpha; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = ring->random(rng);
    if (residue_rank(*ring, a) != alpha) continue;
    Submodule sub(ring, n, std::move(a));
    return Submodule(ring, n, canonical_basis(sub));
  }
}

Submodule sample_free_submodule(const Extension& S, std::size_t alpha, Rng& rng) {
  return sample_free_submodule(S.ring_ptr(), S.m(), alpha, rng);
}

SquarePropertyReport square_property_check(const Extension& S, const Submodule& F) {
  check_in_extension(S, F);
  if (!F.is_free()) throw Error(ErrorCode::NotFree, "square property is defined for free modules");
  const LocalRing& R = S.ring();
  const VecR one = S.vec_rep(S.one());
  if (!F.contains(one)) throw Error(ErrorCode::OneNotInModule, "1 is not in the module");
  // The given generators are a basis when their number equals the free rank.
  const MatR basis = F.num_gens() == F.pivot_rank() ? F.gens() : F.basis();
  const std::size_t lambda = basis.rows();

  // Exchange 1 into the basis at a position with a unit coefficient.
  auto sol = solve_linear(R, basis.transposed(), one);
  std::size_t swap_at = lambda;
  for (std::size_t i = 0; i < lambda && swap_at == lambda; ++i)
    if (R.is_unit((*sol.particular)[i])) swap_at = i;
  if (swap_at == lambda) throw Error(ErrorCode::OneNotInModule, "1 is not part of any basis");
  SquarePropertyReport report;
  report.suitable_basis.push_back(S.one());
  for (std::size_t i = 0; i < lambda; ++i)
    if (i != swap_at) report.suitable_basis.push_back(S.unrep(basis.row_vector(i)));

  if (lambda == 1) {
    report.has_square_property = true;
    report.beta2 = 1;
    return report;
  }
  const Submodule B = support(S, report.suitable_basis);
  const Submodule B2 = module_product(S, B, B);
  const std::size_t full = lambda * (lambda + 1) / 2;
  if (free_rank(B2) == full) {
    report.has_square_property = true;
    report.beta2 = full;
    report.i0 = 2;
    return report;
  }
  report.beta2 = module_rank(B2);
  if (!B2.is_free()) return report;
  const Submodule Bprime =
      support(S, std::vector<ExtElem>(report.suitable_basis.begin() + 1, report.suitable_basis.end()));
  for (std::size_t i0 = 2; i0 <= lambda; ++i0) {
    const Submodule scaled = scale_module(S, report.suitable_basis[i0 - 1], Bprime);
    if (intersect_with_free(scaled, B).is_zero()) {
      report.has_square_property = true;
      report.i0 = i0;
      return report;
    }
  }
  return report;
}

Submodule recover_factor(const Extension& S, const Submodule& AB, const SquarePropertyReport& report) {
  check_in_extension(S, AB);
  if (!report.has_square_property || report.suitable_basis.empty() || !(report.suitable_basis[0] == S.one())) {
    throw Error(ErrorCode::NoSuitableBasis, "recover_factor needs a suitable basis");
  }
  Submodule cur = AB;
  for (std::size_t i = 1; i < report.suitable_basis.size(); ++i) {
    const ExtElem& b = report.suitable_basis[i];
    if (!S.is_unit(b)) throw Error(ErrorCode::NoSuitableBasis, "suitable basis element is not invertible");
    cur = intersect_any(cur, scale_module(S, S.inverse(b), AB));
  }
  return cur.simplified();
}

}  // namespace lrpc
