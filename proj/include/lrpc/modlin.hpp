#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lrpc/elimination.hpp"
#include "lrpc/extension.hpp"
#include "lrpc/local_ring.hpp"

namespace lrpc {

using MatR = Matrix<RingElem>;
using VecR = std::vector<RingElem>;
using MatS = Matrix<ExtElem>;
using RingFactorization = TriFactorization<RingOps>;

/// All solutions of A x = b: particular + R-span(kernel_gens), or none.
struct SolutionSet {
  std::optional<VecR> particular;
  std::vector<VecR> kernel_gens;
};

/// Solves A x = b over R by expanding every unknown into its coordinates over
/// Z/p^s and diagonalizing the expanded system.
SolutionSet solve_linear(const LocalRing& R, const MatR& A, const VecR& b);
/// Generators of {x : A x = 0}.
std::vector<VecR> kernel_gens(const LocalRing& R, const MatR& A);

RingFactorization unit_pivot_factor(const LocalRing& R, const MatR& A, bool track_p = true);

/// F_q-rank of the residue image of the rows of A.
std::size_t residue_rank(const LocalRing& R, const MatR& A);

/// Finitely generated submodule of R^n given by the rows of a generator
/// matrix. Generators are immutable; the unit-pivot factorization is computed
/// once on first use and shared between copies.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t ambient, MatR gens);
  static Submodule zero(RingPtr ring, std::size_t ambient);
  static Submodule full(RingPtr ring, std::size_t ambient);
  static Submodule from_rows(RingPtr ring, std::size_t ambient, const std::vector<VecR>& rows);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const LocalRing& ring() const noexcept { return *ring_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  const MatR& gens() const noexcept { return gens_; }
  std::size_t num_gens() const noexcept { return gens_.rows(); }
  VecR gen(std::size_t i) const { return gens_.row_vector(i); }

  const RingFactorization& factorization() const;
  /// Number of unit pivots of the factorization.
  std::size_t pivot_rank() const { return factorization().r; }
  bool is_free() const;
  bool is_zero() const;
  /// Basis of a free module (first r rows of P^{-1} * gens); throws NotFree.
  MatR basis() const;
  /// The same module with a basis as generators when free, zero rows dropped otherwise.
  Submodule simplified() const;

  bool contains(const VecR& v) const;
  bool contains(const Submodule& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<RingFactorization> factorization;
  };

  RingPtr ring_;
  std::size_t n_;
  MatR gens_;
  std::shared_ptr<Cache> cache_;
};

struct FreeModuleTest {
  std::size_t free_rank;
  bool is_free;
};

FreeModuleTest free_module_test(const Submodule& N);
/// Residue rank of the generators: frk(N) = rk(Psi(N)).
std::size_t free_rank(const Submodule& N);
/// Minimal number of generators (greedy elimination modulo m*N, last first).
std::size_t module_rank(const Submodule& N);

Submodule module_sum(const Submodule& a, const Submodule& b);
bool module_equal(const Submodule& a, const Submodule& b);

/// N intersected with a free module G via a transform G~ * T = (I_r | 0).
Submodule intersect_with_free(const Submodule& N, const Submodule& G);
/// General intersection: kernel of (x, y) -> x N - y G.
Submodule intersect(const Submodule& N, const Submodule& G);
/// intersect_with_free when either side is free, intersect otherwise.
Submodule intersect_any(const Submodule& N, const Submodule& G);

/// The R-span of the given extension elements, as a submodule of R^m.
Submodule support(const Extension& S, const std::vector<ExtElem>& u);
std::vector<ExtElem> generator_elements(const Extension& S, const Submodule& A);
/// The module generated by all products a * b of generators.
Submodule module_product(const Extension& S, const Submodule& A, const Submodule& B);
/// c * A
Submodule scale_module(const Extension& S, const ExtElem& c, const Submodule& A);

/// q^{(upsilon-1) n r} * prod_{i<r} (q^n - q^i).
/// Zero when r > n.
boost::multiprecision::cpp_int count_independent_tuples(const LocalRing& R, std::size_t n, std::size_t r);

/// Reduced unit-pivot basis of a free module; identical for every generating
/// set of the same module. Throws NotFree.
MatR canonical_basis(const Submodule& N);

/// Uniformly random free submodule of rank alpha of R^n.
Submodule sample_free_submodule(RingPtr ring, std::size_t n, std::size_t alpha, Rng& rng);
Submodule sample_free_submodule(const Extension& S, std::size_t alpha, Rng& rng);

struct SquarePropertyReport {
  bool has_square_property = false;
  /// Basis of F with suitable_basis[0] = 1.
  std::vector<ExtElem> suitable_basis;
  std::size_t beta2 = 0;
  /// 1-based witness index in {2, ..., beta}.
  std::optional<std::size_t> i0;
};

SquarePropertyReport square_property_check(const Extension& S, const Submodule& F);
/// The intersection of b_i^{-1} * AB over the suitable basis b_1, ..., b_beta.
Submodule recover_factor(const Extension& S, const Submodule& AB, const SquarePropertyReport& report);

}  // namespace lrpc
