#include <doctest.h>

#include <map>

#include "lrpc/errors.hpp"
#include "oracle_checks.hpp"

using namespace lrpc;

namespace {

ExtElem from_ints(const Extension& S, const std::vector<std::int64_t>& c) {
  VecR v(S.m(), S.ring().zero());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = S.ring().from_int(c[i]);
  return S.unrep(v);
}

std::vector<RingPtr> oracle_rings() {
  return {LocalRing::integers_mod(2, 2), LocalRing::integers_mod(3, 2), LocalRing::quotient(2, 2, {0, 0, 1})};
}

}  // namespace

TEST_CASE("example 1: the four solutions") {
  const auto R = golden::example1_ring();
  const auto sol = solve_linear(*R, golden::example1_matrix(*R), golden::example1_rhs(*R));
  REQUIRE(sol.particular);
  const auto all = enumerate_solutions(*R, sol);
  std::set<VecR> expected;
  for (const auto& s : golden::example1_solutions())
    expected.insert({R->from_coords({s[0], s[1]}), R->from_coords({s[2], s[3]})});
  CHECK(std::set<VecR>(all.begin(), all.end()) == expected);
  CHECK(std::set<VecR>(all.begin(), all.end()) ==
        oracle::solutions(*R, golden::example1_matrix(*R), golden::example1_rhs(*R)));
}

TEST_CASE("unsolvable system and kernel") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  const MatR A = MatR::from_rows({{Z4->from_int(2)}});
  CHECK_FALSE(solve_linear(*Z4, A, {Z4->from_int(1)}).particular);
  const auto k = kernel_gens(*Z4, A);
  CHECK(oracle::span(*Z4, 1, k) == oracle::solutions(*Z4, A, {Z4->zero()}));
}

TEST_CASE("appendix A golden values") {
  const auto S = golden::appendix_ext();
  const auto A = golden::appendix_module(*S, golden::appendix_a_gens());
  const auto B = golden::appendix_module(*S, golden::appendix_b_gens());

  const auto& T = A.factorization().reduced_rows(RingOps{S->ring()}, 2);
  const auto& R = S->ring();
  CHECK(T.row_vector(0) == VecR{R.from_int(1), R.from_int(2), R.zero(), R.from_int(1), R.zero()});
  CHECK(T.row_vector(1) == VecR{R.zero(), R.from_int(1), R.zero(), R.from_int(1), R.from_int(2)});

  CHECK(free_module_test(A).is_free);
  CHECK(free_module_test(A).free_rank == 2);
  CHECK(free_module_test(B).is_free);
  CHECK(free_module_test(B).free_rank == 2);
  const auto sum = module_sum(A, B);
  CHECK_FALSE(free_module_test(sum).is_free);
  CHECK(free_module_test(sum).free_rank == 3);
  CHECK(module_rank(sum) == 4);

  const auto I = intersect_with_free(A, B);
  CHECK(module_equal(I, golden::appendix_module(*S, golden::appendix_intersection_gens())));
  CHECK_FALSE(free_module_test(I).is_free);
  CHECK(module_equal(I, intersect(A, B)));

  const auto P = module_product(*S, A, B);
  CHECK_FALSE(free_module_test(P).is_free);
  CHECK(free_rank(P) == 3);
  CHECK(module_equal(P, golden::appendix_module(*S, golden::appendix_product_gens())));
}

TEST_CASE("intersect_with_free rejects a non-free right operand") {
  const auto S = golden::appendix_ext();
  const auto A = golden::appendix_module(*S, golden::appendix_a_gens());
  const auto B = golden::appendix_module(*S, golden::appendix_b_gens());
  try {
    intersect_with_free(A, module_sum(A, B));
    FAIL("non-free operand accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFree);
  }
}

TEST_CASE("brute-force agreement on small rings") {
  for (const auto& R : oracle_rings()) {
    CAPTURE(R->name());
    Rng rng(100);
    const auto S = Extension::create(R, 2);
    for (int i = 0; i < 25; ++i) {
      CHECK(oracle::solve_agrees(*R, rng));
      CHECK(oracle::free_test_agrees(R, rng));
      CHECK(oracle::intersect_agrees(R, rng));
      CHECK(oracle::product_agrees(*S, rng));
    }
  }
}

TEST_CASE("module rank matches the minimal number of generators") {
  for (const auto& R : oracle_rings()) {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
      const Submodule N(R, 2, oracle::random_matrix(*R, 1 + uniform_below(rng, 3), 2, rng));
      const auto target = oracle::span(*R, 2, oracle::rows(N.gens()));
      const auto elems = std::vector<VecR>(target.begin(), target.end());
      // Smallest k such that some k elements of N generate N.
      std::size_t best = target.size() == 1 ? 0 : 3;
      for (std::size_t a = 0; a < elems.size() && best > 1; ++a)
        if (oracle::span(*R, 2, {elems[a]}) == target) best = 1;
      for (std::size_t a = 0; a < elems.size() && best > 2; ++a)
        for (std::size_t b = a + 1; b < elems.size() && best > 2; ++b)
          if (oracle::span(*R, 2, {elems[a], elems[b]}).size() == target.size()) best = 2;
      CHECK(module_rank(N) == best);
    }
  }
}

TEST_CASE("counting independent tuples") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  CHECK(count_independent_tuples(*Z4, 2, 1) == 12);
  CHECK(count_independent_tuples(*Z4, 1, 1) == oracle::count_independent_exhaustive(*Z4, 1, 1));
  CHECK(count_independent_tuples(*Z4, 2, 2) == oracle::count_independent_exhaustive(*Z4, 2, 2));
  CHECK(count_independent_tuples(*Z4, 3, 0) == 1);
  CHECK(count_independent_tuples(*Z4, 2, 3) == 0);
}

TEST_CASE("canonical basis does not depend on the generating set") {
  const auto S = golden::appendix_ext();
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const auto N = sample_free_submodule(*S, 1 + uniform_below(rng, 3), rng);
    MatR mixed(0, S->m());
    for (std::size_t r = 0; r < N.num_gens(); ++r) {
      VecR v(S->m(), S->ring().zero());
      for (std::size_t s = 0; s < N.num_gens(); ++s) {
        const auto c = s == r ? S->ring().random_unit(rng) : S->ring().random(rng);
        for (std::size_t k = 0; k < v.size(); ++k) S->ring().add_to(v[k], S->ring().mul(c, N.gens()(s, k)));
      }
      mixed.append_row(v);
    }
    const Submodule M(S->ring_ptr(), S->m(), mixed);
    if (!M.is_free() || M.pivot_rank() != N.pivot_rank()) continue;
    CHECK(canonical_basis(M) == canonical_basis(N));
  }
}

TEST_CASE("sampled free submodules have the requested rank") {
  const auto S = Extension::create(LocalRing::integers_mod(2, 2), 20);
  Rng rng(1);
  for (std::size_t a = 1; a <= 4; ++a) {
    const auto N = sample_free_submodule(*S, a, rng);
    CHECK(N.is_free());
    CHECK(free_rank(N) == a);
  }
}

TEST_CASE("free rank-1 submodules of Z4^2 are sampled uniformly") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  Rng rng(77);
  std::map<std::vector<VecR>, int> hist;
  const int draws = 6000;
  for (int i = 0; i < draws; ++i) {
    const auto N = sample_free_submodule(Z4, 2, 1, rng);
    hist[oracle::rows(canonical_basis(N))]++;
  }
  // 12 independent vectors, 2 units: 6 modules.
  CHECK(hist.size() == 6);
  double chi2 = 0;
  const double expect = draws / 6.0;
  for (const auto& [k, c] : hist) chi2 += (c - expect) * (c - expect) / expect;
  CHECK(chi2 < 20.5);
}

TEST_CASE("square property") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  const auto S2 = Extension::create(Z4, 2);
  const auto bad = square_property_check(*S2, support(*S2, {S2->one(), S2->theta_power(1)}));
  CHECK_FALSE(bad.has_square_property);
  CHECK(bad.beta2 == 2);

  const auto S = Extension::create(Z4, 20);
  const auto F = support(*S, {S->one(), S->theta_power(1)});
  const auto rep = square_property_check(*S, F);
  CHECK(rep.has_square_property);
  CHECK(rep.beta2 == 3);
  CHECK(rep.suitable_basis.front() == S->one());
  CHECK(rep.i0.has_value());

  const auto single = square_property_check(*S, support(*S, {S->one()}));
  CHECK(single.has_square_property);
  CHECK(single.beta2 == 1);

  try {
    square_property_check(*S, support(*S, {S->theta_power(1)}));
    FAIL("module without 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OneNotInModule);
  }
}

TEST_CASE("recover_factor returns A from AF") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  const auto S = Extension::create(Z4, 20);
  const auto F = support(*S, {S->one(), S->theta_power(1)});
  const auto rep = square_property_check(*S, F);
  Rng rng(5);
  int checked = 0;
  while (checked < 10) {
    const std::size_t a = 1 + uniform_below(rng, 3);
    const auto A = sample_free_submodule(*S, a, rng);
    if (free_rank(module_product(*S, A, module_product(*S, F, F))) != a * rep.beta2) continue;
    CHECK(module_equal(recover_factor(*S, module_product(*S, A, F), rep), A));
    ++checked;
  }
}

TEST_CASE("product examples") {
  const auto S = golden::appendix_ext();
  const auto one = support(*S, {S->one()});
  const auto A = golden::appendix_module(*S, golden::appendix_a_gens());
  CHECK(module_equal(module_product(*S, one, A), A));
  const auto x = from_ints(*S, {0, 1});
  CHECK(module_equal(scale_module(*S, x, A), module_product(*S, support(*S, {x}), A)));
}
