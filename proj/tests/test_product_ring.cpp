#include <doctest.h>

#include "lrpc/bound.hpp"
#include "lrpc/errors.hpp"
#include "lrpc/product_ring.hpp"
#include "lrpc/ring_spec.hpp"

using namespace lrpc;

namespace {

std::vector<std::string> factor_names(const ProductRing& R) {
  std::vector<std::string> out;
  for (const auto& f : R.factors()) out.push_back(f->name());
  return out;
}

// Independence of vectors over Z_N by direct enumeration of all coefficient tuples.
bool independent_mod_n(const std::vector<std::vector<std::int64_t>>& vs, std::int64_t N) {
  const std::size_t r = vs.size(), n = vs.empty() ? 0 : vs[0].size();
  std::vector<std::int64_t> c(r, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < r && ++c[k] == N) c[k++] = 0;
    if (k == r) return true;
    bool zero = true;
    for (std::size_t j = 0; j < n && zero; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += c[i] * vs[i][j];
      zero = acc % N == 0;
    }
    if (zero) return false;
  }
}

// Solves H y = s over S for a full-row-rank H (used to build errors with a prescribed syndrome).
std::vector<ExtElem> preimage(const Extension& S, const MatS& Ht, const std::vector<ExtElem>& s) {
  // Ht is n x (n-k); we need e with sum_j e_j H(i, j) = s_i.
  const ExtOps ops{S};
  const auto f = unit_pivot_factor(ops, Ht.transposed());
  const std::size_t r = f.r;
  std::vector<ExtElem> rhs(r, S.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s.size(); ++j) S.add_mul_to(rhs[i], f.P_inv(i, j), s[j]);
  std::vector<ExtElem> y(f.T.cols(), S.zero());
  for (std::size_t i = r; i-- > 0;) {
    ExtElem acc = rhs[i];
    for (std::size_t k = i + 1; k < r; ++k) S.sub_mul_to(acc, f.T(i, k), y[k]);
    y[i] = acc;
  }
  std::vector<ExtElem> e(f.T.cols(), S.zero());
  for (std::size_t k = 0; k < y.size(); ++k) e[f.perm[k]] = y[k];
  return e;
}

}  // namespace

TEST_CASE("decomposition of Z_N") {
  CHECK(factor_names(ProductRing::integers_mod(6)) == std::vector<std::string>{"Z2", "Z3"});
  CHECK(factor_names(ProductRing::integers_mod(4)) == std::vector<std::string>{"Z4"});
  CHECK(factor_names(ProductRing::integers_mod(12)) == std::vector<std::string>{"Z4", "Z3"});
  CHECK(factor_names(parse_ring_spec("Z 12").ring) == std::vector<std::string>{"Z4", "Z3"});
  CHECK(factor_names(parse_ring_spec("Z4 x GR(9,2)").ring) == std::vector<std::string>{"Z4", "GR(9,2)"});
}

TEST_CASE("projections and CRT") {
  const auto R = ProductRing::integers_mod(6);
  const auto five = R.from_integer(5);
  CHECK(project(five, 0) == R.factor(0).from_int(1));
  CHECK(project(five, 1) == R.factor(1).from_int(2));
  for (std::int64_t x = 0; x < 6; ++x) CHECK(R.to_integer(R.from_integer(x)) == static_cast<std::uint64_t>(x));
  const auto R60 = ProductRing::integers_mod(60);
  for (std::int64_t x = 0; x < 60; ++x) CHECK(R60.to_integer(R60.from_integer(x)) == static_cast<std::uint64_t>(x));
  try {
    project(five, 2);
    FAIL("index out of range accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("projection is a homomorphism on matrices") {
  const auto R = ProductRing::integers_mod(12);
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    Matrix<ProdElem> A(2, 3), B(3, 2);
    for (auto* M : {&A, &B})
      for (std::size_t i = 0; i < M->rows(); ++i)
        for (std::size_t j = 0; j < M->cols(); ++j) (*M)(i, j) = R.from_integer(static_cast<std::int64_t>(uniform_below(rng, 12)));
    Matrix<ProdElem> AB(2, 2, R.zero());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 3; ++k) AB(i, j) = R.add(AB(i, j), R.mul(A(i, k), B(k, j)));
    for (std::size_t f = 0; f < R.rho(); ++f) {
      const RingOps ops{R.factor(f)};
      CHECK(project(AB, f) == multiply(ops, project(A, f), project(B, f)));
    }
  }
}

TEST_CASE("linear independence is decided factor by factor") {
  const auto R = ProductRing::integers_mod(6);
  Rng rng(4);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = 1 + uniform_below(rng, 2);
    std::vector<std::vector<std::int64_t>> vs(r, std::vector<std::int64_t>(2));
    Matrix<ProdElem> M(r, 2);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        vs[i][j] = static_cast<std::int64_t>(uniform_below(rng, 6));
        M(i, j) = R.from_integer(vs[i][j]);
      }
    CHECK(linearly_independent(R, M) == independent_mod_n(vs, 6));
  }
}

TEST_CASE("localized rank") {
  const auto R = ProductRing::integers_mod(6);
  Matrix<ProdElem> one(1, 1, R.one());
  auto lr = localized_rank(R, one);
  CHECK(lr.rank == 1);
  CHECK(lr.free_rank == 1);
  CHECK(lr.is_free);
  Matrix<ProdElem> two(1, 1, R.from_integer(2));
  lr = localized_rank(R, two);
  CHECK(lr.rank == 1);
  CHECK(lr.free_rank == 0);
  CHECK_FALSE(lr.is_free);
  // Rank 1 in the first factor, rank 2 in the second.
  Matrix<ProdElem> mixed(2, 2, R.zero());
  mixed(0, 0) = R.one();
  mixed(1, 1) = R.from_integer(3);
  lr = localized_rank(R, mixed);
  CHECK(lr.rank == 2);
  CHECK(lr.free_rank == 1);
  CHECK_FALSE(lr.is_free);

  const auto Z4 = ProductRing(std::vector<RingPtr>{LocalRing::integers_mod(2, 2)});
  Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    Matrix<ProdElem> g(2, 3);
    MatR local(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        local(i, j) = Z4.factor(0).random(rng);
        g(i, j) = {local(i, j)};
      }
    const Submodule N(Z4.factors()[0], 3, local);
    const auto got = localized_rank(Z4, g);
    CHECK(got.rank == module_rank(N));
    CHECK(got.free_rank == free_rank(N));
    CHECK(got.is_free == N.is_free());
  }
}

TEST_CASE("product codes and Algorithm 2") {
  const auto ring = ProductRing::integers_mod(6);
  const auto ext = ProductExtension::create(ring, 10);
  Rng rng(6);
  const auto code = ProductLrpcCode::generate({10, 4, 2, 2}, ext, rng);
  CHECK(code.rho() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(project(code.H(), j) == code.part(j).H());
    CHECK(code.part(j).flags().unique_decoding);
    CHECK(code.part(j).flags().square_property);
  }
  const auto c = code.random_codeword(rng);
  for (const auto& s : code.syndrome(c))
    for (std::size_t j = 0; j < 2; ++j) CHECK(ext.factor(j)->is_zero(s[j]));
  const auto plain = decode_product(code, c);
  CHECK(plain.success);
  CHECK(plain.codeword == c);

  int good = 0;
  for (int it = 0; it < 40; ++it) {
    std::vector<std::vector<ExtElem>> errs;
    bool conditions = true;
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t t = 1 + uniform_below(rng, 2);
      const auto e = sample_error(*ext.factor(j), 10, t, rng);
      const auto cond = check_decoding_conditions(code.part(j), e.e, t);
      conditions = conditions && cond.syndrome_condition && cond.intersection_condition;
      errs.push_back(e.e);
    }
    std::vector<ProdExtElem> r;
    const auto e = recombine(errs);
    for (std::size_t i = 0; i < 10; ++i) r.push_back(ext.add(c[i], e[i]));
    const auto res = decode_product(code, r);
    if (conditions) {
      ++good;
      CHECK(res.success);
      CHECK(res.codeword == c);
    }
  }
  CHECK(good > 20);
}

TEST_CASE("a failing factor is reported") {
  const auto ring = ProductRing::integers_mod(6);
  const auto ext = ProductExtension::create(ring, 10);
  Rng rng(7);
  const auto code = ProductLrpcCode::generate({10, 4, 2, 2}, ext, rng);
  const auto c = code.random_codeword(rng);
  // Factor 1 gets an error whose syndrome (u, 0, ..., 0) has free rank 1, which lambda = 2 does not divide.
  const Extension& S1 = *ext.factor(1);
  std::vector<ExtElem> s(6, S1.zero());
  s[0] = S1.one();
  const auto e1 = preimage(S1, code.part(1).H().transposed(), s);
  REQUIRE(code.part(1).syndrome(e1) == s);
  const auto e0 = sample_error(*ext.factor(0), 10, 1, rng).e;
  const auto e = recombine(std::vector<std::vector<ExtElem>>{e0, e1});
  std::vector<ProdExtElem> r;
  for (std::size_t i = 0; i < 10; ++i) r.push_back(ext.add(c[i], e[i]));
  const auto res = decode_product(code, r);
  CHECK_FALSE(res.success);
  bool found = false;
  for (const auto& f : res.failures) {
    if (f.factor == 1) {
      found = true;
      CHECK(f.line == FailureLine::Line8);
    }
  }
  CHECK(found);
}

TEST_CASE("mismatched extension degrees are rejected") {
  const auto ring = ProductRing::integers_mod(6);
  try {
    ProductExtension({Extension::create(ring.factors()[0], 4), Extension::create(ring.factors()[1], 5)});
    FAIL("mixed degrees accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfig);
  }
}
