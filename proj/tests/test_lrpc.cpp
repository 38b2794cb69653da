#include <doctest.h>

#include <map>

#include "lrpc/errors.hpp"
#include "lrpc/lrpc.hpp"
#include "oracles.hpp"

using namespace lrpc;

namespace {

struct Setup {
  ExtPtr S;
  LrpcCode code;
};

Setup paper_setup(std::uint64_t seed = 1) {
  auto S = Extension::create(LocalRing::integers_mod(2, 2), 20);
  Rng rng(seed);
  return {S, LrpcCode::generate({20, 8, 2, 4}, S, rng)};
}

std::vector<ExtElem> add(const Extension& S, const std::vector<ExtElem>& a, const std::vector<ExtElem>& b) {
  std::vector<ExtElem> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(S.add(a[i], b[i]));
  return out;
}

}  // namespace

TEST_CASE("generated code has all properties") {
  auto [S, code] = paper_setup();
  CHECK(code.flags().unique_decoding);
  CHECK(code.flags().maximal_row_span);
  CHECK(code.flags().unity);
  CHECK(code.flags().square_property);
  CHECK(code.H().rows() == 12);
  CHECK(code.H_ext().rows() == 24);
  CHECK(code.H_ext().cols() == 20);
  CHECK(code.f_basis().front() == S->one());
  const Submodule cols(S->ring_ptr(), 24, code.H_ext().transposed());
  CHECK(free_module_test(cols).is_free);
  CHECK(free_module_test(cols).free_rank == 20);
  for (std::size_t i = 0; i < code.f_basis().size(); ++i)
    CHECK(S->mul(code.f_basis()[i], code.f_inverse()[i]) == S->one());
}

TEST_CASE("parameter validation") {
  auto S = Extension::create(LocalRing::integers_mod(2, 2), 20);
  Rng rng(1);
  try {
    LrpcCode::generate({20, 12, 2, 0}, S, rng);
    FAIL("lambda < n/(n-k) accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenerationFailed);
  }
  try {
    LrpcCode::generate({20, 20, 2, 0}, S, rng);
    FAIL("k = n accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfig);
  }
  try {
    LrpcCode::generate({20, 8, 2, 7}, S, rng);
    FAIL("t_max beyond the hypotheses accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfig);
  }
}

TEST_CASE("H_ext decomposition round trip") {
  auto [S, code] = paper_setup(3);
  const auto& R = S->ring();
  const std::size_t lambda = code.params().lambda;
  for (std::size_t i = 0; i < code.H().rows(); ++i) {
    for (std::size_t j = 0; j < code.H().cols(); ++j) {
      ExtElem acc = S->zero();
      for (std::size_t l = 0; l < lambda; ++l) {
        const RingElem c = code.H_ext()(i * lambda + l, j);
        CHECK((R.is_zero(c) || R.is_unit(c)));
        S->add_to(acc, S->scale(code.f_basis()[l], c));
      }
      CHECK(acc == code.H()(i, j));
    }
  }
  MatS single(1, 1, S->one());
  const MatR e = build_h_ext(*S, single, code.f_basis());
  CHECK(e.rows() == 2);
  CHECK(e(0, 0) == R.one());
  CHECK(R.is_zero(e(1, 0)));
  MatS outside(1, 1, S->theta_power(7));
  try {
    build_h_ext(*S, outside, code.f_basis());
    FAIL("element outside F decomposed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInF);
  }
}

TEST_CASE("encoding") {
  auto [S, code] = paper_setup(4);
  const std::vector<ExtElem> zero(8, S->zero());
  for (const auto& x : code.encode(zero)) CHECK(S->is_zero(x));
  Rng rng(2);
  std::set<std::vector<ExtElem>> seen;
  for (int i = 0; i < 30; ++i) {
    std::vector<ExtElem> msg;
    for (int k = 0; k < 8; ++k) msg.push_back(S->random(rng));
    const auto c = code.encode(msg);
    CHECK(code.is_codeword(c));
    seen.insert(c);
  }
  CHECK(seen.size() == 30);
  CHECK(code.generator().rows() == 8);
  CHECK(unit_pivot_factor(ExtOps{*S}, code.generator(), false).r == 8);
}

TEST_CASE("syndrome") {
  auto S = Extension::create(LocalRing::integers_mod(2, 2), 4);
  Rng rng(10);
  const auto code = LrpcCode::generate({4, 2, 2, 1}, S, rng);
  std::vector<ExtElem> r;
  for (int i = 0; i < 4; ++i) r.push_back(S->random(rng));
  const auto s = code.syndrome(r);
  for (std::size_t i = 0; i < 2; ++i) {
    ExtElem acc = S->zero();
    for (std::size_t j = 0; j < 4; ++j) acc = S->add(acc, S->mul(r[j], code.H()(i, j)));
    CHECK(s[i] == acc);
  }
  const auto c = code.random_codeword(rng);
  CHECK(code.syndrome(add(*S, c, r)) == s);
}

TEST_CASE("erasure decoding") {
  auto [S, code] = paper_setup(5);
  Rng rng(6);
  const auto E = sample_error(*S, 20, 3, rng);
  const std::vector<ExtElem> zero_syndrome(12, S->zero());
  const auto z = erasure_decode(code, E.support_basis, zero_syndrome);
  REQUIRE(z);
  for (const auto& x : *z) CHECK(S->is_zero(x));
  const auto got = erasure_decode(code, E.support_basis, code.syndrome(E.e));
  REQUIRE(got);
  CHECK(*got == E.e);
  int mismatched = 0;
  for (int i = 0; i < 5; ++i) {
    const auto other = sample_error(*S, 20, 3, rng);
    if (!erasure_decode(code, E.support_basis, code.syndrome(other.e))) ++mismatched;
  }
  CHECK(mismatched == 5);
  const std::vector<ExtElem> dependent = {S->one(), S->scale(S->one(), S->ring().from_int(2))};
  try {
    erasure_decode(code, dependent, zero_syndrome);
    FAIL("dependent support accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
}

TEST_CASE("decoding") {
  auto [S, code] = paper_setup(7);
  Rng rng(8);
  const auto c = code.random_codeword(rng);
  const auto plain = decode_local(code, c);
  CHECK(plain.success);
  CHECK(plain.codeword == c);

  int good = 0;
  for (int i = 0; i < 50; ++i) {
    const auto e = sample_error(*S, 20, 2, rng);
    const auto res = decode_local(code, add(*S, c, e.e));
    const auto cond = check_decoding_conditions(code, e.e, 2);
    if (cond.syndrome_condition) CHECK(free_rank(module_product(*S, support(*S, e.e), code.F())) == 4);
    if (cond.syndrome_condition && cond.intersection_condition) {
      ++good;
      CHECK(res.success);
      CHECK(res.codeword == c);
      REQUIRE(res.state.e_prime);
      CHECK(*res.state.e_prime == e.e);
      CHECK(res.state.nu == 4);
      CHECK(res.state.t_prime == 2);
    }
    if (res.success) CHECK(code.is_codeword(res.codeword));
  }
  CHECK(good > 40);
}

TEST_CASE("errors with non-free support are rejected") {
  auto [S, code] = paper_setup(9);
  Rng rng(11);
  const auto c = code.random_codeword(rng);
  const auto two = S->ring().from_int(2);
  for (int i = 0; i < 20; ++i) {
    auto e = sample_error(*S, 20, 2, rng).e;
    for (auto& x : e) x = S->scale(x, two);
    const auto res = decode_local(code, add(*S, c, e));
    CHECK_FALSE(res.success);
    CHECK(res.failure == FailureLine::Line5);
  }
}

TEST_CASE("sampled errors") {
  auto S = Extension::create(LocalRing::integers_mod(2, 2), 20);
  Rng rng(12);
  const auto zero = sample_error(*S, 10, 0, rng);
  for (const auto& x : zero.e) CHECK(S->is_zero(x));
  for (std::size_t t = 1; t <= 5; ++t) {
    const auto e = sample_error(*S, 10, t, rng);
    const auto supp = support(*S, e.e);
    CHECK(supp.is_free());
    CHECK(free_rank(supp) == t);
    CHECK(module_equal(supp, support(*S, e.support_basis)));
  }
  try {
    sample_error(*S, 3, 4, rng);
    FAIL("t > n accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadRank);
  }
}

TEST_CASE("error supports are uniform over free rank-1 submodules of Z4^2") {
  auto S = Extension::create(LocalRing::integers_mod(2, 2), 2);
  Rng rng(13);
  std::map<std::vector<VecR>, int> hist;
  const int draws = 6000;
  for (int i = 0; i < draws; ++i) {
    const auto e = sample_error(*S, 3, 1, rng);
    hist[oracle::rows(canonical_basis(support(*S, e.e)))]++;
  }
  CHECK(hist.size() == 6);
  double chi2 = 0;
  for (const auto& [k, c] : hist) chi2 += (c - draws / 6.0) * (c - draws / 6.0) / (draws / 6.0);
  CHECK(chi2 < 20.5);
}

TEST_CASE("code from explicit parts") {
  auto [S, code] = paper_setup(14);
  const auto copy = LrpcCode::from_parts(code.params(), S, code.H(), code.f_basis());
  CHECK(copy.H_ext() == code.H_ext());
  CHECK(copy.flags().unique_decoding);
  CHECK(copy.flags().square_property);
  MatS bad = code.H();
  bad(0, 0) = S->theta_power(9);
  try {
    LrpcCode::from_parts(code.params(), S, bad, code.f_basis());
    FAIL("entry outside F accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInF);
  }
}
