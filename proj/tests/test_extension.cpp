#include <doctest.h>

#include "lrpc/errors.hpp"
#include "lrpc/modlin.hpp"
#include "lrpc/selftest.hpp"

using namespace lrpc;

namespace {

ExtElem from_ints(const Extension& S, const std::vector<std::int64_t>& c) {
  VecR v(S.m(), S.ring().zero());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = S.ring().from_int(c[i]);
  return S.unrep(v);
}

// Schoolbook product over R followed by division by the monic modulus.
VecR schoolbook(const Extension& S, const VecR& a, const VecR& b) {
  const LocalRing& R = S.ring();
  const unsigned m = S.m();
  VecR prod(2 * m - 1, R.zero());
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = R.add(prod[i + j], R.mul(a[i], b[j]));
  const auto& f = S.modulus();
  for (unsigned k = 2 * m - 1; k-- > m;) {
    const RingElem c = prod[k];
    for (unsigned i = 0; i <= m; ++i) prod[k - m + i] = R.sub(prod[k - m + i], R.mul(c, f[i]));
  }
  prod.resize(m);
  return prod;
}

}  // namespace

TEST_CASE("arithmetic in Z4[t]/(t^5+t^2+1)") {
  const auto S = golden::appendix_ext();
  CHECK(S->mul(S->theta_power(4), S->theta_power(1)) == from_ints(*S, {3, 0, 3, 0, 0}));
  CHECK(S->add(from_ints(*S, {1, 1}), from_ints(*S, {3, 3})) == S->zero());
  const auto theta = S->theta_power(1);
  CHECK(S->mul(S->inverse(theta), theta) == S->one());
  CHECK(S->inverse(S->one()) == S->one());
  try {
    S->inverse(S->from_ring(S->ring().from_int(2)));
    FAIL("2 inverted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAUnit);
  }
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto a = S->random(rng);
    CHECK(S->mul(a, S->one()) == a);
  }
}

TEST_CASE("default moduli") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  CHECK(Extension::create(Z4, 5)->spec() == "ext m=5 f=x^5+x^2+1");
  CHECK(Extension::create(Z4, 4)->spec() == "ext m=4 f=x^4+x+1");
  const auto S20 = Extension::create(Z4, 20);
  CHECK(S20->m() == 20);
}

TEST_CASE("modulus validation") {
  const auto Z4 = LocalRing::integers_mod(2, 2);
  auto poly = [&](std::vector<std::int64_t> c) {
    std::vector<RingElem> out;
    for (auto x : c) out.push_back(Z4->from_int(x));
    return out;
  };
  try {
    Extension::create(Z4, 2, poly({1, 0, 1}));
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIrreducible);
  }
  try {
    Extension::create(Z4, 2, poly({1, 1, 3}));
    FAIL("non-monic modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedModulus);
  }
  // Lifts that differ by multiples of 2 are still valid.
  CHECK(Extension::create(Z4, 2, poly({3, 1, 1}))->m() == 2);
}

TEST_CASE("vector representation") {
  const auto S = golden::appendix_ext();
  const auto& R = S->ring();
  CHECK(S->vec_rep(S->one()) == VecR{R.one(), R.zero(), R.zero(), R.zero(), R.zero()});
  const auto a = S->add(S->add(S->scale(S->theta_power(3), R.from_int(3)), S->scale(S->theta_power(1), R.from_int(2))),
                        S->from_ring(R.from_int(3)));
  CHECK(S->vec_rep(a) == VecR{R.from_int(3), R.from_int(2), R.zero(), R.from_int(3), R.zero()});
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto x = S->random(rng), y = S->random(rng);
    const auto r = R.random(rng);
    CHECK(S->unrep(S->vec_rep(x)) == x);
    const auto vx = S->vec_rep(x), vy = S->vec_rep(y), vs = S->vec_rep(S->add(x, y)), vr = S->vec_rep(S->scale(x, r));
    for (unsigned k = 0; k < S->m(); ++k) {
      CHECK(vs[k] == R.add(vx[k], vy[k]));
      CHECK(vr[k] == R.mul(vx[k], r));
    }
  }
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
  std::vector<ExtPtr> exts = {golden::appendix_ext(), Extension::create(LocalRing::quotient(2, 2, {0, 0, 1}), 3),
                              Extension::create(LocalRing::galois(3, 2, 2), 2),
                              Extension::create(LocalRing::quotient(2, 3, {1, 0, 1, 0, 1}), 3)};
  for (const auto& S : exts) {
    CAPTURE(S->spec());
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
      const auto a = S->random(rng), b = S->random(rng);
      CHECK(S->vec_rep(S->mul(a, b)) == schoolbook(*S, S->vec_rep(a), S->vec_rep(b)));
      if (S->is_unit(a)) CHECK(S->mul(a, S->inverse(a)) == S->one());
    }
  }
}

TEST_CASE("degree one extension is the base ring") {
  const auto R = LocalRing::quotient(2, 2, {0, 0, 1});
  const auto S = Extension::create(R, 1);
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto a = R->random(rng), b = R->random(rng);
    CHECK(S->vec_rep(S->mul(S->from_ring(a), S->from_ring(b)))[0] == R->mul(a, b));
    CHECK(S->is_unit(S->from_ring(a)) == R->is_unit(a));
  }
}

TEST_CASE("supports") {
  const auto S = golden::appendix_ext();
  const auto& R = S->ring();
  const auto z = support(*S, {S->zero(), S->zero()});
  CHECK(free_rank(z) == 0);
  CHECK(z.is_zero());
  const auto theta = S->theta_power(1);
  const auto one = support(*S, {theta, S->scale(theta, R.from_int(2)), S->zero()});
  CHECK(free_module_test(one).is_free);
  CHECK(free_rank(one) == 1);
  CHECK(module_equal(one, support(*S, {theta})));
  const auto A = support(*S, {from_ints(*S, golden::appendix_a_gens()[0]), from_ints(*S, golden::appendix_a_gens()[1])});
  CHECK(free_rank(A) == 2);
  CHECK(A.is_free());
}
