#include "lrpc/selftest.hpp"

#include <algorithm>
#include <set>

#include "lrpc/errors.hpp"

namespace lrpc {

namespace golden {

RingPtr example1_ring() { return LocalRing::quotient(2, 2, {0, 0, 1}); }

MatR example1_matrix(const LocalRing& R) {
  auto e = [&](std::int64_t a, std::int64_t b) { return R.from_coords({a, b}); };
  return MatR::from_rows({{e(2, 0), e(1, 1)}, {e(0, 1), e(1, 2)}});
}

VecR example1_rhs(const LocalRing& R) { return {R.from_coords({0, 0}), R.from_coords({2, 1})}; }

std::vector<std::vector<std::int64_t>> example1_solutions() {
  return {{3, 2, 2, 2}, {1, 3, 2, 0}, {3, 0, 2, 2}, {1, 1, 2, 0}};
}

ExtPtr appendix_ext() {
  const auto R = LocalRing::integers_mod(2, 2);
  std::vector<RingElem> f;
  for (std::int64_t c : {1, 0, 1, 0, 0, 1}) f.push_back(R->from_int(c));
  return Extension::create(R, 5, f);
}

std::vector<std::vector<std::int64_t>> appendix_a_gens() { return {{3, 2, 0, 3, 0}, {1, 3, 0, 2, 2}}; }
std::vector<std::vector<std::int64_t>> appendix_b_gens() { return {{1, 0, 0, 2, 1}, {3, 2, 0, 3, 2}}; }
std::vector<std::vector<std::int64_t>> appendix_intersection_gens() { return {{2, 0, 0, 2, 0}}; }
std::vector<std::vector<std::int64_t>> appendix_product_gens() {
  return {{1, 0, 3, 3, 0}, {1, 3, 2, 1, 0}, {0, 3, 1, 2, 3}, {1, 1, 2, 3, 3}};
}

Submodule appendix_module(const Extension& S, const std::vector<std::vector<std::int64_t>>& gens) {
  const LocalRing& R = S.ring();
  std::vector<VecR> rows;
  for (const auto& g : gens) {
    VecR v;
    for (auto c : g) v.push_back(R.from_int(c));
    rows.push_back(v);
  }
  return Submodule::from_rows(S.ring_ptr(), S.m(), rows);
}

}  // namespace golden

std::vector<VecR> enumerate_solutions(const LocalRing& R, const SolutionSet& sol) {
  if (!sol.particular) return {};
  if (R.cardinality() == 0) throw Error(ErrorCode::InvalidConfig, "ring too large to enumerate");
  std::set<VecR> seen{*sol.particular};
  std::vector<VecR> frontier{*sol.particular};
  // Closure of the particular solution under adding scaled kernel generators.
  while (!frontier.empty()) {
    std::vector<VecR> next;
    for (const auto& x : frontier) {
      for (const auto& g : sol.kernel_gens) {
        for (std::uint64_t i = 1; i < R.cardinality(); ++i) {
          const RingElem c = R.element(i);
          VecR y = x;
          for (std::size_t k = 0; k < y.size(); ++k) R.add_to(y[k], R.mul(c, g[k]));
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::string coords_string(const LocalRing& R, const VecR& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + R.to_string(v[i]);
  return out + ")";
}

SelfTestCase example1_case() {
  SelfTestCase c{"example1 solution set", false, {}};
  const auto R = golden::example1_ring();
  const auto sols = enumerate_solutions(*R, solve_linear(*R, golden::example1_matrix(*R), golden::example1_rhs(*R)));
  std::set<VecR> expected;
  for (const auto& s : golden::example1_solutions())
    expected.insert({R->from_coords({s[0], s[1]}), R->from_coords({s[2], s[3]})});
  c.passed = std::set<VecR>(sols.begin(), sols.end()) == expected;
  for (const auto& s : sols) c.detail += coords_string(*R, s) + " ";
  return c;
}

std::vector<SelfTestCase> appendix_cases() {
  const auto S = golden::appendix_ext();
  const Submodule A = golden::appendix_module(*S, golden::appendix_a_gens());
  const Submodule B = golden::appendix_module(*S, golden::appendix_b_gens());
  std::vector<SelfTestCase> out;
  auto add = [&out](std::string name, bool ok, std::string detail) { out.push_back({std::move(name), ok, std::move(detail)}); };

  const auto ta = free_module_test(A);
  add("appendix A free of rank 2", ta.is_free && ta.free_rank == 2, "frk=" + std::to_string(ta.free_rank));
  const auto tb = free_module_test(B);
  add("appendix B free of rank 2", tb.is_free && tb.free_rank == 2, "frk=" + std::to_string(tb.free_rank));
  const auto ts = free_module_test(module_sum(A, B));
  add("appendix A+B frk 3, not free", !ts.is_free && ts.free_rank == 3, "frk=" + std::to_string(ts.free_rank));
  const Submodule I = intersect_with_free(A, B);
  const auto ti = free_module_test(I);
  const bool i_ok = module_equal(I, golden::appendix_module(*S, golden::appendix_intersection_gens()));
  add("appendix A cap B = <2t^3+2>, not free", i_ok && !ti.is_free, "frk=" + std::to_string(ti.free_rank));
  const Submodule P = module_product(*S, A, B);
  const auto tp = free_module_test(P);
  const bool p_ok = module_equal(P, golden::appendix_module(*S, golden::appendix_product_gens()));
  add("appendix AB not free", p_ok && !tp.is_free, "frk=" + std::to_string(tp.free_rank));
  return out;
}

}  // namespace

std::vector<SelfTestCase> run_selftest() {
  std::vector<SelfTestCase> out;
  auto guarded = [&out](const char* name, auto fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };
  guarded("example1 solution set", [&] { out.push_back(example1_case()); });
  guarded("appendix", [&] {
    for (auto& c : appendix_cases()) out.push_back(std::move(c));
  });
  return out;
}

}  // namespace lrpc
