#pragma once

#include <string>
#include <vector>

#include "lrpc/modlin.hpp"

namespace lrpc {

/// Worked examples with known answers.
namespace golden {

/// Z4[x]/(x^2)
RingPtr example1_ring();
/// The 2x2 system A x = b over Z4[x]/(x^2).
MatR example1_matrix(const LocalRing& R);
VecR example1_rhs(const LocalRing& R);
/// Its four solutions as flat coordinates (c0 + c1 x per entry).
std::vector<std::vector<std::int64_t>> example1_solutions();

/// Z4[t]/(t^5+t^2+1)
ExtPtr appendix_ext();
/// Generators (as coordinate vectors) of A, B, the intersection and the product.
std::vector<std::vector<std::int64_t>> appendix_a_gens();
std::vector<std::vector<std::int64_t>> appendix_b_gens();
std::vector<std::vector<std::int64_t>> appendix_intersection_gens();
std::vector<std::vector<std::int64_t>> appendix_product_gens();
Submodule appendix_module(const Extension& S, const std::vector<std::vector<std::int64_t>>& gens);

}  // namespace golden

/// Every element of particular + span(kernel); requires a ring small enough to enumerate.
std::vector<VecR> enumerate_solutions(const LocalRing& R, const SolutionSet& sol);

struct SelfTestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelfTestCase> run_selftest();

}  // namespace lrpc
