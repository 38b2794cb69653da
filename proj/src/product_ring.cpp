#include "lrpc/product_ring.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "lrpc/errors.hpp"

namespace lrpc {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return t < 0 ? t + n : t;
}

void check_index(std::size_t j, std::size_t rho) {
  if (j >= rho) throw Error(ErrorCode::IndexOutOfRange, "factor " + std::to_string(j) + " of " + std::to_string(rho));
}

}  // namespace

ProductRing::ProductRing(std::vector<RingPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::UnsupportedRing, "a product needs at least one factor");
  std::set<Coeff> primes;
  std::uint64_t N = 1;
  bool integral = true;
  for (const auto& f : factors_) {
    if (f->gamma() != 1 || f->mu() != 1 || !primes.insert(f->p()).second) {
      integral = false;
      break;
    }
    N *= f->zmod().modulus();
    if (N > (1ull << 62)) integral = false;
  }
  if (integral) modulus_ = N;
}

ProductRing ProductRing::integers_mod(std::uint64_t N) {
  if (N < 2) throw Error(ErrorCode::UnsupportedRing, "Z_N needs N >= 2");
  std::vector<RingPtr> factors;
  for (auto [p, e] : factorize(N)) {
    if (ipow(p, e) > (1ull << 31)) throw Error(ErrorCode::UnsupportedRing, "prime power factor exceeds 2^31");
    factors.push_back(LocalRing::integers_mod(static_cast<Coeff>(p), e));
  }
  return ProductRing(std::move(factors));
}

const LocalRing& ProductRing::factor(std::size_t j) const {
  check_index(j, rho());
  return *factors_[j];
}

std::string ProductRing::name() const {
  std::string out;
  for (std::size_t j = 0; j < rho(); ++j) out += (j ? " x " : "") + factors_[j]->name();
  return out;
}

ProdElem ProductRing::zero() const {
  ProdElem out;
  for (const auto& f : factors_) out.push_back(f->zero());
  return out;
}

ProdElem ProductRing::one() const {
  ProdElem out;
  for (const auto& f : factors_) out.push_back(f->one());
  return out;
}

ProdElem ProductRing::add(const ProdElem& a, const ProdElem& b) const {
  ProdElem out;
  for (std::size_t j = 0; j < rho(); ++j) out.push_back(factors_[j]->add(a.at(j), b.at(j)));
  return out;
}

ProdElem ProductRing::mul(const ProdElem& a, const ProdElem& b) const {
  ProdElem out;
  for (std::size_t j = 0; j < rho(); ++j) out.push_back(factors_[j]->mul(a.at(j), b.at(j)));
  return out;
}

bool ProductRing::is_unit(const ProdElem& a) const {
  for (std::size_t j = 0; j < rho(); ++j)
    if (!factors_[j]->is_unit(a.at(j))) return false;
  return true;
}

ProdElem ProductRing::from_integer(std::int64_t x) const {
  if (!modulus_) throw Error(ErrorCode::UnsupportedRing, "ring is not of the form Z_N");
  ProdElem out;
  for (const auto& f : factors_) out.push_back(f->from_int(x));
  return out;
}

std::uint64_t ProductRing::to_integer(const ProdElem& a) const {
  if (!modulus_) throw Error(ErrorCode::UnsupportedRing, "ring is not of the form Z_N");
  const auto N = static_cast<std::int64_t>(*modulus_);
  __int128 acc = 0;
  for (std::size_t j = 0; j < rho(); ++j) {
    const auto nj = static_cast<std::int64_t>(factors_[j]->zmod().modulus());
    const std::int64_t Mj = N / nj;
    const std::int64_t coeff = mod_inverse(Mj % nj, nj);
    acc += static_cast<__int128>(a.at(j)[0]) * coeff % nj * Mj;
  }
  return static_cast<std::uint64_t>(acc % N);
}

const RingElem& project(const ProdElem& a, std::size_t j) {
  check_index(j, a.size());
  return a[j];
}

std::vector<RingElem> project(const std::vector<ProdElem>& v, std::size_t j) {
  std::vector<RingElem> out;
  for (const auto& x : v) out.push_back(project(x, j));
  return out;
}

Matrix<RingElem> project(const Matrix<ProdElem>& a, std::size_t j) {
  Matrix<RingElem> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = project(a(r, c), j);
  return out;
}

const ExtElem& project(const ProdExtElem& a, std::size_t j) {
  check_index(j, a.size());
  return a[j];
}

std::vector<ExtElem> project(const std::vector<ProdExtElem>& v, std::size_t j) {
  std::vector<ExtElem> out;
  for (const auto& x : v) out.push_back(project(x, j));
  return out;
}

Matrix<ExtElem> project(const Matrix<ProdExtElem>& a, std::size_t j) {
  Matrix<ExtElem> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = project(a(r, c), j);
  return out;
}

ProdExtElem recombine(const std::vector<ExtElem>& parts) { return parts; }

std::vector<ProdExtElem> recombine(const std::vector<std::vector<ExtElem>>& parts) {
  if (parts.empty()) return {};
  std::vector<ProdExtElem> out(parts[0].size());
  for (const auto& part : parts) {
    if (part.size() != out.size()) throw Error(ErrorCode::AmbientMismatch, "factor vectors differ in length");
    for (std::size_t i = 0; i < part.size(); ++i) out[i].push_back(part[i]);
  }
  return out;
}

ProductExtension::ProductExtension(std::vector<ExtPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::UnsupportedRing, "a product needs at least one factor");
  m_ = factors_[0]->m();
  for (const auto& f : factors_)
    if (f->m() != m_) throw Error(ErrorCode::InvalidConfig, "all factor extensions must have the same degree");
}

ProductExtension ProductExtension::create(const ProductRing& ring, unsigned m) {
  std::vector<ExtPtr> out;
  for (const auto& f : ring.factors()) out.push_back(Extension::create(f, m));
  return ProductExtension(std::move(out));
}

const ExtPtr& ProductExtension::factor(std::size_t j) const {
  check_index(j, rho());
  return factors_[j];
}

ProdExtElem ProductExtension::zero() const {
  ProdExtElem out;
  for (const auto& f : factors_) out.push_back(f->zero());
  return out;
}

ProdExtElem ProductExtension::add(const ProdExtElem& a, const ProdExtElem& b) const {
  ProdExtElem out;
  for (std::size_t j = 0; j < rho(); ++j) out.push_back(factors_[j]->add(a.at(j), b.at(j)));
  return out;
}

ProdExtElem ProductExtension::sub(const ProdExtElem& a, const ProdExtElem& b) const {
  ProdExtElem out;
  for (std::size_t j = 0; j < rho(); ++j) out.push_back(factors_[j]->sub(a.at(j), b.at(j)));
  return out;
}

ProdExtElem ProductExtension::mul(const ProdExtElem& a, const ProdExtElem& b) const {
  ProdExtElem out;
  for (std::size_t j = 0; j < rho(); ++j) out.push_back(factors_[j]->mul(a.at(j), b.at(j)));
  return out;
}

ProdExtElem ProductExtension::random(Rng& rng) const {
  ProdExtElem out;
  for (const auto& f : factors_) out.push_back(f->random(rng));
  return out;
}

LocalizedRank localized_rank(const ProductRing& ring, const Matrix<ProdElem>& gens) {
  LocalizedRank out;
  out.free_rank = SIZE_MAX;
  out.is_free = true;
  std::optional<std::size_t> common;
  for (std::size_t j = 0; j < ring.rho(); ++j) {
    const Submodule N(ring.factors()[j], gens.cols(), project(gens, j));
    const auto test = free_module_test(N);
    out.rank = std::max(out.rank, module_rank(N));
    out.free_rank = std::min(out.free_rank, test.free_rank);
    if (!test.is_free || (common && *common != test.free_rank)) out.is_free = false;
    common = test.free_rank;
  }
  return out;
}

bool linearly_independent(const ProductRing& ring, const Matrix<ProdElem>& rows) {
  for (std::size_t j = 0; j < ring.rho(); ++j) {
    if (residue_rank(*ring.factors()[j], project(rows, j)) != rows.rows()) return false;
  }
  return true;
}

ProductLrpcCode ProductLrpcCode::generate(const CodeParams& params, const ProductExtension& ext, Rng& rng) {
  std::vector<LrpcCode> parts;
  for (const auto& f : ext.factors()) parts.push_back(LrpcCode::generate(params, f, rng));
  return ProductLrpcCode(std::move(parts));
}

ProductLrpcCode::ProductLrpcCode(std::vector<LrpcCode> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidConfig, "a product code needs at least one factor");
  const auto& p = parts_[0].params();
  for (const auto& c : parts_) {
    if (c.params().n != p.n || c.params().k != p.k || c.params().lambda != p.lambda || c.ext().m() != parts_[0].ext().m())
      throw Error(ErrorCode::InvalidConfig, "factor codes must share n, k, lambda and m");
  }
}

const LrpcCode& ProductLrpcCode::part(std::size_t j) const {
  check_index(j, rho());
  return parts_[j];
}

Matrix<ProdExtElem> ProductLrpcCode::H() const {
  const auto& H0 = parts_[0].H();
  Matrix<ProdExtElem> out(H0.rows(), H0.cols());
  for (std::size_t r = 0; r < H0.rows(); ++r)
    for (std::size_t c = 0; c < H0.cols(); ++c)
      for (const auto& p : parts_) out(r, c).push_back(p.H()(r, c));
  return out;
}

std::vector<ProdExtElem> ProductLrpcCode::f_basis() const {
  std::vector<std::vector<ExtElem>> parts;
  for (const auto& p : parts_) parts.push_back(p.f_basis());
  return recombine(parts);
}

std::vector<ProdExtElem> ProductLrpcCode::encode(const std::vector<ProdExtElem>& msg) const {
  std::vector<std::vector<ExtElem>> parts;
  for (std::size_t j = 0; j < rho(); ++j) parts.push_back(parts_[j].encode(project(msg, j)));
  return recombine(parts);
}

std::vector<ProdExtElem> ProductLrpcCode::syndrome(const std::vector<ProdExtElem>& r) const {
  std::vector<std::vector<ExtElem>> parts;
  for (std::size_t j = 0; j < rho(); ++j) parts.push_back(parts_[j].syndrome(project(r, j)));
  return recombine(parts);
}

std::vector<ProdExtElem> ProductLrpcCode::random_codeword(Rng& rng) const {
  std::vector<std::vector<ExtElem>> parts;
  for (const auto& p : parts_) parts.push_back(p.random_codeword(rng));
  return recombine(parts);
}

ProductDecodeResult decode_product(const ProductLrpcCode& code, const std::vector<ProdExtElem>& r) {
  ProductDecodeResult out;
  std::vector<std::vector<ExtElem>> words;
  for (std::size_t j = 0; j < code.rho(); ++j) {
    out.factor_results.push_back(decode_local(code.part(j), project(r, j)));
    const auto& res = out.factor_results.back();
    if (!res.success) out.failures.push_back({j, res.failure});
    words.push_back(res.codeword);
  }
  out.success = out.failures.empty();
  if (out.success) out.codeword = recombine(words);
  return out;
}

}  // namespace lrpc
