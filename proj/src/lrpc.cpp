#include "lrpc/lrpc.hpp"

#include "lrpc/errors.hpp"

namespace lrpc {

namespace {

MatR rows_of(const Extension& S, const std::vector<ExtElem>& xs) {
  MatR m(0, S.m());
  for (const auto& x : xs) m.append_row(S.vec_rep(x));
  return m;
}

RingElem random_unit_or_zero(const LocalRing& R, Rng& rng) {
  for (;;) {
    RingElem r = R.random(rng);
    if (R.is_zero(r) || R.is_unit(r)) return r;
  }
}

std::size_t ext_free_rank(const Extension& S, const MatS& H) {
  return unit_pivot_factor(ExtOps{S}, H, false).r;
}

}  // namespace

void CodeParams::validate(unsigned m) const {
  if (n == 0 || k == 0 || k >= n) throw Error(ErrorCode::InvalidConfig, "need 0 < k < n");
  if (lambda == 0 || lambda > m) throw Error(ErrorCode::InvalidConfig, "need 1 <= lambda <= m");
  if (lambda * (n - k) < n) {
    throw Error(ErrorCode::GenerationFailed, "lambda < n/(n-k): the unique-decoding property cannot hold");
  }
  if (t_max > 0) {
    if (t_max * lambda * (lambda + 1) / 2 >= m) throw Error(ErrorCode::InvalidConfig, "need t_max*lambda*(lambda+1)/2 < m");
    if (t_max * lambda >= n - k + 1) throw Error(ErrorCode::InvalidConfig, "need t_max*lambda < n-k+1");
  }
}

std::optional<VecR> decompose_in_basis(const Extension& S, const std::vector<ExtElem>& f_basis, const ExtElem& h) {
  const LocalRing& R = S.ring();
  const MatR fb = rows_of(S, f_basis);
  auto P = full_column_rank_transform(RingOps{R}, fb.transposed());
  if (!P) throw Error(ErrorCode::RankDeficient, "F basis is not linearly independent");
  const VecR v = S.vec_rep(h);
  VecR coords(S.m(), R.zero());
  for (std::size_t i = 0; i < S.m(); ++i) {
    RingElem acc = R.zero();
    for (std::size_t j = 0; j < S.m(); ++j) R.add_to(acc, R.mul((*P)(i, j), v[j]));
    coords[i] = acc;
  }
  for (std::size_t i = f_basis.size(); i < S.m(); ++i)
    if (!R.is_zero(coords[i])) return std::nullopt;
  coords.resize(f_basis.size());
  return coords;
}

MatR build_h_ext(const Extension& S, const MatS& H, const std::vector<ExtElem>& f_basis) {
  const LocalRing& R = S.ring();
  const std::size_t lambda = f_basis.size();
  const MatR fb = rows_of(S, f_basis);
  auto P = full_column_rank_transform(RingOps{R}, fb.transposed());
  if (!P) throw Error(ErrorCode::RankDeficient, "F basis is not linearly independent");
  MatR out(H.rows() * lambda, H.cols(), R.zero());
  for (std::size_t i = 0; i < H.rows(); ++i) {
    for (std::size_t j = 0; j < H.cols(); ++j) {
      const VecR v = S.vec_rep(H(i, j));
      for (std::size_t a = 0; a < S.m(); ++a) {
        RingElem acc = R.zero();
        for (std::size_t b = 0; b < S.m(); ++b) R.add_to(acc, R.mul((*P)(a, b), v[b]));
        if (a < lambda) {
          out(i * lambda + a, j) = acc;
        } else if (!R.is_zero(acc)) {
          throw Error(ErrorCode::NotInF, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not in F");
        }
      }
    }
  }
  return out;
}

Submodule LrpcCode::F() const { return support(*ext_, f_); }

LrpcCode LrpcCode::generate(const CodeParams& params, ExtPtr ext, Rng& rng) {
  params.validate(ext->m());
  const Extension& S = *ext;
  const LocalRing& R = S.ring();
  const std::size_t n = params.n, k = params.k, lambda = params.lambda;
  int attempts = 0;

  // F = <1, f_2, ..., f_lambda> with units f_i and the square property.
  std::vector<ExtElem> f;
  SquarePropertyReport square;
  for (;; ++attempts) {
    if (attempts >= kGenerationAttempts) throw Error(ErrorCode::GenerationFailed, "no F with the square property found");
    f.assign(1, S.one());
    for (std::size_t i = 1; i < lambda; ++i) f.push_back(S.random_unit(rng));
    const Submodule F = support(S, f);
    if (residue_rank(R, F.gens()) != lambda) continue;
    square = square_property_check(S, F);
    if (square.has_square_property) break;
  }
  f = square.suitable_basis;

  for (;; ++attempts) {
    if (attempts >= kGenerationAttempts) throw Error(ErrorCode::GenerationFailed, "no parity-check matrix found");
    MatS H(n - k, n, S.zero());
    for (std::size_t i = 0; i < n - k; ++i) {
      // Rows whose coefficient block does not span F are redrawn.
      for (;;) {
        MatR coeffs(n, lambda);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < lambda; ++l) coeffs(j, l) = random_unit_or_zero(R, rng);
        if (residue_rank(R, coeffs) != lambda) continue;
        for (std::size_t j = 0; j < n; ++j) {
          ExtElem h = S.zero();
          for (std::size_t l = 0; l < lambda; ++l) S.add_to(h, S.scale(f[l], coeffs(j, l)));
          H(i, j) = std::move(h);
        }
        break;
      }
    }
    if (ext_free_rank(S, H) != n - k) continue;
    LrpcCode code = from_parts(params, ext, std::move(H), f);
    if (!code.flags_.unique_decoding) continue;
    code.flags_.unity = true;
    return code;
  }
}

LrpcCode LrpcCode::from_parts(const CodeParams& params, ExtPtr ext, MatS H, std::vector<ExtElem> f_basis) {
  LrpcCode code;
  code.params_ = params;
  code.ext_ = std::move(ext);
  code.H_ = std::move(H);
  code.f_ = std::move(f_basis);
  code.finish();
  return code;
}

void LrpcCode::finish() {
  const Extension& S = *ext_;
  const LocalRing& R = S.ring();
  const std::size_t n = params_.n, k = params_.k, lambda = params_.lambda;
  if (H_.rows() != n - k || H_.cols() != n) throw Error(ErrorCode::InvalidConfig, "parity-check matrix has the wrong shape");
  if (f_.size() != lambda || !(f_[0] == S.one())) throw Error(ErrorCode::NoSuitableBasis, "F basis must start with 1");
  for (const auto& x : H_.data()) S.check(x);
  if (residue_rank(R, rows_of(S, f_)) != lambda) throw Error(ErrorCode::RankDeficient, "F basis is not independent");

  f_inv_.clear();
  for (const auto& x : f_) f_inv_.push_back(S.inverse(x));
  H_ext_ = build_h_ext(S, H_, f_);

  flags_ = {};
  flags_.unique_decoding = lambda * (n - k) >= n && residue_rank(R, H_ext_.transposed()) == n;
  flags_.maximal_row_span = true;
  flags_.unity = true;
  for (std::size_t i = 0; i < n - k; ++i) {
    MatR block(n, lambda);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < lambda; ++l) {
        block(j, l) = H_ext_(i * lambda + l, j);
        if (!R.is_zero(block(j, l)) && !R.is_unit(block(j, l))) flags_.unity = false;
      }
    }
    if (residue_rank(R, block) != lambda) flags_.maximal_row_span = false;
  }
  square_ = square_property_check(S, support(S, f_));
  // The decoder uses f_ as given, so it must itself be the suitable basis.
  flags_.square_property = square_.has_square_property && square_.suitable_basis == f_;

  h_ext_p_.reset();
  if (flags_.unique_decoding) h_ext_p_ = full_column_rank_transform(RingOps{R}, H_ext_);

  // Systematic generator from the reduced parity-check matrix.
  const ExtOps ops{S};
  MatS red = H_;
  const auto pivots = unit_rref(ops, red);
  if (pivots.size() != n - k) throw Error(ErrorCode::NoInvertibleMinor, "parity-check matrix has no invertible minor");
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  G_ = MatS(0, n);
  for (std::size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<ExtElem> row(n, S.zero());
    row[col] = S.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) row[pivots[i]] = S.neg(red(i, col));
    G_.append_row(row);
  }
}

std::vector<ExtElem> LrpcCode::encode(const std::vector<ExtElem>& msg) const {
  if (msg.size() != params_.k) throw Error(ErrorCode::InvalidConfig, "message length must be k");
  const Extension& S = *ext_;
  std::vector<ExtElem> c(params_.n, S.zero());
  for (std::size_t u = 0; u < msg.size(); ++u) {
    S.check(msg[u]);
    if (S.is_zero(msg[u])) continue;
    for (std::size_t j = 0; j < params_.n; ++j)
      if (!S.is_zero(G_(u, j))) S.add_mul_to(c[j], msg[u], G_(u, j));
  }
  return c;
}

std::vector<ExtElem> LrpcCode::syndrome(const std::vector<ExtElem>& r) const {
  if (r.size() != params_.n) throw Error(ErrorCode::InvalidConfig, "received word length must be n");
  const Extension& S = *ext_;
  std::vector<ExtElem> s(H_.rows(), S.zero());
  for (std::size_t i = 0; i < H_.rows(); ++i)
    for (std::size_t j = 0; j < H_.cols(); ++j)
      if (!S.is_zero(r[j])) S.add_mul_to(s[i], r[j], H_(i, j));
  return s;
}

bool LrpcCode::is_codeword(const std::vector<ExtElem>& c) const {
  for (const auto& x : syndrome(c))
    if (!ext_->is_zero(x)) return false;
  return true;
}

std::vector<ExtElem> LrpcCode::random_codeword(Rng& rng) const {
  std::vector<ExtElem> msg;
  for (std::size_t i = 0; i < params_.k; ++i) msg.push_back(ext_->random(rng));
  return encode(msg);
}

const char* to_string(FailureLine line) {
  switch (line) {
    case FailureLine::None: return "none";
    case FailureLine::Line5: return "line5";
    case FailureLine::Line8: return "line8";
    case FailureLine::Line14: return "line14";
    case FailureLine::Line16: return "line16";
    case FailureLine::Line18: return "line18";
  }
  return "unknown";
}

namespace {

// Erasure decoding against a basis whose products with F are already known to
// be independent. U holds vec_rep(eps_u f_l) in row l * t + u.
std::optional<std::vector<ExtElem>> erasure_solve(const LrpcCode& code, const std::vector<ExtElem>& E_basis,
                                                  const MatR& U, const std::vector<ExtElem>& s) {
  const Extension& S = code.ext();
  const LocalRing& R = S.ring();
  const std::size_t n = code.params().n, lambda = code.params().lambda, t = E_basis.size();
  const std::size_t rows = lambda * t;
  if (!code.h_ext_transform()) throw Error(ErrorCode::HypothesisViolated, "code lacks the unique-decoding property");
  auto PU = full_column_rank_transform(RingOps{R}, U.transposed());
  if (!PU) throw Error(ErrorCode::RankDeficient, "frk(E F) differs from lambda * t");

  // B[(i, l), u] from the coordinates of s_i over eps_u f_l.
  MatR B(s.size() * lambda, t, R.zero());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const VecR v = S.vec_rep(s[i]);
    for (std::size_t a = 0; a < S.m(); ++a) {
      RingElem acc = R.zero();
      for (std::size_t b = 0; b < S.m(); ++b)
        if (!R.is_zero(v[b])) R.add_to(acc, R.mul((*PU)(a, b), v[b]));
      if (a < rows) {
        B(i * lambda + a / t, a % t) = acc;
      } else if (!R.is_zero(acc)) {
        return std::nullopt;
      }
    }
  }
  // E' = first n rows of P_H * B; the remaining rows must vanish.
  const MatR& PH = *code.h_ext_transform();
  const MatR PB = multiply(RingOps{R}, PH, B);
  for (std::size_t i = n; i < PB.rows(); ++i)
    for (std::size_t u = 0; u < t; ++u)
      if (!R.is_zero(PB(i, u))) return std::nullopt;
  std::vector<ExtElem> e(n, S.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t u = 0; u < t; ++u)
      if (!R.is_zero(PB(j, u))) S.add_to(e[j], S.scale(E_basis[u], PB(j, u)));
  return e;
}

MatR products_with_f(const LrpcCode& code, const std::vector<ExtElem>& E_basis) {
  const Extension& S = code.ext();
  const std::size_t t = E_basis.size();
  MatR U(code.params().lambda * t, S.m());
  for (std::size_t l = 0; l < code.params().lambda; ++l) {
    for (std::size_t u = 0; u < t; ++u) {
      const VecR v = S.vec_rep(S.mul(E_basis[u], code.f_basis()[l]));
      for (std::size_t j = 0; j < S.m(); ++j) U(l * t + u, j) = v[j];
    }
  }
  return U;
}

}  // namespace

std::optional<std::vector<ExtElem>> erasure_decode(const LrpcCode& code, const std::vector<ExtElem>& E_basis,
                                                   const std::vector<ExtElem>& s) {
  const Extension& S = code.ext();
  if (s.size() != code.params().n - code.params().k) throw Error(ErrorCode::InvalidConfig, "syndrome length must be n-k");
  const MatR U = products_with_f(code, E_basis);
  if (residue_rank(S.ring(), U) != U.rows()) throw Error(ErrorCode::RankDeficient, "frk(E F) differs from lambda * t");
  return erasure_solve(code, E_basis, U, s);
}

DecodeResult decode_local(const LrpcCode& code, const std::vector<ExtElem>& r) {
  const Extension& S = code.ext();
  const std::size_t lambda = code.params().lambda;
  DecodeResult res;
  DecoderState& st = res.state;
  auto fail = [&res](FailureLine line) {
    res.success = false;
    res.failure = line;
    return res;
  };

  st.s = code.syndrome(r);
  bool zero = true;
  for (const auto& x : st.s) zero = zero && S.is_zero(x);
  if (zero) {
    res.success = true;
    res.codeword = r;
    return res;
  }

  const Submodule supp = support(S, st.s);
  st.S_supp = supp;
  if (!supp.is_free()) return fail(FailureLine::Line5);
  st.nu = supp.pivot_rank();
  if (st.nu % lambda != 0) return fail(FailureLine::Line8);
  st.t_prime = st.nu / lambda;

  const Submodule base(S.ring_ptr(), S.m(), supp.basis());
  for (std::size_t i = 0; i < lambda; ++i) {
    st.S_i.push_back(i == 0 && S.is_unit(code.f_inverse()[0]) && code.f_inverse()[0] == S.one()
                         ? base
                         : scale_module(S, code.f_inverse()[i], base));
  }
  Submodule cur = st.S_i[0];
  for (std::size_t i = 1; i < lambda; ++i) cur = intersect_with_free(cur, st.S_i[i]);
  st.E_prime = cur;
  if (!cur.is_free()) return fail(FailureLine::Line14);
  if (cur.pivot_rank() != st.t_prime) return fail(FailureLine::Line16);

  const MatR Eb = cur.basis();
  std::vector<ExtElem> E_basis;
  for (std::size_t u = 0; u < Eb.rows(); ++u) E_basis.push_back(S.unrep(Eb.row_vector(u)));
  const MatR U = products_with_f(code, E_basis);
  if (residue_rank(S.ring(), U) != st.nu) return fail(FailureLine::Line16);

  auto e = erasure_solve(code, E_basis, U, st.s);
  if (!e) return fail(FailureLine::Line18);
  if (!(code.syndrome(*e) == st.s)) return fail(FailureLine::Line18);
  st.e_prime = e;
  res.codeword.reserve(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) res.codeword.push_back(S.sub(r[j], (*e)[j]));
  res.success = true;
  return res;
}

ErrorSample sample_error(const Extension& S, std::size_t n, std::size_t t, Rng& rng) {
  if (t > n || t > S.m()) throw Error(ErrorCode::BadRank, "error rank exceeds min(n, m)");
  const LocalRing& R = S.ring();
  ErrorSample out;
  out.e.assign(n, S.zero());
  if (t == 0) return out;
  const MatR eps = sample_free_submodule(S, t, rng).gens();
  for (std::size_t u = 0; u < t; ++u) out.support_basis.push_back(S.unrep(eps.row_vector(u)));
  for (int attempt = 0; attempt < 100; ++attempt) {
    MatR C(n, t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < t; ++u) C(i, u) = R.random(rng);
    if (residue_rank(R, C) != t) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < t; ++u)
        if (!R.is_zero(C(i, u))) S.add_to(out.e[i], S.scale(out.support_basis[u], C(i, u)));
    return out;
  }
  throw Error(ErrorCode::GenerationFailed, "no full-rank error coefficient matrix in 100 attempts");
}

ConditionCheck check_decoding_conditions(const LrpcCode& code, const std::vector<ExtElem>& e, std::size_t t) {
  const Extension& S = code.ext();
  ConditionCheck out;
  const Submodule supp = support(S, code.syndrome(e));
  out.syndrome_condition = free_rank(supp) == code.params().lambda * t;
  Submodule cur = scale_module(S, code.f_inverse()[0], supp);
  for (std::size_t i = 1; i < code.params().lambda; ++i) cur = intersect(cur, scale_module(S, code.f_inverse()[i], supp));
  out.intersection_condition = cur.is_free() && free_rank(cur) == t;
  return out;
}

}  // namespace lrpc
