#include "lrpc/serialize.hpp"

#include "lrpc/errors.hpp"
#include "lrpc/ring_spec.hpp"

namespace lrpc {

using nlohmann::json;

namespace {

json coords(const std::vector<Coeff>& c) { return json(c); }

ExtElem ext_elem(const Extension& S, const json& j) {
  ExtElem e;
  e.c = j.get<std::vector<Coeff>>();
  S.check(e);
  return e;
}

}  // namespace

json code_to_json(const ProductLrpcCode& code, const std::string& ring_spec) {
  json doc;
  doc["format"] = kCodeFormat;
  doc["ring"] = ring_spec;
  doc["n"] = code.params().n;
  doc["k"] = code.params().k;
  doc["lambda"] = code.params().lambda;
  doc["t_max"] = code.params().t_max;
  doc["factors"] = json::array();
  for (const auto& part : code.parts()) {
    const Extension& S = part.ext();
    json f;
    f["ring"] = S.ring().name();
    f["ext"] = S.spec();
    f["modulus"] = json::array();
    for (const auto& c : S.modulus()) f["modulus"].push_back(json(std::vector<Coeff>(c.c.begin(), c.c.end())));
    f["F"] = json::array();
    for (const auto& x : part.f_basis()) f["F"].push_back(coords(x.c));
    f["H"] = json::array();
    for (std::size_t i = 0; i < part.H().rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < part.H().cols(); ++j) row.push_back(coords(part.H()(i, j).c));
      f["H"].push_back(row);
    }
    const auto& fl = part.flags();
    f["flags"] = {{"unique_decoding", fl.unique_decoding},
                  {"maximal_row_span", fl.maximal_row_span},
                  {"unity", fl.unity},
                  {"square_property", fl.square_property}};
    doc["factors"].push_back(f);
  }
  return doc;
}

LoadedCode code_from_json(const json& doc) {
  try {
    if (doc.at("format").get<std::string>() != kCodeFormat) throw ParseError(0, std::string("format ") + kCodeFormat);
    const auto ring_spec = doc.at("ring").get<std::string>();
    const RingSpec spec = parse_ring_spec(ring_spec);
    CodeParams params{doc.at("n").get<std::size_t>(), doc.at("k").get<std::size_t>(),
                      doc.at("lambda").get<std::size_t>(), doc.value("t_max", std::size_t{0})};
    const auto& factors = doc.at("factors");
    if (factors.size() != spec.ring.rho()) throw ParseError(0, "one entry per ring factor");
    std::vector<LrpcCode> parts;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto& f = factors[j];
      const RingPtr& R = spec.ring.factors()[j];
      std::vector<RingElem> modulus;
      for (const auto& c : f.at("modulus")) {
        const auto v = c.get<std::vector<std::int64_t>>();
        if (v.size() != R->dim()) throw ParseError(0, "modulus coefficients of ring dimension");
        modulus.push_back(R->from_coords(v));
      }
      if (modulus.size() < 2) throw ParseError(0, "modulus of degree >= 1");
      const auto m = static_cast<unsigned>(modulus.size() - 1);
      ExtPtr S = Extension::create(R, m, std::move(modulus));
      std::vector<ExtElem> F;
      for (const auto& x : f.at("F")) F.push_back(ext_elem(*S, x));
      const auto& rows = f.at("H");
      MatS H(rows.size(), params.n);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != params.n) throw ParseError(0, "H rows of length n");
        for (std::size_t c = 0; c < params.n; ++c) H(r, c) = ext_elem(*S, rows[r][c]);
      }
      parts.push_back(LrpcCode::from_parts(params, S, std::move(H), std::move(F)));
    }
    return {ring_spec, ProductLrpcCode(std::move(parts))};
  } catch (const json::exception& e) {
    throw ParseError(0, "lrpc-ring/1 document", e.what());
  }
}

}  // namespace lrpc
