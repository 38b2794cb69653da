#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lrpc/bound.hpp"
#include "lrpc/errors.hpp"
#include "lrpc/ring_spec.hpp"
#include "lrpc/selftest.hpp"
#include "lrpc/serialize.hpp"
#include "lrpc/simulation.hpp"

using namespace lrpc;

namespace {

void parse_t_range(const std::string& text, ExperimentConfig& cfg) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.t_from = cfg.t_to = std::stoull(text);
    } else {
      cfg.t_from = std::stoull(text.substr(0, dots));
      cfg.t_to = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::logic_error&) {
    throw ParseError(0, "t range a..b", text);
  }
}

ProductExtension ring_and_ext(const std::string& ring, const std::string& ext, ProductRing* ring_out = nullptr) {
  RingSpec spec = parse_ring_spec(ring);
  if (ring_out) *ring_out = spec.ring;
  if (spec.ext) return *spec.ext;
  return parse_extension_spec(spec.ring, ext);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::IoError, "cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LRPC codes over finite commutative rings"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  cfg.ext_spec.clear();
  std::string t_range = "1..6", out_path = "-";
  int precision = 6;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo decoding-failure experiment, CSV output");
  sim->add_option("--ring", cfg.ring_spec, "ring spec, e.g. Z4, GR(4,2), Z4[x]/(x^2), Z2 x Z3")->required();
  sim->add_option("--ext", cfg.ext_spec, "extension, e.g. m=20 or m=5 f=x^5+x^2+1");
  sim->add_option("--n", cfg.n)->required();
  sim->add_option("--k", cfg.k)->required();
  sim->add_option("--lambda", cfg.lambda)->required();
  sim->add_option("--t", t_range, "error rank or range a..b")->capture_default_str();
  sim->add_option("--trials", cfg.trials)->capture_default_str();
  sim->add_option("--seed", cfg.seed)->capture_default_str();
  sim->add_option("--out", out_path, "CSV path, - for stdout")->capture_default_str();
  sim->add_flag("--fresh-code-per-trial", cfg.fresh_code_per_trial);
  sim->add_option("--precision", precision)->capture_default_str()->check(CLI::Range(0, 17));
  sim->add_flag("--record-timing", cfg.record_timing, "fill wall_ms (output is then not reproducible)");

  std::string b_ring, b_ext;
  std::uint64_t b_q = 0;
  std::size_t b_m = 0, b_n = 0, b_k = 0, b_lambda = 0, b_t = 0;
  int b_precision = 12;
  auto* bnd = app.add_subcommand("bound", "Lower bound on the decoding success probability");
  bnd->add_option("--ring", b_ring, "ring spec (with --ext); alternative to --q/--m");
  bnd->add_option("--ext", b_ext);
  bnd->add_option("--q", b_q, "residue field size");
  bnd->add_option("--m", b_m, "extension degree");
  bnd->add_option("--n", b_n)->required();
  bnd->add_option("--k", b_k)->required();
  bnd->add_option("--lambda", b_lambda)->required();
  bnd->add_option("--t", b_t)->required();
  bnd->add_option("--precision", b_precision)->capture_default_str()->check(CLI::Range(0, 60));

  auto* self = app.add_subcommand("selftest", "Run the built-in worked examples");

  std::string g_ring, g_ext, g_out = "-";
  std::size_t g_n = 0, g_k = 0, g_lambda = 0, g_tmax = 0;
  std::uint64_t g_seed = 1;
  auto* gen = app.add_subcommand("gencode", "Generate a code and write it as JSON");
  gen->add_option("--ring", g_ring)->required();
  gen->add_option("--ext", g_ext);
  gen->add_option("--n", g_n)->required();
  gen->add_option("--k", g_k)->required();
  gen->add_option("--lambda", g_lambda)->required();
  gen->add_option("--t-max", g_tmax)->capture_default_str();
  gen->add_option("--seed", g_seed)->capture_default_str();
  gen->add_option("--out", g_out)->capture_default_str();

  std::string i_path;
  auto* insp = app.add_subcommand("inspect", "Load a JSON code and report its properties");
  insp->add_option("path", i_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      parse_t_range(t_range, cfg);
      write_output(out_path, format_csv(run_trials(cfg), precision));
    } else if (*bnd) {
      std::vector<BoundInput> inputs;
      if (!b_ring.empty()) {
        const ProductExtension ext = ring_and_ext(b_ring, b_ext);
        for (const auto& f : ext.factors())
          inputs.push_back({f->ring().q(), b_lambda, b_t, f->m(), b_n, b_k});
      } else {
        if (b_q < 2 || b_m == 0) throw Error(ErrorCode::InvalidConfig, "give --ring/--ext or --q and --m");
        inputs.push_back({b_q, b_lambda, b_t, b_m, b_n, b_k});
      }
      Rational b = 1;
      for (const auto& in : inputs) {
        const Rational raw = success_bound_exact(in);
        std::cout << "factor q=" << in.q << " exact=" << raw << "\n";
        b *= theoretical_bound(in);
      }
      std::cout << "success_bound=" << to_decimal(b, b_precision) << "\n";
      std::cout << "failure_bound=" << to_decimal(Rational(1) - b, b_precision) << "\n";
    } else if (*self) {
      bool ok = true;
      for (const auto& c : run_selftest()) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        ok = ok && c.passed;
      }
      return ok ? 0 : 1;
    } else if (*gen) {
      ProductRing ring = ProductRing::integers_mod(2);
      const ProductExtension ext = ring_and_ext(g_ring, g_ext, &ring);
      Rng rng(g_seed);
      const auto code = ProductLrpcCode::generate({g_n, g_k, g_lambda, g_tmax}, ext, rng);
      std::string spec = g_ring;
      if (const auto pos = spec.find("ext"); pos != std::string::npos) spec = spec.substr(0, pos);
      while (!spec.empty() && spec.back() == ' ') spec.pop_back();
      write_output(g_out, code_to_json(code, spec).dump(1) + "\n");
    } else if (*insp) {
      std::ifstream f(i_path);
      if (!f) throw Error(ErrorCode::IoError, "cannot read " + i_path);
      const auto loaded = code_from_json(nlohmann::json::parse(f));
      const auto& p = loaded.code.params();
      std::cout << "ring " << loaded.ring_spec << " n=" << p.n << " k=" << p.k << " lambda=" << p.lambda << "\n";
      for (std::size_t j = 0; j < loaded.code.rho(); ++j) {
        const auto& part = loaded.code.part(j);
        const auto& fl = part.flags();
        std::cout << part.ext().ring().name() << " " << part.ext().spec() << " unique_decoding=" << fl.unique_decoding
                  << " maximal_row_span=" << fl.maximal_row_span << " unity=" << fl.unity
                  << " square_property=" << fl.square_property << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
