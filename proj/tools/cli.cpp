#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gaussq/characters.hpp"
#include "gaussq/field.hpp"
#include "gaussq/gauss.hpp"
#include "gaussq/qsim.hpp"
#include "gaussq/reductions.hpp"

namespace gaussq::cli {

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>> kEchoFields = {
    {"field-gauss", {"p", "r", "alpha", "g", "beta"}},
    {"ring-gauss", {"n", "alpha", "beta", "estimator", "t", "seed", "strategy"}},
    {"jacobi", {"p", "r", "alpha", "psi", "g"}},
    {"eigenphase", {"p", "r", "alpha", "g", "beta"}},
    {"phase-estimate", {"p", "r", "alpha", "g", "beta", "t", "seed", "strategy"}},
    {"dlog-reduce", {"p", "r", "g", "x", "mode", "epsilon", "seed"}},
    {"walk", {"p", "alpha", "g", "ordering", "format"}},
    {"autocorr", {"p", "alpha", "g", "ordering", "s"}},
    {"selftest", {}},
};

json full_config(const RunConfig& c) {
  json j;
  j["p"] = c.p;
  j["r"] = c.r;
  j["n"] = c.n;
  j["alpha"] = c.alpha;
  j["psi"] = c.psi;
  j["beta"] = c.beta;
  j["g"] = c.g ? json(*c.g) : json(nullptr);
  j["seed"] = c.seed;
  j["t"] = c.t;
  j["epsilon"] = c.epsilon;
  j["x"] = c.x;
  j["s"] = c.s;
  j["ordering"] = c.ordering;
  j["strategy"] = c.strategy;
  j["estimator"] = c.estimator;
  j["mode"] = c.mode;
  j["format"] = c.format;
  return j;
}

json result_json(const GaussSumResult& res) {
  return {{"value_re", res.value.real()}, {"value_im", res.value.imag()}, {"norm", res.norm},
          {"gamma_rad", res.gamma},       {"gamma_turns", res.gamma_turns()}, {"method", to_string(res.method)},
          {"error_bound", res.error_bound}, {"zero_sum", res.zero_sum}};
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::uint64_t single_alpha(const RunConfig& c) {
  if (c.alpha.size() != 1) throw DomainError("exactly one --alpha index is required for a field character");
  return c.alpha.front();
}

FieldPtr field_of(const RunConfig& c) { return make_field(c.p, c.r, c.g); }

FieldElement field_element(const FieldCtx& ctx, std::uint64_t idx, const char* what) {
  if (idx >= ctx.order()) throw DomainError(std::string(what) + " is not a canonical element encoding of F_{p^r}");
  return FieldElement{static_cast<std::uint32_t>(idx)};
}

qsim::EstimationStrategy strategy_of(const RunConfig& c) {
  return c.strategy == "adaptive" ? qsim::EstimationStrategy::adaptive : qsim::EstimationStrategy::two_basis;
}

WalkOrdering ordering_of(const RunConfig& c) {
  return c.ordering == "generator" ? WalkOrdering::generator : WalkOrdering::sequential;
}

json cmd_field_gauss(const RunConfig& c) {
  const FieldPtr ctx = field_of(c);
  const MultChar chi(ctx, single_alpha(c));
  const auto value = gauss_sum_direct_field(chi, field_element(*ctx, c.beta, "--beta"));
  return result_json(make_result(value, GaussMethod::direct));
}

json cmd_ring_gauss(const RunConfig& c) {
  const auto group = make_dirichlet_group(c.n);
  const DirichletChar chi(group, c.alpha);
  const RingEstimator est = c.estimator == "quantum" ? RingEstimator::quantum(c.t, c.seed, strategy_of(c))
                                                     : RingEstimator::exact();
  const RingGaussPipeline pipeline(chi, est);
  json out = result_json(pipeline(c.beta));
  json comps = json::array();
  for (const auto& comp : pipeline.components()) {
    static const char* kinds[] = {"trivial", "periodic", "primitive"};
    comps.push_back({{"modulus", comp.crt.modulus.value},
                     {"J", comp.crt.J},
                     {"kind", kinds[static_cast<int>(comp.kind)]},
                     {"conductor", comp.conductor},
                     {"method", to_string(comp.method)}});
  }
  out["components"] = comps;
  out["conductor"] = conductor(chi);
  out["primitive"] = is_primitive(chi);
  return out;
}

json cmd_jacobi(const RunConfig& c) {
  const FieldPtr ctx = field_of(c);
  const MultChar chi(ctx, single_alpha(c));
  const MultChar psi(ctx, c.psi);
  json out;
  const auto direct = jacobi_direct(chi, psi);
  out["direct"] = complex_json(direct);
  out["norm"] = std::abs(direct);
  const bool gauss_ok = !chi.is_trivial() && !psi.is_trivial() && !char_mul(chi, psi).is_trivial();
  out["via_gauss"] = gauss_ok ? complex_json(jacobi_via_gauss(chi, psi)) : json(nullptr);
  return out;
}

json cmd_eigenphase(const RunConfig& c) {
  const FieldPtr ctx = field_of(c);
  const MultChar chi(ctx, single_alpha(c));
  const auto res = qsim::eigenphase_gauss_field(chi, field_element(*ctx, c.beta, "--beta"));
  return {{"gamma_rad", res.gamma},
          {"gamma_turns", res.gamma / (2.0 * std::numbers::pi)},
          {"eigenvalue", complex_json(res.eigenvalue)},
          {"residual", res.residual},
          {"amplitude_at_zero", res.amplitude_at_zero}};
}

json cmd_phase_estimate(const RunConfig& c) {
  const FieldPtr ctx = field_of(c);
  const MultChar chi(ctx, single_alpha(c));
  const FieldElement beta = field_element(*ctx, c.beta, "--beta");
  const auto eig = qsim::eigenphase_gauss_field(chi, beta);
  Rng rng(c.seed);
  const auto est = qsim::estimate_phase(qsim::RelativePhaseSource{eig.gamma}, c.t, strategy_of(c), rng);
  json counts = json::array();
  for (const auto& b : est.per_basis_counts) counts.push_back({{"phi", b.phi}, {"shots", b.shots}, {"hits", b.hits}});
  const double root = std::sqrt(static_cast<double>(ctx->order()));
  json out = result_json(make_result(std::polar(root, est.gamma_hat), GaussMethod::quantum_estimated,
                                     3.0 * std::sqrt(2.0 / static_cast<double>(c.t))));
  out["gamma_hat"] = est.gamma_hat;
  out["gamma_hat_turns"] = est.gamma_hat / (2.0 * std::numbers::pi);
  out["gamma_true"] = eig.gamma;
  out["abs_error"] = wrap_distance(est.gamma_hat, eig.gamma);
  out["samples_used"] = est.samples_used;
  out["per_basis_counts"] = counts;
  out["seed"] = est.seed;
  return out;
}

json cmd_dlog_reduce(const RunConfig& c) {
  const FieldPtr ctx = field_of(c);
  const FieldElement x = field_element(*ctx, c.x, "--x");
  GaussOracle cfg;
  cfg.mode = c.mode == "noisy" ? GaussOracle::Mode::noisy : GaussOracle::Mode::exact;
  cfg.epsilon = c.epsilon;
  cfg.seed = c.seed;
  GaussPhaseOracle oracle(ctx, cfg);
  const auto red = dlog_via_gauss_oracle(ctx, x, oracle);
  return {{"x", c.x}, {"ell", red.ell}, {"oracle_calls", red.oracle_calls}, {"mode", c.mode}};
}

json cmd_autocorr(const RunConfig& c) {
  const FieldPtr ctx = make_field(c.p, 1, c.g);
  const MultChar chi(ctx, single_alpha(c));
  const WalkOrdering ord = ordering_of(c);
  json out;
  const auto value = autocorrelation(chi, ord, c.s);
  out["value"] = complex_json(value);
  if (ord == WalkOrdering::sequential) {
    const auto expected = -root_of_unity(-static_cast<std::int64_t>(c.s), c.p) / static_cast<double>(c.p - 1);
    out["expected"] = complex_json(expected);
    out["matches_expected"] = std::abs(value - expected) <= 1e-9;
  } else {
    const auto rep = generator_autocorrelation_report(chi, c.s);
    out["field_element_reading"] = complex_json(rep.field_element_reading);
    out["exponent_reading"] = complex_json(rep.exponent_reading);
    out["matches_field_element_reading"] = rep.matches_field_element_reading;
    out["matches_exponent_reading"] = rep.matches_exponent_reading;
  }
  out["modulus"] = std::abs(value);
  return out;
}

WalkTrace walk_of(const RunConfig& c) {
  const FieldPtr ctx = make_field(c.p, 1, c.g);
  return walk_trace(MultChar(ctx, single_alpha(c)), ordering_of(c));
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open output path " + c.output);
  file << text;
}

}  // namespace

nlohmann::json config_echo(const RunConfig& cfg) {
  const json all = full_config(cfg);
  json echo;
  echo["subcommand"] = cfg.subcommand;
  if (const auto it = kEchoFields.find(cfg.subcommand); it != kEchoFields.end()) {
    for (const auto& key : it->second) echo[key] = all.at(key);
  }
  return echo;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Gauss and Jacobi sums over finite fields and Z/nZ, with simulated quantum phase estimation", "gaussq"};
  app.require_subcommand(1);

  const auto add_field = [&](CLI::App* sub, bool require_alpha) {
    sub->add_option("--p", cfg.p, "field characteristic (prime)")->required();
    sub->add_option("--r", cfg.r, "extension degree")->capture_default_str();
    auto* a = sub->add_option("--alpha", cfg.alpha, "character index")->expected(1);
    if (require_alpha) a->required();
    sub->add_option("--g", cfg.g, "primitive element override (canonical encoding)");
  };
  const auto add_estimation = [&](CLI::App* sub) {
    sub->add_option("--t", cfg.t, "sample budget")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--strategy", cfg.strategy, "two-basis | adaptive")
        ->check(CLI::IsMember({"two-basis", "adaptive"}))
        ->capture_default_str();
  };

  std::map<CLI::App*, std::function<json()>> handlers;

  auto* field_gauss = app.add_subcommand("field-gauss", "G(F_{p^r}, chi, beta) by direct summation");
  add_field(field_gauss, true);
  field_gauss->add_option("--beta", cfg.beta, "additive character index (canonical encoding)")->capture_default_str();
  handlers[field_gauss] = [&] { return cmd_field_gauss(cfg); };

  auto* ring_gauss = app.add_subcommand("ring-gauss", "G(Z/nZ, chi, beta) through the reduction pipeline");
  ring_gauss->add_option("--n", cfg.n, "modulus")->required();
  ring_gauss->add_option("--alpha", cfg.alpha, "character indices per prime-power component")->delimiter(',');
  ring_gauss->add_option("--beta", cfg.beta, "additive character index")->capture_default_str();
  ring_gauss->add_option("--estimator", cfg.estimator, "exact | quantum")
      ->check(CLI::IsMember({"exact", "quantum"}))
      ->capture_default_str();
  add_estimation(ring_gauss);
  handlers[ring_gauss] = [&] { return cmd_ring_gauss(cfg); };

  auto* jacobi = app.add_subcommand("jacobi", "J(chi, psi) directly and through Gauss sums");
  add_field(jacobi, true);
  jacobi->add_option("--psi", cfg.psi, "index of the second character")->required();
  handlers[jacobi] = [&] { return cmd_jacobi(cfg); };

  auto* eigenphase = app.add_subcommand("eigenphase", "simulate chi^2 o F_beta on |chi> and read off the phase");
  add_field(eigenphase, true);
  eigenphase->add_option("--beta", cfg.beta, "additive character index")->capture_default_str();
  handlers[eigenphase] = [&] { return cmd_eigenphase(cfg); };

  auto* phase_estimate = app.add_subcommand("phase-estimate", "sampled phase estimation of G(F_{p^r}, chi, beta)");
  add_field(phase_estimate, true);
  phase_estimate->add_option("--beta", cfg.beta, "additive character index")->capture_default_str();
  add_estimation(phase_estimate);
  handlers[phase_estimate] = [&] { return cmd_phase_estimate(cfg); };

  auto* dlog = app.add_subcommand("dlog-reduce", "discrete log from a Gauss-sum phase oracle");
  add_field(dlog, false);
  dlog->add_option("--x", cfg.x, "target element (canonical encoding)")->required();
  dlog->add_option("--mode", cfg.mode, "exact | noisy")->check(CLI::IsMember({"exact", "noisy"}))->capture_default_str();
  dlog->add_option("--epsilon", cfg.epsilon, "noisy oracle phase error bound (radians)")->capture_default_str();
  dlog->add_option("--seed", cfg.seed, "oracle noise seed")->capture_default_str();
  handlers[dlog] = [&] { return cmd_dlog_reduce(cfg); };

  auto* walk = app.add_subcommand("walk", "partial sums of the Gauss sum as a walk in C (F_p only)");
  walk->add_option("--p", cfg.p, "prime")->required();
  walk->add_option("--alpha", cfg.alpha, "character index")->required()->expected(1);
  walk->add_option("--g", cfg.g, "generator override");
  walk->add_option("--ordering", cfg.ordering, "sequential | generator")
      ->check(CLI::IsMember({"sequential", "generator"}))
      ->capture_default_str();
  handlers[walk] = [&] { return json(nullptr); };

  auto* autocorr = app.add_subcommand("autocorr", "autocorrelation of the walk steps at shift s");
  autocorr->add_option("--p", cfg.p, "prime")->required();
  autocorr->add_option("--alpha", cfg.alpha, "character index")->required()->expected(1);
  autocorr->add_option("--g", cfg.g, "generator override");
  autocorr->add_option("--ordering", cfg.ordering, "sequential | generator")
      ->check(CLI::IsMember({"sequential", "generator"}))
      ->capture_default_str();
  autocorr->add_option("--s", cfg.s, "shift, 0 < s < p-1")->required();
  handlers[autocorr] = [&] { return cmd_autocorr(cfg); };

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite at small scale");
  handlers[selftest] = [&] { return json(nullptr); };

  for (auto& [sub, _] : handlers) {
    sub->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--output", cfg.output, "write to this path instead of stdout");
    sub->add_flag("--timings", cfg.timings, "include wall-clock timings (breaks byte-identical output)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  if (sub == walk && !sub->get_option("--format")->count()) cfg.format = "csv";

  try {
    const auto start = std::chrono::steady_clock::now();
    json result;
    std::string csv;
    int code = 0;
    if (sub == walk) {
      const WalkTrace trace = walk_of(cfg);
      if (cfg.format == "csv") {
        std::ostringstream os;
        write_walk_csv(trace, os);
        csv = os.str();
      } else {
        json pts = json::array();
        for (const auto& z : trace.points) pts.push_back({z.real(), z.imag()});
        result = {{"points", pts}, {"endpoint", complex_json(trace.points.back())}};
      }
    } else if (sub == selftest) {
      const SelftestReport rep = run_selftest();
      result = {{"passed", rep.passed}, {"failed", rep.failed}, {"checks", rep.checks}};
      code = rep.failed == 0 ? 0 : 1;
    } else {
      result = handlers.at(sub)();
    }
    if (!csv.empty()) {
      emit(cfg, csv, out);
      return code;
    }
    json timings = json::object();
    if (cfg.timings) {
      timings["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    const json record = {{"config", config_echo(cfg)}, {"result", result}, {"timings", timings}};
    emit(cfg, record.dump() + "\n", out);
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gaussq::cli
