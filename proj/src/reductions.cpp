#include "gaussq/reductions.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "gaussq/gauss.hpp"

namespace gaussq {

GaussPhaseOracle::GaussPhaseOracle(FieldPtr ctx, GaussOracle config)
    : ctx_(std::move(ctx)), config_(config), rng_(config.seed) {
  if (config_.epsilon < 0) throw DomainError("GaussPhaseOracle: epsilon must be nonnegative");
  if (!ctx_->tabulated()) throw DomainError("GaussPhaseOracle: field exceeds the direct-sum bound");
  cache_.assign(ctx_->order(), std::numeric_limits<double>::quiet_NaN());
  const std::uint64_t n = ctx_->group_order();
  chi_of_power_.resize(n);
  trace_of_power_.resize(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    chi_of_power_[j] = root_of_unity(static_cast<std::int64_t>(j), n);
    trace_of_power_[j] = ctx_->trace_table(ctx_->exp_table(j));
  }
  additive_roots_.resize(ctx_->p());
  for (std::uint64_t k = 0; k < ctx_->p(); ++k) additive_roots_[k] = root_of_unity(static_cast<std::int64_t>(k), ctx_->p());
}

double GaussPhaseOracle::query(FieldElement beta) {
  if (beta.is_zero()) throw DomainError("GaussPhaseOracle: beta must be nonzero");
  if (ctx_->group_order() < 2) throw DomainError("GaussPhaseOracle: F_2 has no nontrivial character");
  ++calls_;
  double& slot = cache_[beta.idx];
  if (std::isnan(slot)) {
    const std::uint64_t n = ctx_->group_order();
    const std::uint64_t shift = ctx_->log_table(beta);
    std::complex<double> sum{};
    for (std::uint64_t j = 0, k = shift; j < n; ++j, k = k + 1 == n ? 0 : k + 1)
      sum += chi_of_power_[j] * additive_roots_[trace_of_power_[k]];
    slot = phase_in_turn_range(sum);
  }
  if (config_.mode == GaussOracle::Mode::exact) return slot;
  return slot + rng_.uniform(-config_.epsilon, config_.epsilon);
}

namespace {

double frac(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

double circular_distance(double a, double b) {
  const double d = frac(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

DlogReduction dlog_via_gauss_oracle(const FieldPtr& ctx, FieldElement x, GaussPhaseOracle& oracle,
                                    double max_epsilon) {
  if (x.is_zero()) throw DomainError("dlog_via_gauss_oracle: x must be nonzero");
  if (!ctx->contains(x)) throw DomainError("dlog_via_gauss_oracle: x out of range");
  if (oracle.config().mode == GaussOracle::Mode::noisy && oracle.config().epsilon > max_epsilon) {
    throw DomainError("dlog_via_gauss_oracle: oracle epsilon exceeds the recovery threshold");
  }
  const std::uint64_t n = ctx->group_order();
  const std::uint64_t calls_before = oracle.calls();
  if (n == 1) return {0, 0};

  unsigned levels = 0;
  while ((std::uint64_t{1} << levels) < n) ++levels;

  const double base = oracle.query(ctx->one());
  std::vector<double> fraction(levels + 1);
  FieldElement power = x;
  for (unsigned m = 0; m <= levels; ++m) {
    const double gamma = oracle.query(power);
    fraction[m] = frac(-(gamma - base) / (2.0 * std::numbers::pi));
    power = ctx->mul(power, power);
  }

  double estimate = fraction[levels];
  for (unsigned m = levels; m-- > 0;) {
    const double lo = estimate / 2.0;
    const double hi = (estimate + 1.0) / 2.0;
    const double d_lo = circular_distance(lo, fraction[m]);
    const double d_hi = circular_distance(hi, fraction[m]);
    if (std::min(d_lo, d_hi) >= 0.25) {
      throw DomainError("dlog_via_gauss_oracle: oracle too noisy, phases are inconsistent at level " +
                        std::to_string(m));
    }
    estimate = d_lo <= d_hi ? lo : hi;
  }
  const auto ell = static_cast<std::uint64_t>(std::llround(estimate * static_cast<double>(n))) % n;
  if (ctx->pow(ctx->generator(), static_cast<std::int64_t>(ell)) != x) {
    throw DomainError("dlog_via_gauss_oracle: oracle too noisy, recovered exponent fails verification");
  }
  return {ell, oracle.calls() - calls_before};
}

namespace {

void check_walk_field(const MultChar& chi) {
  if (chi.ctx().r() != 1) throw DomainError("walks are defined over prime fields F_p only");
  if (chi.ctx().p() > kDirectSumBound) throw DomainError("walk: p exceeds 2^20");
}

std::vector<std::complex<double>> walk_steps(const MultChar& chi, WalkOrdering ordering, FieldElement beta) {
  const FieldCtx& ctx = chi.ctx();
  const FieldAddChar e{chi.field(), beta};
  const std::uint64_t p = ctx.p();
  std::vector<std::complex<double>> steps(p);
  const auto term = [&](FieldElement x) { return x.is_zero() ? std::complex<double>{} : chi(x) * e(x); };
  if (ordering == WalkOrdering::sequential) {
    for (std::uint64_t x = 0; x < p; ++x) steps[x] = term(FieldElement{static_cast<std::uint32_t>(x)});
  } else {
    steps[0] = {};
    for (std::uint64_t j = 0; j + 1 < p; ++j) steps[j + 1] = term(ctx.exp_table(j));
  }
  return steps;
}

}  // namespace

WalkTrace walk_trace(const MultChar& chi, WalkOrdering ordering, FieldElement beta) {
  check_walk_field(chi);
  WalkTrace trace{ordering, {}, chi.ctx().p(), chi.alpha(), chi.generator().idx};
  const auto steps = walk_steps(chi, ordering, beta);
  trace.points.reserve(steps.size());
  std::complex<double> acc{};
  for (const auto& s : steps) {
    acc += s;
    trace.points.push_back(acc);
  }
  return trace;
}

std::complex<double> autocorrelation(const MultChar& chi, WalkOrdering ordering, std::uint64_t s) {
  check_walk_field(chi);
  const std::uint64_t p = chi.ctx().p();
  if (s == 0) throw DomainError("autocorrelation: shift s = 0 is trivially 1");
  if (s + 1 >= p) throw DomainError("autocorrelation: shift must satisfy 0 < s < p - 1");
  auto steps = walk_steps(chi, ordering, FieldElement{1});
  if (ordering == WalkOrdering::generator) steps.erase(steps.begin());  // cyclic over Z/(p-1)
  const std::uint64_t len = steps.size();
  std::complex<double> acc{};
  for (std::uint64_t j = 0; j < len; ++j) acc += steps[j] * std::conj(steps[(j + s) % len]);
  return acc / static_cast<double>(p - 1);
}

GeneratorAutocorrelation generator_autocorrelation_report(const MultChar& chi, std::uint64_t s, double tolerance) {
  const FieldCtx& ctx = chi.ctx();
  const double denom = static_cast<double>(ctx.p() - 1);
  GeneratorAutocorrelation rep;
  rep.empirical = autocorrelation(chi, WalkOrdering::generator, s);
  rep.field_element_reading = -chi(ctx.from_int(-static_cast<std::int64_t>(s))) / denom;
  rep.exponent_reading =
      -root_of_unity(-static_cast<std::int64_t>(mulmod(chi.alpha(), s, ctx.group_order())), ctx.group_order()) / denom;
  rep.matches_field_element_reading = std::abs(rep.empirical - rep.field_element_reading) <= tolerance;
  rep.matches_exponent_reading = std::abs(rep.empirical - rep.exponent_reading) <= tolerance;
  return rep;
}

void write_walk_csv(const WalkTrace& trace, std::ostream& out) {
  out << "t,re,im\n";
  char buf[96];
  for (std::size_t t = 0; t < trace.points.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", t, trace.points[t].real(), trace.points[t].imag());
    out << buf;
  }
}

void export_walk(const WalkTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("export_walk: cannot open " + path.string());
  write_walk_csv(trace, out);
  if (!out) throw std::runtime_error("export_walk: write failed for " + path.string());
}

std::string to_string(WalkOrdering ordering) {
  return ordering == WalkOrdering::sequential ? "sequential" : "generator";
}

}  // namespace gaussq
