#include "gaussq/gauss.hpp"

#include <cmath>
#include <numbers>

namespace gaussq {

std::string to_string(GaussMethod m) {
  switch (m) {
    case GaussMethod::direct: return "direct";
    case GaussMethod::quadratic_closed: return "quadratic_closed";
    case GaussMethod::trivial_closed: return "trivial_closed";
    case GaussMethod::periodic_reduction: return "periodic_reduction";
    case GaussMethod::primitive_factored: return "primitive_factored";
    case GaussMethod::crt_product: return "crt_product";
    case GaussMethod::quantum_estimated: return "quantum_estimated";
  }
  return "unknown";
}

double GaussSumResult::gamma_turns() const { return gamma / (2.0 * std::numbers::pi); }

GaussSumResult make_result(std::complex<double> value, GaussMethod method, double error_bound) {
  GaussSumResult res;
  res.method = method;
  res.error_bound = error_bound;
  if (std::abs(value) < kZeroSumTolerance) {
    res.zero_sum = true;
    return res;
  }
  res.value = value;
  res.norm = std::abs(value);
  res.gamma = phase_in_turn_range(value);
  return res;
}

namespace {

void check_direct_bound(std::uint64_t size) {
  if (size > kDirectSumBound) throw DomainError("direct summation limited to size <= 2^20");
}

double three_sigma_phase_bound(std::uint64_t samples) { return 3.0 * std::sqrt(2.0 / static_cast<double>(samples)); }

}  // namespace

std::complex<double> gauss_sum_direct_field(const MultChar& chi, FieldElement beta) {
  const FieldCtx& ctx = chi.ctx();
  check_direct_bound(ctx.order());
  if (!ctx.contains(beta)) throw DomainError("gauss_sum_direct_field: beta out of range");
  std::complex<double> sum{};
  if (ctx.tabulated()) {
    // zeta_n^{alpha log x} zeta_p^{Tr(beta x)} as one angle over n p.
    const std::uint64_t n = ctx.group_order();
    const std::uint64_t p = ctx.p();
    const double unit = 2.0 * std::numbers::pi / static_cast<double>(n * p);
    for (std::uint64_t x = 1; x < ctx.order(); ++x) {
      const FieldElement fx{static_cast<std::uint32_t>(x)};
      const std::uint64_t k = mulmod(chi.alpha(), ctx.log_table(fx), n) * p + ctx.trace_table(ctx.mul(beta, fx)) * n;
      sum += std::polar(1.0, unit * static_cast<double>(k % (n * p)));
    }
    return sum;
  }
  const FieldAddChar e{chi.field(), beta};
  for (std::uint64_t x = 1; x < ctx.order(); ++x) {
    const FieldElement fx{static_cast<std::uint32_t>(x)};
    sum += (*chi.eval(fx).turn + e.turn(fx)).value();
  }
  return sum;
}

Eigen::MatrixXcd gauss_sum_table(const FieldPtr& ctx) {
  const std::uint64_t q = ctx->order();
  if (q > (std::uint64_t{1} << 11)) throw DomainError("gauss_sum_table: field too large for a dense table");
  const std::uint64_t n = ctx->group_order();
  const auto qi = static_cast<Eigen::Index>(q);
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd chars = Eigen::MatrixXcd::Zero(ni, qi);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t x = 1; x < q; ++x) {
      const std::uint64_t k = mulmod(a, ctx->log_table(FieldElement{static_cast<std::uint32_t>(x)}), n);
      chars(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(x)) = root_of_unity(static_cast<std::int64_t>(k), n);
    }
  }
  Eigen::MatrixXcd additive(qi, qi);
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t b = 0; b < q; ++b) {
      const FieldElement bx = ctx->mul(FieldElement{static_cast<std::uint32_t>(b)}, FieldElement{static_cast<std::uint32_t>(x)});
      additive(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(b)) = root_of_unity(ctx->trace_table(bx), ctx->p());
    }
  }
  return chars * additive;
}

std::complex<double> beta_factor(const MultChar& chi, FieldElement beta) {
  if (beta.is_zero()) throw DomainError("beta_factor: beta must be nonzero");
  return chi(chi.ctx().inv(beta));
}

std::complex<double> quadratic_gauss_closed(std::uint64_t p, unsigned r) {
  if (p == 2 || !is_prime(p)) throw DomainError("quadratic_gauss_closed: p must be an odd prime");
  if (r < 1) throw DomainError("quadratic_gauss_closed: r must be at least 1");
  const double root = std::sqrt(static_cast<double>(ipow(p, r)));
  if (p % 4 == 1) return (r % 2 == 0) ? -root : root;
  static constexpr std::complex<double> minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return -minus_i_powers[r % 4] * root;
}

std::complex<double> jacobi_direct(const MultChar& chi, const MultChar& psi) {
  const FieldCtx& ctx = chi.ctx();
  check_direct_bound(ctx.order());
  if (chi.field() != psi.field()) throw DomainError("jacobi_direct: characters over different fields");
  std::complex<double> sum{};
  if (ctx.tabulated()) {
    const std::uint64_t n = ctx.group_order();
    const double unit = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::uint64_t x = 2; x < ctx.order(); ++x) {
      const FieldElement fx{static_cast<std::uint32_t>(x)};
      const std::uint64_t k = mulmod(chi.alpha(), ctx.log_table(fx), n) +
                              mulmod(psi.alpha(), ctx.log_table(ctx.sub(ctx.one(), fx)), n);
      sum += std::polar(1.0, unit * static_cast<double>(k % n));
    }
    return sum;
  }
  for (std::uint64_t x = 0; x < ctx.order(); ++x) {
    const FieldElement fx{static_cast<std::uint32_t>(x)};
    const CharValue a = chi.eval(fx);
    const CharValue b = psi.eval(ctx.sub(ctx.one(), fx));
    if (a.is_zero() || b.is_zero()) continue;
    sum += (*a.turn + *b.turn).value();
  }
  return sum;
}

std::complex<double> jacobi_via_gauss(const MultChar& chi, const MultChar& psi) {
  const MultChar prod = char_mul(chi, psi);
  if (chi.is_trivial() || psi.is_trivial() || prod.is_trivial()) {
    throw DomainError("jacobi_via_gauss: chi, psi and chi*psi must all be nontrivial");
  }
  const FieldElement one = chi.ctx().one();
  return gauss_sum_direct_field(chi, one) * gauss_sum_direct_field(psi, one) / gauss_sum_direct_field(prod, one);
}

GaussSumResult estimate_gauss_field(const MultChar& chi, FieldElement beta, std::uint64_t samples,
                                    qsim::EstimationStrategy strategy, Rng& rng) {
  const auto eig = qsim::eigenphase_gauss_field(chi, beta);
  const auto est = qsim::estimate_phase(qsim::RelativePhaseSource{eig.gamma}, samples, strategy, rng);
  const double root = std::sqrt(static_cast<double>(chi.ctx().order()));
  return make_result(std::polar(root, est.gamma_hat), GaussMethod::quantum_estimated, three_sigma_phase_bound(samples));
}

std::complex<double> gauss_sum_direct_ring(const DirichletChar& chi, std::uint64_t beta) {
  const std::uint64_t n = chi.modulus();
  check_direct_bound(n);
  const RingAddChar e{n, beta % n};
  std::complex<double> sum{};
  for (std::uint64_t x = 0; x < n; ++x) {
    const CharValue v = chi.eval(x);
    if (!v.is_zero()) sum += (*v.turn + e.turn(x)).value();
  }
  return sum;
}

Eigen::VectorXcd dirichlet_values(const DirichletChar& chi) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(chi.modulus()));
  for (std::uint64_t x = 0; x < chi.modulus(); ++x) v(static_cast<Eigen::Index>(x)) = chi(x);
  return v;
}

Eigen::MatrixXcd dft_matrix(std::uint64_t n) {
  if (n > (std::uint64_t{1} << 12)) throw DomainError("dft_matrix: n too large for a dense matrix");
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd w(ni, ni);
  for (std::uint64_t b = 0; b < n; ++b) {
    for (std::uint64_t x = 0; x < n; ++x) {
      w(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(x)) =
          root_of_unity(static_cast<std::int64_t>(mulmod(b, x, n)), n);
    }
  }
  return w;
}

std::vector<CrtComponent> crt_coefficients(std::uint64_t n) {
  if (n < 1) throw DomainError("crt_coefficients: n must be positive");
  std::vector<CrtComponent> out;
  for (const PrimePower& pp : factorize(n)) {
    out.push_back({pp, invmod((n / pp.value) % pp.value, pp.value)});
  }
  return out;
}

RingGaussPipeline::RingGaussPipeline(DirichletChar chi, RingEstimator estimator)
    : chi_(std::move(chi)), estimator_(estimator) {
  const auto crt = crt_coefficients(chi_.modulus());
  const Rng root_rng(estimator_.seed);
  for (std::size_t i = 0; i < crt.size(); ++i) {
    Component c{crt[i], ComponentKind::trivial, 1, 0, {}, 0, GaussMethod::trivial_closed};
    if (!chi_.component_trivial(i)) {
      c.conductor = chi_.component_conductor(i);
      const PrimePower& pp = crt[i].modulus;
      const unsigned e = valuation(c.conductor, pp.prime, pp.exponent);
      c.period_shift = pp.exponent - e;
      c.kind = c.period_shift == 0 ? ComponentKind::primitive : ComponentKind::periodic;

      // chi_c on Z/cZ: for prime-power c the units of Z/cZ and Z/p^rZ agree,
      // so the residue itself represents its class.
      std::vector<CharValue> values(c.conductor);
      for (std::uint64_t y = 0; y < c.conductor; ++y) values[y] = chi_.component_eval(i, y);

      if (estimator_.kind == RingEstimator::Kind::exact) {
        std::complex<double> sum{};
        for (std::uint64_t y = 0; y < c.conductor; ++y) {
          if (!values[y].is_zero()) sum += (*values[y].turn + Turn(static_cast<std::int64_t>(y), c.conductor)).value();
        }
        c.base_sum = sum;
        if (c.kind == ComponentKind::periodic) {
          c.method = GaussMethod::periodic_reduction;
        } else {
          c.method = e >= 2 ? GaussMethod::direct : GaussMethod::primitive_factored;
        }
      } else {
        if (c.conductor > kStateVectorBound) throw DomainError("quantum estimator: conductor exceeds statevector bound");
        const auto eig = qsim::eigenphase_gauss_ring(values);
        Rng rng = root_rng.split(i);
        const auto est = qsim::estimate_phase(qsim::RelativePhaseSource{static_cast<double>(eig.gamma)},
                                              estimator_.samples, estimator_.strategy, rng);
        c.base_sum = std::polar(std::sqrt(static_cast<double>(c.conductor)), est.gamma_hat);
        c.phase_error_bound = three_sigma_phase_bound(estimator_.samples);
        c.method = GaussMethod::quantum_estimated;
      }
    }
    components_.push_back(c);
  }
}

std::complex<double> RingGaussPipeline::component_value(std::size_t i, std::uint64_t beta) const {
  const Component& c = components_[i];
  const PrimePower& pp = c.crt.modulus;
  const std::uint64_t b = mulmod(beta % pp.value, c.crt.J, pp.value);
  if (c.kind == ComponentKind::trivial) {
    const unsigned j = valuation(b, pp.prime, pp.exponent);
    const double base = static_cast<double>(pp.value / pp.prime);
    if (j >= pp.exponent) return base * static_cast<double>(pp.prime - 1);
    if (j + 1 == pp.exponent) return -base;
    return 0.0;
  }
  const std::uint64_t shift = ipow(pp.prime, static_cast<unsigned>(c.period_shift));
  if (b % shift != 0) return 0.0;
  const std::uint64_t reduced = b / shift;
  if (reduced % pp.prime == 0) return 0.0;
  return static_cast<double>(shift) * std::conj(chi_.component_eval(i, reduced).value()) * c.base_sum;
}

GaussSumResult RingGaussPipeline::operator()(std::uint64_t beta) const {
  std::complex<double> value{1.0, 0.0};
  double error = 0;
  bool quantum = false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    value *= component_value(i, beta);
    error += components_[i].phase_error_bound;
    quantum = quantum || components_[i].method == GaussMethod::quantum_estimated;
  }
  GaussMethod method = GaussMethod::direct;
  if (quantum) {
    method = GaussMethod::quantum_estimated;
  } else if (components_.size() > 1) {
    method = GaussMethod::crt_product;
  } else if (components_.size() == 1) {
    method = components_.front().method;
  }
  return make_result(value, method, error);
}

GaussSumResult ring_gauss_pipeline(const DirichletChar& chi, std::uint64_t beta, RingEstimator estimator) {
  return RingGaussPipeline(chi, estimator)(beta);
}

}  // namespace gaussq
