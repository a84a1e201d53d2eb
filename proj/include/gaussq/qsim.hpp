#pragma once

// Dense statevector simulation of the subroutines behind Gauss-sum phase
// estimation: character states, field/ring Fourier transforms, phase
// kickback, exact amplitude amplification and the eigenphase transform.
//
// States are Eigen column vectors of std::complex<Real> indexed by the
// canonical element encoding (field) or the residue (ring).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gaussq/characters.hpp"
#include "gaussq/field.hpp"
#include "gaussq/numtheory.hpp"
#include "gaussq/rng.hpp"

namespace gaussq::qsim {

template <typename Real = double>
using StateVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

namespace detail {

inline void check_dim(std::uint64_t dim) {
  if (dim == 0 || dim > kStateVectorBound) {
    throw DomainError("statevector dimension " + std::to_string(dim) + " outside [1, 2^14]");
  }
}

inline void check_field(const FieldCtx& ctx) {
  check_dim(ctx.order());
  if (!ctx.tabulated()) throw DomainError("field is not tabulated");
}

/// zeta_n^k for k in [0, n).
template <typename Real>
std::vector<std::complex<Real>> roots(std::uint64_t n) {
  std::vector<std::complex<Real>> w(n);
  for (std::uint64_t k = 0; k < n; ++k) w[k] = std::complex<Real>(root_of_unity(static_cast<std::int64_t>(k), n));
  return w;
}

}  // namespace detail

template <typename Real = double>
StateVector<Real> basis_state(std::uint64_t dim, std::uint64_t idx) {
  detail::check_dim(dim);
  StateVector<Real> s = StateVector<Real>::Zero(static_cast<Eigen::Index>(dim));
  s(static_cast<Eigen::Index>(idx)) = Real(1);
  return s;
}

template <typename Real = double>
StateVector<Real> uniform_state(std::uint64_t dim) {
  detail::check_dim(dim);
  return StateVector<Real>::Constant(static_cast<Eigen::Index>(dim),
                                     std::complex<Real>(Real(1) / std::sqrt(Real(dim))));
}

/// |f> = f / ||f||_2 for f given by its values.
template <typename Real = double>
StateVector<Real> state_from_values(const std::vector<CharValue>& values) {
  detail::check_dim(values.size());
  StateVector<Real> s(static_cast<Eigen::Index>(values.size()));
  for (std::size_t x = 0; x < values.size(); ++x) s(static_cast<Eigen::Index>(x)) = std::complex<Real>(values[x].value());
  const Real norm = s.norm();
  if (norm == Real(0)) throw DomainError("state_from_values: zero function");
  return s / norm;
}

/// |chi> built directly from the character values.
template <typename Real = double>
StateVector<Real> char_state(const MultChar& chi) {
  detail::check_field(chi.ctx());
  std::vector<CharValue> v(chi.ctx().order());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = chi.eval(FieldElement{static_cast<std::uint32_t>(x)});
  return state_from_values<Real>(v);
}

template <typename Real = double>
StateVector<Real> char_state(const DirichletChar& chi) {
  std::vector<CharValue> v(chi.modulus());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = chi.eval(x);
  return state_from_values<Real>(v);
}

/// F_beta |x> = p^{-r/2} sum_y zeta_p^{Tr(beta x y)} |y>, dense O(p^{2r}) kernel.
template <typename Derived>
auto qft_field(const Eigen::MatrixBase<Derived>& state, const FieldCtx& ctx, FieldElement beta) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  detail::check_field(ctx);
  if (static_cast<std::uint64_t>(state.size()) != ctx.order()) throw DomainError("qft_field: dimension mismatch");
  if (beta.is_zero()) throw DomainError("qft_field: beta = 0 gives a non-invertible kernel");
  const std::uint64_t q = ctx.order();
  const std::uint64_t n = ctx.group_order();
  const auto w = detail::roots<Real>(ctx.p());
  // log(beta x y) and the trace of g^k, indexed by k mod (q-1)
  std::vector<std::uint32_t> trace_of_power(n);
  for (std::uint64_t k = 0; k < n; ++k) trace_of_power[k] = ctx.trace_table(ctx.exp_table(k));
  const std::uint64_t log_beta = ctx.log_table(beta);

  StateVector<Real> out(state.size());
  Scalar sum_all = state.sum();
  for (std::uint64_t y = 0; y < q; ++y) {
    if (y == 0) {
      out(0) = sum_all;
      continue;
    }
    const std::uint64_t shift = (log_beta + ctx.log_table(FieldElement{static_cast<std::uint32_t>(y)})) % n;
    Scalar acc = state(0);
    for (std::uint64_t x = 1; x < q; ++x) {
      const Scalar a = state(static_cast<Eigen::Index>(x));
      if (a == Scalar(0)) continue;
      std::uint64_t k = shift + ctx.log_table(FieldElement{static_cast<std::uint32_t>(x)});
      if (k >= n) k -= n;
      acc += w[trace_of_power[k]] * a;
    }
    out(static_cast<Eigen::Index>(y)) = acc;
  }
  return StateVector<Real>(out / std::sqrt(Real(q)));
}

/// Same transform factored as a basis change u = M^T x with M_ij = Tr(beta X^i X^j),
/// followed by r coordinate-wise p-point DFTs: O(p^r * r * p).
template <typename Derived>
auto qft_field_fast(const Eigen::MatrixBase<Derived>& state, const FieldCtx& ctx, FieldElement beta) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  detail::check_field(ctx);
  if (static_cast<std::uint64_t>(state.size()) != ctx.order()) throw DomainError("qft_field_fast: dimension mismatch");
  if (beta.is_zero()) throw DomainError("qft_field_fast: beta = 0 gives a non-invertible kernel");
  const std::uint64_t p = ctx.p();
  const unsigned r = ctx.r();
  const std::uint64_t q = ctx.order();

  std::vector<FieldElement> monomial(r);
  std::uint32_t stride = 1;
  for (unsigned i = 0; i < r; ++i, stride *= static_cast<std::uint32_t>(p)) monomial[i] = FieldElement{stride};
  std::vector<std::uint64_t> form(r * r);
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = 0; j < r; ++j) {
      form[i * r + j] = ctx.trace_table(ctx.mul(beta, ctx.mul(monomial[i], monomial[j])));
    }
  }

  StateVector<Real> work = StateVector<Real>::Zero(state.size());
  for (std::uint64_t x = 0; x < q; ++x) {
    const auto cx = ctx.coeffs(FieldElement{static_cast<std::uint32_t>(x)});
    std::uint64_t u = 0;
    std::uint64_t place = 1;
    for (unsigned j = 0; j < r; ++j, place *= p) {
      std::uint64_t uj = 0;
      for (unsigned i = 0; i < r; ++i) uj += cx[i] * form[i * r + j];
      u += (uj % p) * place;
    }
    work(static_cast<Eigen::Index>(u)) += state(static_cast<Eigen::Index>(x));
  }

  const auto w = detail::roots<Real>(p);
  std::vector<Scalar> line(p);
  std::uint64_t axis_stride = 1;
  for (unsigned j = 0; j < r; ++j, axis_stride *= p) {
    for (std::uint64_t base = 0; base < q; ++base) {
      if ((base / axis_stride) % p != 0) continue;
      for (std::uint64_t k = 0; k < p; ++k) {
        Scalar acc(0);
        for (std::uint64_t m = 0; m < p; ++m) acc += w[(k * m) % p] * work(static_cast<Eigen::Index>(base + m * axis_stride));
        line[k] = acc;
      }
      for (std::uint64_t k = 0; k < p; ++k) work(static_cast<Eigen::Index>(base + k * axis_stride)) = line[k];
    }
  }
  return StateVector<Real>(work / std::sqrt(Real(q)));
}

/// Turns F_1 psi into F_beta psi using (F_beta psi)(y) = (F_1 psi)(beta y).
template <typename Derived>
auto qft_field_rescale(const Eigen::MatrixBase<Derived>& transformed_at_one, const FieldCtx& ctx, FieldElement beta) {
  using Real = typename Derived::Scalar::value_type;
  if (beta.is_zero()) throw DomainError("qft_field_rescale: beta = 0");
  StateVector<Real> out(transformed_at_one.size());
  for (std::uint64_t y = 0; y < ctx.order(); ++y) {
    out(static_cast<Eigen::Index>(y)) =
        transformed_at_one(static_cast<Eigen::Index>(ctx.mul(beta, FieldElement{static_cast<std::uint32_t>(y)}).idx));
  }
  return out;
}

/// Fourier transform over Z/nZ, kernel zeta_n^{xy} / sqrt(n).
template <typename Derived>
auto qft_ring(const Eigen::MatrixBase<Derived>& state, std::uint64_t n) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  detail::check_dim(n);
  if (static_cast<std::uint64_t>(state.size()) != n) throw DomainError("qft_ring: dimension mismatch");
  const auto w = detail::roots<Real>(n);
  StateVector<Real> out(state.size());
  for (std::uint64_t y = 0; y < n; ++y) {
    Scalar acc(0);
    std::uint64_t k = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      acc += w[k] * state(static_cast<Eigen::Index>(x));
      k += y;
      if (k >= n) k -= n;
    }
    out(static_cast<Eigen::Index>(y)) = acc;
  }
  return StateVector<Real>(out / std::sqrt(Real(n)));
}

/// |x> -> zeta_n^{f(x)} |x>, applied on the support of the state.
template <typename Derived, typename Fn>
auto phase_kickback(const Eigen::MatrixBase<Derived>& state, Fn&& f, std::uint64_t n) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  StateVector<Real> out = state;
  for (Eigen::Index x = 0; x < out.size(); ++x) {
    if (out(x) == Scalar(0)) continue;
    const std::uint64_t fx = f(static_cast<std::uint64_t>(x));
    out(x) *= Scalar(root_of_unity(static_cast<std::int64_t>(fx % n), n));
  }
  return out;
}

template <typename Real = double>
struct KickbackRegisters {
  StateVector<Real> system;
  StateVector<Real> ancilla;
  /// || joint - system (x) ancilla ||: zero when the ancilla factors out.
  Real factorization_residual;
};

/// Register-level kickback: ancilla |1> is Fourier transformed to |1^>, then
/// f(x) is subtracted from it mod n; the phase lands on the system register.
template <typename Derived, typename Fn>
auto phase_kickback_register(const Eigen::MatrixBase<Derived>& state, Fn&& f, std::uint64_t n) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  if (n < 1 || n > 64) throw DomainError("phase_kickback_register: ancilla size must be in [1, 64]");
  const StateVector<Real> ancilla = qft_ring(basis_state<Real>(n, 1 % n), n);
  using Joint = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Joint before = state * ancilla.transpose();
  Joint after = Joint::Zero(before.rows(), before.cols());
  for (Eigen::Index x = 0; x < before.rows(); ++x) {
    const std::uint64_t fx = f(static_cast<std::uint64_t>(x)) % n;
    for (std::uint64_t j = 0; j < n; ++j) {
      after(x, static_cast<Eigen::Index>((j + n - fx) % n)) = before(x, static_cast<Eigen::Index>(j));
    }
  }
  KickbackRegisters<Real> regs;
  regs.ancilla = ancilla;
  regs.system = after * ancilla.conjugate();
  regs.factorization_residual = (after - regs.system * ancilla.transpose()).norm();
  return regs;
}

/// Exact amplitude amplification (phase-matched Grover iterations): prepares
/// the uniform superposition over {x : indicator(x) = 1} from the uniform
/// state over [0, dim), given the exact weight of the indicator.
template <typename Real = double, typename Indicator>
StateVector<Real> amplitude_amplify(std::uint64_t dim, Indicator&& indicator, std::uint64_t weight) {
  detail::check_dim(dim);
  if (weight == 0) throw DomainError("amplitude_amplify: weight must be at least 1");
  if (weight > dim) throw DomainError("amplitude_amplify: weight exceeds dimension");
  using Scalar = std::complex<Real>;
  const auto size = static_cast<Eigen::Index>(dim);
  std::vector<bool> marked(dim);
  for (std::uint64_t x = 0; x < dim; ++x) marked[x] = indicator(x) != 0;

  StateVector<Real> psi = uniform_state<Real>(dim);
  const StateVector<Real> start = psi;
  const double angle = std::asin(std::sqrt(static_cast<double>(weight) / static_cast<double>(dim)));
  if (weight < dim) {
    const auto iterations = static_cast<std::uint64_t>(std::ceil(std::numbers::pi / (4.0 * angle) - 0.5));
    const double ratio = std::min(1.0, std::sin(std::numbers::pi / (4.0 * static_cast<double>(iterations) + 2.0)) / std::sin(angle));
    const double phi = 2.0 * std::asin(ratio);
    const Scalar phase_factor = Scalar(std::polar(1.0, phi)) - Scalar(1);
    for (std::uint64_t it = 0; it < iterations; ++it) {
      for (Eigen::Index x = 0; x < size; ++x) {
        if (marked[static_cast<std::size_t>(x)]) psi(x) *= Scalar(1) + phase_factor;
      }
      // -(I + (e^{i phi} - 1)|s><s|)
      const Scalar overlap = start.dot(psi);
      psi = -(psi + phase_factor * overlap * start);
    }
  }
  Real marked_mass(0);
  Scalar marked_sum(0);
  for (Eigen::Index x = 0; x < size; ++x) {
    if (!marked[static_cast<std::size_t>(x)]) continue;
    marked_mass += std::norm(psi(x));
    marked_sum += psi(x);
  }
  if (marked_mass < Real(1) - Real(1e-10)) {
    throw DomainError("amplitude_amplify: final fidelity " + std::to_string(static_cast<double>(marked_mass)) +
                      " below threshold; weight does not match the indicator");
  }
  // Strip the global phase and any leakage outside the marked set.
  const Scalar unphase = std::conj(marked_sum) / std::abs(marked_sum);
  for (Eigen::Index x = 0; x < size; ++x) psi(x) = marked[static_cast<std::size_t>(x)] ? psi(x) * unphase : Scalar(0);
  return StateVector<Real>(psi / psi.norm());
}

/// |chi> via amplitude amplification onto F^* followed by kickback of
/// alpha * log_g(x) mod (p^r - 1).
template <typename Real = double>
StateVector<Real> prepare_char_state(const MultChar& chi) {
  const FieldCtx& ctx = chi.ctx();
  detail::check_field(ctx);
  const std::uint64_t q = ctx.order();
  const std::uint64_t n = ctx.group_order();
  const StateVector<Real> units = amplitude_amplify<Real>(q, [](std::uint64_t x) { return x != 0; }, q - 1);
  const std::uint64_t alpha = chi.alpha();
  return phase_kickback(
      units,
      [&](std::uint64_t x) { return mulmod(alpha, ctx.log_table(FieldElement{static_cast<std::uint32_t>(x)}), n); },
      n);
}

template <typename Real = double>
struct EigenphaseResult {
  Real gamma;                   ///< arg of the eigenvalue, in [0, 2pi)
  std::complex<Real> eigenvalue;
  Real residual;                ///< || out - eigenvalue * in ||
  Real amplitude_at_zero;       ///< |amp(0)| after the Fourier step
};

/// chi^2 o F_beta, with the chi^2 phase applied on the unit support only.
/// The transform at beta = 1 is computed once; other beta are a relabeling.
template <typename Real = double>
class FieldEigenTransform {
 public:
  FieldEigenTransform(const MultChar& chi, StateVector<Real> input)
      : chi_(chi), input_(std::move(input)), at_one_(qft_field(input_, chi.ctx(), chi.ctx().one())) {
    const std::uint64_t q = chi.ctx().order();
    square_.resize(static_cast<Eigen::Index>(q));
    for (std::uint64_t y = 0; y < q; ++y) {
      const auto v = chi(FieldElement{static_cast<std::uint32_t>(y)});
      square_(static_cast<Eigen::Index>(y)) = std::complex<Real>(v * v);
    }
  }

  const StateVector<Real>& input() const { return input_; }

  StateVector<Real> fourier(FieldElement beta) const { return qft_field_rescale(at_one_, chi_.ctx(), beta); }

  StateVector<Real> apply(FieldElement beta) const {
    StateVector<Real> out = fourier(beta);
    for (Eigen::Index y = 1; y < out.size(); ++y) out(y) *= square_(y);
    return out;
  }

  EigenphaseResult<Real> eigenphase(FieldElement beta) const {
    const StateVector<Real> hat = fourier(beta);
    const StateVector<Real> out = apply(beta);
    EigenphaseResult<Real> res;
    res.eigenvalue = input_.dot(out);
    res.residual = (out - res.eigenvalue * input_).norm();
    res.gamma = static_cast<Real>(phase_in_turn_range(std::complex<double>(res.eigenvalue)));
    res.amplitude_at_zero = std::abs(hat(0));
    return res;
  }

 private:
  MultChar chi_;
  StateVector<Real> input_;
  StateVector<Real> at_one_;
  StateVector<Real> square_;
};

inline constexpr double kEigenResidualTolerance = 1e-9;

/// Phase gamma with G(F, chi, beta) = sqrt(p^r) e^{i gamma}, read off the
/// eigenvalue of chi^2 o F_beta on the prepared |chi>.
template <typename Real = double>
EigenphaseResult<Real> eigenphase_gauss_field(const MultChar& chi, FieldElement beta) {
  if (chi.is_trivial()) throw DomainError("eigenphase_gauss_field: character must be nontrivial");
  if (beta.is_zero()) throw DomainError("eigenphase_gauss_field: beta must be nonzero");
  const FieldEigenTransform<Real> transform(chi, prepare_char_state<Real>(chi));
  auto res = transform.eigenphase(beta);
  if (!(res.residual <= Real(kEigenResidualTolerance))) {
    throw std::runtime_error("eigenphase_gauss_field: residual " + std::to_string(static_cast<double>(res.residual)) +
                             " exceeds tolerance");
  }
  return res;
}

/// Ring version for a primitive character given by its values on Z/cZ:
/// chi^2 o F applied to |chi> has eigenvalue G(Z/cZ, chi, 1) / sqrt(c).
template <typename Real = double>
EigenphaseResult<Real> eigenphase_gauss_ring(const std::vector<CharValue>& values) {
  const std::uint64_t c = values.size();
  const StateVector<Real> in = state_from_values<Real>(values);
  const StateVector<Real> hat = qft_ring(in, c);
  StateVector<Real> out = hat;
  for (std::uint64_t y = 0; y < c; ++y) {
    const auto v = values[y].value();
    out(static_cast<Eigen::Index>(y)) = values[y].is_zero() ? hat(static_cast<Eigen::Index>(y))
                                                            : hat(static_cast<Eigen::Index>(y)) * std::complex<Real>(v * v);
  }
  EigenphaseResult<Real> res;
  res.eigenvalue = in.dot(out);
  res.residual = (out - res.eigenvalue * in).norm();
  res.gamma = static_cast<Real>(phase_in_turn_range(std::complex<double>(res.eigenvalue)));
  res.amplitude_at_zero = std::abs(hat(0));
  if (!(res.residual <= Real(kEigenResidualTolerance))) {
    throw std::runtime_error("eigenphase_gauss_ring: residual " + std::to_string(static_cast<double>(res.residual)) +
                             " exceeds tolerance (character not primitive?)");
  }
  return res;
}

template <typename Real = double>
EigenphaseResult<Real> eigenphase_gauss_ring(const DirichletChar& chi) {
  if (!is_primitive(chi)) throw DomainError("eigenphase_gauss_ring: character must be primitive");
  std::vector<CharValue> values(chi.modulus());
  for (std::uint64_t x = 0; x < values.size(); ++x) values[x] = chi.eval(x);
  return eigenphase_gauss_ring<Real>(values);
}

// ---------------------------------------------------------------------------
// Phase estimation

/// Outcome m_phi (true) with probability 1/2 + 1/2 cos(gamma - phi), the
/// orthogonal outcome m_phi^perp (false) otherwise.
inline bool sample_phase_measurement(double gamma, double phi, Rng& rng) {
  return rng.bernoulli(0.5 + 0.5 * std::cos(gamma - phi));
}

/// (|stale> + e^{i gamma}|chi>)/sqrt(2); the stale component is one extra
/// basis dimension appended after the chi register.
template <typename Derived>
auto stale_superposition(const Eigen::MatrixBase<Derived>& chi_state, double gamma) {
  using Real = typename Derived::Scalar::value_type;
  StateVector<Real> out = StateVector<Real>::Zero(chi_state.size() + 1);
  out.head(chi_state.size()) = chi_state * std::complex<Real>(std::polar(1.0, gamma));
  out(chi_state.size()) = Real(1);
  return StateVector<Real>(out / std::sqrt(Real(2)));
}

/// |<m_phi | joint>|^2 with m_phi = (|stale> + e^{i phi}|chi>)/sqrt(2).
template <typename DerivedA, typename DerivedB>
double measurement_probability(const Eigen::MatrixBase<DerivedA>& joint, const Eigen::MatrixBase<DerivedB>& chi_state,
                               double phi) {
  using Real = typename DerivedA::Scalar::value_type;
  const StateVector<Real> axis = stale_superposition(chi_state, phi);
  return static_cast<double>(std::norm(axis.dot(joint)));
}

/// One-qubit source of relative-phase samples for a known phase.
struct RelativePhaseSource {
  double gamma;
  bool operator()(double phi, Rng& rng) const { return sample_phase_measurement(gamma, phi, rng); }
};

enum class EstimationStrategy { two_basis, adaptive };

struct BasisCount {
  double phi;
  std::uint64_t shots;
  std::uint64_t hits;  ///< outcomes m_phi
};

struct PhaseEstimate {
  double gamma_hat;
  std::uint64_t samples_used;
  std::vector<BasisCount> per_basis_counts;
  std::uint64_t seed;
};

namespace detail {

template <typename Source>
BasisCount measure(Source& source, double phi, std::uint64_t shots, Rng& rng) {
  BasisCount c{phi, shots, 0};
  for (std::uint64_t i = 0; i < shots; ++i) c.hits += source(phi, rng) ? 1 : 0;
  return c;
}

inline double frequency_signal(const BasisCount& c) {
  return 2.0 * static_cast<double>(c.hits) / static_cast<double>(c.shots) - 1.0;
}

inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0) a += two_pi;
  return a >= two_pi ? 0.0 : a;
}

}  // namespace detail

/// Estimates gamma from t single-shot measurements of the relative-phase
/// qubit. two_basis: t/2 shots at phi = 0 (cos) and t/2 at phi = pi/2 (sin).
/// adaptive: a quarter of the budget for a two-basis start, then rounds at
/// phi = gamma_hat + pi/2 that recenter on the running estimate.
template <typename Source>
PhaseEstimate estimate_phase(Source&& source, std::uint64_t t, EstimationStrategy strategy, Rng& rng) {
  if (t < 2) throw DomainError("estimate_phase: sample budget t must be at least 2");
  PhaseEstimate est{0.0, 0, {}, rng.seed()};
  const auto two_basis = [&](std::uint64_t budget) {
    const std::uint64_t n0 = budget / 2;
    est.per_basis_counts.push_back(detail::measure(source, 0.0, n0, rng));
    const double c = detail::frequency_signal(est.per_basis_counts.back());
    est.per_basis_counts.push_back(detail::measure(source, std::numbers::pi / 2, budget - n0, rng));
    const double s = detail::frequency_signal(est.per_basis_counts.back());
    return detail::wrap_angle(std::atan2(s, c));
  };

  if (strategy == EstimationStrategy::two_basis || t < 8) {
    est.gamma_hat = two_basis(t);
  } else {
    const std::uint64_t start = t / 4;
    double g = two_basis(start);
    const std::uint64_t rest = t - start;
    const std::uint64_t rounds[2] = {rest / 3, rest - rest / 3};
    for (const std::uint64_t shots : rounds) {
      const double phi = detail::wrap_angle(g + std::numbers::pi / 2);
      est.per_basis_counts.push_back(detail::measure(source, phi, shots, rng));
      const double signal = std::clamp(detail::frequency_signal(est.per_basis_counts.back()), -1.0, 1.0);
      g = detail::wrap_angle(g + std::asin(signal));
    }
    est.gamma_hat = g;
  }
  for (const auto& c : est.per_basis_counts) est.samples_used += c.shots;
  return est;
}

}  // namespace gaussq::qsim
