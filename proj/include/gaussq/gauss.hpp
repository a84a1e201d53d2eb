#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gaussq/characters.hpp"
#include "gaussq/field.hpp"
#include "gaussq/qsim.hpp"

namespace gaussq {

enum class GaussMethod {
  direct,
  quadratic_closed,
  trivial_closed,
  periodic_reduction,
  primitive_factored,
  crt_product,
  quantum_estimated,
};

std::string to_string(GaussMethod m);

/// value = norm * exp(i gamma); gamma in [0, 2pi). A vanishing sum has
/// norm 0, gamma 0 and zero_sum set.
struct GaussSumResult {
  std::complex<double> value;
  double norm = 0;
  double gamma = 0;
  GaussMethod method = GaussMethod::direct;
  double error_bound = 0;
  bool zero_sum = false;

  double gamma_turns() const;
};

inline constexpr double kZeroSumTolerance = 1e-9;

GaussSumResult make_result(std::complex<double> value, GaussMethod method, double error_bound = 0);

// ---------------------------------------------------------------------------
// Finite fields

/// sum_x chi(x) zeta_p^{Tr(beta x)}, by direct summation.
std::complex<double> gauss_sum_direct_field(const MultChar& chi, FieldElement beta);

/// Every G(F, chi_alpha, beta) at once: row alpha in [0, p^r-1), column beta
/// (canonical encoding). Direct summation arranged as a matrix product.
Eigen::MatrixXcd gauss_sum_table(const FieldPtr& ctx);

/// chi(beta^{-1}): G(F, chi, beta delta) = beta_factor(chi, beta) * G(F, chi, delta).
std::complex<double> beta_factor(const MultChar& chi, FieldElement beta);

/// G(F_{p^r}, quadratic chi, 1): -(-1)^r sqrt(p^r) for p = 1 mod 4,
/// -(-i)^r sqrt(p^r) for p = 3 mod 4.
std::complex<double> quadratic_gauss_closed(std::uint64_t p, unsigned r);

/// sum_x chi(x) psi(1 - x).
std::complex<double> jacobi_direct(const MultChar& chi, const MultChar& psi);

/// G(chi,1) G(psi,1) / G(chi psi,1); chi, psi and chi psi must be nontrivial.
std::complex<double> jacobi_via_gauss(const MultChar& chi, const MultChar& psi);

/// Field Gauss sum with the phase taken from simulated phase estimation of
/// the eigenphase transform; the norm sqrt(p^r) is exact.
GaussSumResult estimate_gauss_field(const MultChar& chi, FieldElement beta, std::uint64_t samples,
                                    qsim::EstimationStrategy strategy, Rng& rng);

// ---------------------------------------------------------------------------
// Rings Z/nZ

std::complex<double> gauss_sum_direct_ring(const DirichletChar& chi, std::uint64_t beta);

/// chi as a dense vector of values on Z/nZ.
Eigen::VectorXcd dirichlet_values(const DirichletChar& chi);

/// Unnormalized DFT matrix W(beta, x) = zeta_n^{beta x}; W * values gives all G(chi, beta).
Eigen::MatrixXcd dft_matrix(std::uint64_t n);

struct CrtComponent {
  PrimePower modulus;
  /// J with J * n / p^r = 1 mod p^r.
  std::uint64_t J;
};

std::vector<CrtComponent> crt_coefficients(std::uint64_t n);

struct RingEstimator {
  enum class Kind { exact, quantum };
  Kind kind = Kind::exact;
  std::uint64_t samples = 10000;
  qsim::EstimationStrategy strategy = qsim::EstimationStrategy::two_basis;
  std::uint64_t seed = 1;

  static RingEstimator exact() { return {}; }
  static RingEstimator quantum(std::uint64_t samples, std::uint64_t seed,
                               qsim::EstimationStrategy strategy = qsim::EstimationStrategy::two_basis) {
    return {Kind::quantum, samples, strategy, seed};
  }
};

/// Reduction of G(Z/nZ, chi, beta) to Gauss sums of primitive characters.
///
/// Construction does the beta-independent work: CRT coefficients, the class
/// of each prime-power factor chi_i (trivial, periodic with conductor
/// p^{r-s}, primitive) and G(Z/cZ, chi_c, 1) for the primitive cores via the
/// chosen estimator. Evaluation at beta multiplies the closed forms:
///   trivial:   p^{r-1}(p-1), -p^{r-1} or 0 by the p-adic valuation of beta
///   periodic:  p^s G(Z/p^{r-s}Z, chi, beta/p^s) if p^s | beta, else 0
///   primitive: 0 if beta is not a unit, else conj(chi(beta)) G(chi, 1)
class RingGaussPipeline {
 public:
  enum class ComponentKind { trivial, periodic, primitive };

  struct Component {
    CrtComponent crt;
    ComponentKind kind;
    std::uint64_t conductor;
    std::uint64_t period_shift = 0;   ///< s with conductor p^{r-s}
    std::complex<double> base_sum;    ///< G(Z/cZ, chi_c, 1) for non-trivial components
    double phase_error_bound = 0;
    GaussMethod method;
  };

  RingGaussPipeline(DirichletChar chi, RingEstimator estimator = RingEstimator::exact());

  const std::vector<Component>& components() const { return components_; }
  const DirichletChar& character() const { return chi_; }

  GaussSumResult operator()(std::uint64_t beta) const;

 private:
  std::complex<double> component_value(std::size_t i, std::uint64_t beta) const;

  DirichletChar chi_;
  RingEstimator estimator_;
  std::vector<Component> components_;
};

GaussSumResult ring_gauss_pipeline(const DirichletChar& chi, std::uint64_t beta,
                                   RingEstimator estimator = RingEstimator::exact());

}  // namespace gaussq
