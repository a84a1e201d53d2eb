#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <vector>

#include "gaussq/characters.hpp"
#include "gaussq/field.hpp"
#include "gaussq/rng.hpp"

namespace gaussq {

struct GaussOracle {
  enum class Mode { exact, noisy };
  Mode mode = Mode::exact;
  double epsilon = 0;  ///< noisy mode: |returned - true| <= epsilon
  std::uint64_t seed = 0;
};

/// Answers "what is arg G(F, chi, beta)?" for chi(g^j) = zeta_{p^r-1}^j.
/// Exact answers come from direct summation over the exponent j of x = g^j,
/// sum_j zeta^j zeta_p^{Tr(g^{j + log beta})}, memoized per beta; noisy mode
/// adds a uniform perturbation in [-epsilon, epsilon] drawn from the seeded
/// stream in query order.
class GaussPhaseOracle {
 public:
  GaussPhaseOracle(FieldPtr ctx, GaussOracle config);

  double query(FieldElement beta);
  std::uint64_t calls() const { return calls_; }
  const GaussOracle& config() const { return config_; }

 private:
  FieldPtr ctx_;
  GaussOracle config_;
  Rng rng_;
  std::uint64_t calls_ = 0;
  std::vector<double> cache_;
  std::vector<std::complex<double>> chi_of_power_;
  std::vector<std::uint32_t> trace_of_power_;
  std::vector<std::complex<double>> additive_roots_;
};

struct DlogReduction {
  std::uint64_t ell;
  std::uint64_t oracle_calls;
};

inline constexpr double kRecoveryEpsilon = 2.0 * std::numbers::pi / 16.0;

/// log_g(x) from Gauss-sum phases at beta = 1 and beta = x^{2^m},
/// m = 0..ceil(log2(p^r - 1)). Each phase gives 2^m l / (p^r - 1) mod 1;
/// the fractions are unwound from the top, halving the uncertainty per step.
/// Throws DomainError if the phases are inconsistent (oracle too noisy).
DlogReduction dlog_via_gauss_oracle(const FieldPtr& ctx, FieldElement x, GaussPhaseOracle& oracle,
                                    double max_epsilon = kRecoveryEpsilon);

enum class WalkOrdering { sequential, generator };

/// Partial sums R(t) of chi(x) e(x) over F_p. sequential: x = 0, 1, ..., p-1;
/// generator: the zero element, then x = g^0, g^1, ..., g^{p-2}.
/// Both have p points and end at G(F_p, chi, beta).
struct WalkTrace {
  WalkOrdering ordering;
  std::vector<std::complex<double>> points;
  std::uint64_t p;
  std::uint64_t alpha;
  std::uint32_t generator;
};

WalkTrace walk_trace(const MultChar& chi, WalkOrdering ordering, FieldElement beta = FieldElement{1});

/// (1/(p-1)) sum_j a_j conj(a_{j+s}) with cyclic indices, a_j the walk steps
/// (j mod p for sequential, j mod p-1 for generator). 0 < s < p-1.
std::complex<double> autocorrelation(const MultChar& chi, WalkOrdering ordering, std::uint64_t s);

/// Generator-ordering autocorrelation against the two readings of
/// -chi(-s)/(p-1): chi of the field element -s, or zeta_{p-1}^{-alpha s}.
struct GeneratorAutocorrelation {
  std::complex<double> empirical;
  std::complex<double> field_element_reading;
  std::complex<double> exponent_reading;
  bool matches_field_element_reading;
  bool matches_exponent_reading;
};

GeneratorAutocorrelation generator_autocorrelation_report(const MultChar& chi, std::uint64_t s,
                                                          double tolerance = 1e-9);

/// CSV "t,re,im", one row per partial sum, %.17g formatting.
void write_walk_csv(const WalkTrace& trace, std::ostream& out);
void export_walk(const WalkTrace& trace, const std::filesystem::path& path);

std::string to_string(WalkOrdering ordering);

}  // namespace gaussq
