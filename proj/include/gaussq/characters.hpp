#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gaussq/field.hpp"
#include "gaussq/numtheory.hpp"

namespace gaussq {

/// Value of a multiplicative character: zero, or an exact root of unity.
struct CharValue {
  std::optional<Turn> turn;

  bool is_zero() const { return !turn.has_value(); }
  std::complex<double> value() const { return turn ? turn->value() : std::complex<double>{}; }
};

/// Multiplicative character of F_{p^r} given by (p^r, g, alpha):
/// chi(g^j) = zeta_{p^r-1}^{alpha j}, chi(0) = 0.
class MultChar {
 public:
  MultChar(FieldPtr ctx, std::uint64_t alpha);

  const FieldPtr& field() const { return ctx_; }
  const FieldCtx& ctx() const { return *ctx_; }
  std::uint64_t alpha() const { return alpha_; }
  FieldElement generator() const { return ctx_->generator(); }
  bool is_trivial() const { return alpha_ == 0; }
  /// chi(g^j) in {+1, -1} for every j: the quadratic character (p odd).
  bool is_quadratic() const;

  CharValue eval(FieldElement x) const;
  std::complex<double> operator()(FieldElement x) const { return eval(x).value(); }

  MultChar inverse() const;

 private:
  FieldPtr ctx_;
  std::uint64_t alpha_;
};

/// Evaluates chi at x (0 at x = 0, otherwise zeta^{alpha log_g x}).
std::complex<double> mult_char_eval(const MultChar& chi, FieldElement x);

/// Pointwise product; throws if the characters live over different fields.
MultChar char_mul(const MultChar& a, const MultChar& b);

/// Quadratic character chi(g^j) = (-1)^j of an odd-characteristic field.
MultChar quadratic_char(FieldPtr ctx);

/// Additive character of a field, e_beta(x) = zeta_p^{Tr(beta x)}.
struct FieldAddChar {
  FieldPtr ctx;
  FieldElement beta;

  Turn turn(FieldElement x) const;
  std::complex<double> operator()(FieldElement x) const { return turn(x).value(); }
};

/// Additive character of Z/nZ, e_beta(x) = zeta_n^{beta x}.
struct RingAddChar {
  std::uint64_t n;
  std::uint64_t beta;

  Turn turn(std::uint64_t x) const { return Turn(static_cast<std::int64_t>(mulmod(beta, x, n)), n); }
  std::complex<double> operator()(std::uint64_t x) const { return turn(x).value(); }
};

/// Structure of (Z/nZ)^*: prime-power components in increasing prime order,
/// each with its generator data and a discrete-log lookup table.
///
/// Component for 2^e: e = 1 has no parameters, e = 2 one (alpha_0, via -1),
/// e >= 3 two (alpha_0 via -1, alpha_0' via 5). Odd p^e uses the smallest
/// primitive root mod p^e.
class DirichletGroup {
 public:
  struct Component {
    PrimePower modulus;
    std::uint64_t generator = 0;  // odd components only
    std::uint64_t phi = 0;
    /// Odd: log_g of each residue. 2-power: log holds i, log5 holds i' with x = (-1)^i 5^{i'}.
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> log5;
    /// Cyclic orders of the index groups (1 or 2 entries; empty for Z/2Z).
    std::vector<std::uint64_t> index_orders;
  };

  explicit DirichletGroup(std::uint64_t n);

  std::uint64_t modulus() const { return n_; }
  std::uint64_t phi() const { return phi_; }
  const std::vector<Component>& components() const { return components_; }
  /// Total number of alpha entries across components.
  std::size_t index_count() const;

 private:
  std::uint64_t n_;
  std::uint64_t phi_;
  std::vector<Component> components_;
};

using DirichletGroupPtr = std::shared_ptr<const DirichletGroup>;

DirichletGroupPtr make_dirichlet_group(std::uint64_t n);

/// Smallest primitive root of the cyclic group (Z/p^e Z)^*, p odd.
std::uint64_t smallest_primitive_root(std::uint64_t p, unsigned e);

/// Dirichlet character mod n specified by the sequences (p, g, alpha).
/// `indices` lists alpha entries per component in factorization order
/// (see DirichletGroup for how many each component consumes).
class DirichletChar {
 public:
  DirichletChar(DirichletGroupPtr group, std::vector<std::uint64_t> indices);

  const DirichletGroupPtr& group() const { return group_; }
  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  bool is_trivial() const;

  CharValue eval(std::uint64_t x) const;
  std::complex<double> operator()(std::uint64_t x) const { return eval(x).value(); }

  std::size_t component_count() const { return group_->components().size(); }
  /// chi_j evaluated on x mod p_j^{r_j}.
  CharValue component_eval(std::size_t j, std::uint64_t x) const;
  bool component_trivial(std::size_t j) const;
  /// Conductor of chi_j (a power of p_j), from the divisor test.
  std::uint64_t component_conductor(std::size_t j) const { return component_conductors_[j]; }

  DirichletChar inverse() const;

 private:
  std::size_t first_index(std::size_t j) const;

  DirichletGroupPtr group_;
  std::vector<std::uint64_t> indices_;
  std::vector<std::uint64_t> component_conductors_;
};

std::complex<double> dirichlet_eval(const DirichletChar& chi, std::uint64_t x);

/// Every character mod n, in lexicographic order of the index vector.
std::vector<DirichletChar> all_dirichlet_chars(const DirichletGroupPtr& group);

/// Smallest c | n such that chi(x) = chi(y) whenever x = y mod c and both are
/// units mod n. Trivial characters give 1.
std::uint64_t conductor(const DirichletChar& chi);
bool is_primitive(const DirichletChar& chi);

/// p^{r-s} with p^s || alpha, for a character mod an odd prime power; 1 if alpha = 0.
std::uint64_t odd_prime_power_conductor(std::uint64_t p, unsigned r, std::uint64_t alpha);

}  // namespace gaussq
