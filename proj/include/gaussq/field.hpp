#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gaussq/numtheory.hpp"

namespace gaussq {

/// Element of F_{p^r} by canonical encoding idx = sum_i coeffs[i] * p^i.
/// idx 0 is the field zero, idx 1 the field one.
struct FieldElement {
  std::uint32_t idx = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t i) : idx(i) {}
  auto operator<=>(const FieldElement&) const = default;
  bool is_zero() const { return idx == 0; }
};

/// F_{p^r} in a polynomial basis over a fixed monic irreducible modulus, with
/// a fixed primitive element. Immutable once built; share via FieldPtr.
///
/// Fields with p^r <= kTabulationBound additionally carry exp/log/trace tables
/// so that bulk sums over the field run in O(1) per term.
class FieldCtx {
 public:
  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint64_t order() const { return order_; }
  /// p^r - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return order_ - 1; }
  /// Coefficients c_0..c_{r-1} of the monic modulus (leading 1 implied).
  const std::vector<std::uint32_t>& modpoly() const { return modpoly_; }
  FieldElement generator() const { return g_; }
  bool tabulated() const { return !exp_.empty(); }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  /// Embeds the base-field integer a mod p.
  FieldElement from_int(std::int64_t a) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  bool contains(FieldElement x) const { return x.idx < order_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement scale(std::uint64_t k, FieldElement a) const;  // k in the base field
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  /// Square-and-multiply; negative k uses the inverse (a must then be nonzero).
  FieldElement pow(FieldElement a, std::int64_t k) const;

  /// Tabulated fields only: g^j and log_g(x) (x != 0).
  FieldElement exp_table(std::uint64_t j) const { return FieldElement{exp_[j % group_order()]}; }
  std::uint32_t log_table(FieldElement x) const { return log_[x.idx]; }
  std::uint32_t trace_table(FieldElement x) const { return trace_[x.idx]; }

 private:
  friend std::shared_ptr<const FieldCtx> make_field(std::uint64_t, unsigned, std::optional<std::uint32_t>);

  FieldCtx() = default;
  FieldElement poly_mul(FieldElement a, FieldElement b) const;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned r_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> modpoly_;
  FieldElement g_{};
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds F_{p^r}. The modulus is the first monic irreducible of degree r in
/// lexicographic order of (c_{r-1}, ..., c_0); the generator is the smallest
/// encoding of full multiplicative order unless `generator` overrides it.
FieldPtr make_field(std::uint64_t p, unsigned r, std::optional<std::uint32_t> generator = std::nullopt);

/// Tr(x) = sum_{j<r} x^{p^j}, returned as an integer in [0, p).
std::uint32_t trace(const FieldCtx& ctx, FieldElement x);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const FieldCtx& ctx, FieldElement x);

/// Baby-step/giant-step: j in [0, p^r - 1) with g^j = x.
std::uint64_t discrete_log(const FieldCtx& ctx, FieldElement x);

/// Polynomials over F_p, coefficient i is the coefficient of X^i (no trailing zeros).
namespace poly {
using Poly = std::vector<std::uint64_t>;
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
Poly powmod_x(std::uint64_t e, const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
bool is_irreducible(const Poly& f, std::uint64_t p);
}  // namespace poly

}  // namespace gaussq
