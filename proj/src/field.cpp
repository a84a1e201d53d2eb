#include "gaussq/field.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gaussq {

namespace poly {
namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly reduce(Poly a, const Poly& f, std::uint64_t p) {
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return reduce(std::move(prod), f, p);
}

Poly powmod_x(std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result = reduce({1}, f, p);
  Poly base = reduce({0, 1}, f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic
    const std::uint64_t inv_lead = invmod(b.back(), p);
    for (auto& c : b) c = c * inv_lead % p;
    a = reduce(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv_lead = invmod(a.back(), p);
    for (auto& c : a) c = c * inv_lead % p;
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < r; ++i) {
    q *= p;
    Poly h = powmod_x(q, f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (gcd(h, f, p) != Poly{1}) return false;
  }
  q *= p;
  return powmod_x(q, f, p) == reduce({0, 1}, f, p);
}

}  // namespace poly

namespace {

constexpr unsigned kMaxDegree = 22;
using Digits = std::array<std::uint32_t, kMaxDegree>;

Digits decode(std::uint32_t idx, std::uint64_t p, unsigned r) {
  Digits d{};
  for (unsigned i = 0; i < r; ++i) {
    d[i] = static_cast<std::uint32_t>(idx % p);
    idx = static_cast<std::uint32_t>(idx / p);
  }
  return d;
}

std::uint32_t encode(const Digits& d, std::uint64_t p, unsigned r) {
  std::uint64_t idx = 0;
  for (unsigned i = r; i-- > 0;) idx = idx * p + d[i];
  return static_cast<std::uint32_t>(idx);
}

}  // namespace

FieldElement FieldCtx::from_int(std::int64_t a) const {
  const auto sp = static_cast<std::int64_t>(p_);
  return FieldElement{static_cast<std::uint32_t>(((a % sp) + sp) % sp)};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > r_) throw DomainError("from_coeffs: more than r coefficients");
  Digits d{};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw DomainError("from_coeffs: coefficient out of range");
    d[i] = c[i];
  }
  return FieldElement{encode(d, p_, r_)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElement x) const {
  const Digits d = decode(x.idx, p_, r_);
  return {d.begin(), d.begin() + r_};
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  if (r_ == 1) return FieldElement{static_cast<std::uint32_t>((a.idx + b.idx) % p_)};
  Digits da = decode(a.idx, p_, r_);
  const Digits db = decode(b.idx, p_, r_);
  for (unsigned i = 0; i < r_; ++i) da[i] = static_cast<std::uint32_t>((da[i] + db[i]) % p_);
  return FieldElement{encode(da, p_, r_)};
}

FieldElement FieldCtx::neg(FieldElement a) const {
  if (r_ == 1) return FieldElement{static_cast<std::uint32_t>((p_ - a.idx) % p_)};
  Digits da = decode(a.idx, p_, r_);
  for (unsigned i = 0; i < r_; ++i) da[i] = static_cast<std::uint32_t>((p_ - da[i]) % p_);
  return FieldElement{encode(da, p_, r_)};
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldCtx::scale(std::uint64_t k, FieldElement a) const {
  k %= p_;
  Digits da = decode(a.idx, p_, r_);
  for (unsigned i = 0; i < r_; ++i) da[i] = static_cast<std::uint32_t>(da[i] * k % p_);
  return FieldElement{encode(da, p_, r_)};
}

FieldElement FieldCtx::poly_mul(FieldElement a, FieldElement b) const {
  const Digits da = decode(a.idx, p_, r_);
  const Digits db = decode(b.idx, p_, r_);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < r_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  // X^r = -(c_0 + ... + c_{r-1} X^{r-1})
  for (unsigned k = 2 * r_ - 1; k-- > r_;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < r_; ++i) {
      prod[k - r_ + i] = (prod[k - r_ + i] + (p_ - lead) * modpoly_[i]) % p_;
    }
  }
  Digits out{};
  for (unsigned i = 0; i < r_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return FieldElement{encode(out, p_, r_)};
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (r_ == 1) return FieldElement{static_cast<std::uint32_t>(std::uint64_t{a.idx} * b.idx % p_)};
  if (tabulated()) {
    return FieldElement{exp_[(std::uint64_t{log_[a.idx]} + log_[b.idx]) % group_order()]};
  }
  return poly_mul(a, b);
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  if (r_ == 1) return FieldElement{static_cast<std::uint32_t>(invmod(a.idx, p_))};
  if (tabulated()) return FieldElement{exp_[(group_order() - log_[a.idx]) % group_order()]};
  return pow(a, static_cast<std::int64_t>(order_ - 2));
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  if (a.is_zero()) return k == 0 ? one() : zero();
  // reduce exponent in the multiplicative group
  auto e = static_cast<std::uint64_t>(k) % group_order();
  if (tabulated()) return FieldElement{exp_[(std::uint64_t{log_[a.idx]} * e) % group_order()]};
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

void FieldCtx::build_tables() {
  const std::uint64_t n = group_order();
  exp_.assign(n, 0);
  log_.assign(order_, 0);
  FieldElement cur = one();
  for (std::uint64_t j = 0; j < n; ++j) {
    exp_[j] = cur.idx;
    log_[cur.idx] = static_cast<std::uint32_t>(j);
    cur = (r_ == 1) ? mul(cur, g_) : poly_mul(cur, g_);
  }
  // Tr is F_p-linear: tabulate on the monomial basis, extend by coefficients.
  std::vector<std::uint32_t> basis_trace(r_);
  for (unsigned i = 0; i < r_; ++i) {
    Digits d{};
    d[i] = 1;
    basis_trace[i] = trace(*this, FieldElement{encode(d, p_, r_)});
  }
  trace_.assign(order_, 0);
  for (std::uint64_t idx = 0; idx < order_; ++idx) {
    const Digits d = decode(static_cast<std::uint32_t>(idx), p_, r_);
    std::uint64_t t = 0;
    for (unsigned i = 0; i < r_; ++i) t += std::uint64_t{d[i]} * basis_trace[i];
    trace_[idx] = static_cast<std::uint32_t>(t % p_);
  }
}

FieldPtr make_field(std::uint64_t p, unsigned r, std::optional<std::uint32_t> generator) {
  if (r < 1) throw DomainError("make_field: degree must be at least 1");
  if (!is_prime(p)) throw DomainError("make_field: " + std::to_string(p) + " is not prime");
  if (r > kMaxDegree) throw DomainError("make_field: degree too large");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kArithmeticBound) {
      throw DomainError("make_field: p^r exceeds the desk-scale bound 2^22");
    }
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->r_ = r;
  ctx->order_ = q;

  // First monic irreducible; candidate k enumerates (c_{r-1}, ..., c_0) lexicographically.
  for (std::uint64_t k = 0; k < q; ++k) {
    poly::Poly f(r + 1);
    std::uint64_t rest = k;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[r] = 1;
    if (poly::is_irreducible(f, p)) {
      ctx->modpoly_.assign(f.begin(), f.begin() + r);
      break;
    }
  }
  if (ctx->modpoly_.empty()) throw std::logic_error("make_field: no irreducible polynomial found");

  const std::uint64_t n = q - 1;
  if (generator) {
    const FieldElement g{*generator};
    if (g.is_zero() || !ctx->contains(g) || element_order(*ctx, g) != n) {
      throw DomainError("make_field: generator override " + std::to_string(*generator) +
                        " is not a primitive element");
    }
    ctx->g_ = g;
  } else {
    for (std::uint64_t idx = 1; idx < q; ++idx) {
      const FieldElement cand{static_cast<std::uint32_t>(idx)};
      if (element_order(*ctx, cand) == n) {
        ctx->g_ = cand;
        break;
      }
    }
  }
  if (q <= kTabulationBound) ctx->build_tables();
  return ctx;
}

std::uint32_t trace(const FieldCtx& ctx, FieldElement x) {
  FieldElement sum = x;
  FieldElement conj = x;
  for (unsigned j = 1; j < ctx.r(); ++j) {
    conj = ctx.pow(conj, static_cast<std::int64_t>(ctx.p()));
    sum = ctx.add(sum, conj);
  }
  if (sum.idx >= ctx.p()) throw std::logic_error("trace left the base field");
  return sum.idx;
}

std::uint64_t element_order(const FieldCtx& ctx, FieldElement x) {
  if (x.is_zero()) throw DomainError("element_order: zero has no multiplicative order");
  std::uint64_t order = ctx.group_order();
  for (const std::uint64_t q : prime_divisors(order)) {
    while (order % q == 0 && ctx.pow(x, static_cast<std::int64_t>(order / q)) == ctx.one()) order /= q;
  }
  return order;
}

std::uint64_t discrete_log(const FieldCtx& ctx, FieldElement x) {
  if (x.is_zero()) throw DomainError("discrete_log: log of zero is undefined");
  if (!ctx.contains(x)) throw DomainError("discrete_log: element out of range");
  const std::uint64_t n = ctx.group_order();
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  baby.reserve(m);
  FieldElement cur = ctx.one();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur.idx, j);
    cur = ctx.mul(cur, ctx.generator());
  }
  const FieldElement giant = ctx.pow(ctx.generator(), -static_cast<std::int64_t>(m));
  FieldElement gamma = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (const auto it = baby.find(gamma.idx); it != baby.end()) return (i * m + it->second) % n;
    gamma = ctx.mul(gamma, giant);
  }
  throw std::logic_error("discrete_log: generator does not generate the group");
}

}  // namespace gaussq
