#include "gaussq/characters.hpp"

#include <numeric>
#include <string>

namespace gaussq {

MultChar::MultChar(FieldPtr ctx, std::uint64_t alpha) : ctx_(std::move(ctx)), alpha_(alpha) {
  if (!ctx_) throw DomainError("MultChar: null field");
  if (alpha_ >= ctx_->group_order()) {
    throw DomainError("MultChar: alpha must lie in [0, p^r - 1)");
  }
}

bool MultChar::is_quadratic() const {
  const std::uint64_t n = ctx_->group_order();
  return n % 2 == 0 && alpha_ == n / 2 && ctx_->p() != 2;
}

CharValue MultChar::eval(FieldElement x) const {
  if (x.is_zero()) return {};
  const std::uint64_t n = ctx_->group_order();
  const std::uint64_t log = ctx_->tabulated() ? ctx_->log_table(x) : discrete_log(*ctx_, x);
  return {Turn(static_cast<std::int64_t>(mulmod(alpha_, log, n)), n)};
}

MultChar MultChar::inverse() const {
  const std::uint64_t n = ctx_->group_order();
  return MultChar(ctx_, (n - alpha_) % n);
}

std::complex<double> mult_char_eval(const MultChar& chi, FieldElement x) { return chi(x); }

MultChar char_mul(const MultChar& a, const MultChar& b) {
  const FieldCtx& fa = a.ctx();
  const FieldCtx& fb = b.ctx();
  if (a.field() != b.field() &&
      (fa.p() != fb.p() || fa.r() != fb.r() || fa.modpoly() != fb.modpoly() || fa.generator() != fb.generator())) {
    throw DomainError("char_mul: characters over different field contexts");
  }
  return MultChar(a.field(), (a.alpha() + b.alpha()) % fa.group_order());
}

MultChar quadratic_char(FieldPtr ctx) {
  if (ctx->p() == 2) throw DomainError("quadratic_char: characteristic 2 has no quadratic character");
  const std::uint64_t half = ctx->group_order() / 2;
  return MultChar(std::move(ctx), half);
}

Turn FieldAddChar::turn(FieldElement x) const {
  const FieldElement bx = ctx->mul(beta, x);
  const std::uint32_t t = ctx->tabulated() ? ctx->trace_table(bx) : trace(*ctx, bx);
  return Turn(t, ctx->p());
}

std::uint64_t smallest_primitive_root(std::uint64_t p, unsigned e) {
  if (p == 2 || !is_prime(p)) throw DomainError("smallest_primitive_root: p must be an odd prime");
  const std::uint64_t q = ipow(p, e);
  const std::uint64_t phi = q / p * (p - 1);
  const auto factors = prime_divisors(phi);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const std::uint64_t f : factors) {
      if (powmod(g, phi / f, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

DirichletGroup::DirichletGroup(std::uint64_t n) : n_(n), phi_(euler_phi(n)) {
  if (n < 1) throw DomainError("DirichletGroup: modulus must be positive");
  if (n > kDirectSumBound) throw DomainError("DirichletGroup: modulus exceeds the desk-scale bound 2^20");
  for (const PrimePower& pp : factorize(n)) {
    Component c;
    c.modulus = pp;
    c.phi = pp.value / pp.prime * (pp.prime - 1);
    c.log.assign(pp.value, 0);
    if (pp.prime != 2) {
      c.generator = smallest_primitive_root(pp.prime, pp.exponent);
      std::uint64_t cur = 1;
      for (std::uint64_t j = 0; j < c.phi; ++j) {
        c.log[cur] = static_cast<std::uint32_t>(j);
        cur = cur * c.generator % pp.value;
      }
      c.index_orders = {c.phi};
    } else if (pp.exponent == 2) {
      c.log[1] = 0;
      c.log[3] = 1;
      c.index_orders = {2};
    } else if (pp.exponent >= 3) {
      // (Z/2^e)^* = <-1> x <5>
      const std::uint64_t half_order = pp.value / 4;
      c.log5.assign(pp.value, 0);
      for (std::uint32_t i = 0; i < 2; ++i) {
        std::uint64_t cur = (i == 0) ? 1 : pp.value - 1;
        for (std::uint64_t k = 0; k < half_order; ++k) {
          c.log[cur] = i;
          c.log5[cur] = static_cast<std::uint32_t>(k);
          cur = cur * 5 % pp.value;
        }
      }
      c.index_orders = {2, half_order};
    }
    components_.push_back(std::move(c));
  }
}

std::size_t DirichletGroup::index_count() const {
  std::size_t k = 0;
  for (const auto& c : components_) k += c.index_orders.size();
  return k;
}

DirichletGroupPtr make_dirichlet_group(std::uint64_t n) { return std::make_shared<const DirichletGroup>(n); }

DirichletChar::DirichletChar(DirichletGroupPtr group, std::vector<std::uint64_t> indices)
    : group_(std::move(group)), indices_(std::move(indices)) {
  if (!group_) throw DomainError("DirichletChar: null group");
  if (indices_.size() != group_->index_count()) {
    throw DomainError("DirichletChar: expected " + std::to_string(group_->index_count()) +
                      " character indices for modulus " + std::to_string(group_->modulus()) + ", got " +
                      std::to_string(indices_.size()));
  }
  std::size_t k = 0;
  for (const auto& c : group_->components()) {
    for (const std::uint64_t order : c.index_orders) {
      if (indices_[k] >= order) {
        throw DomainError("DirichletChar: index " + std::to_string(indices_[k]) + " out of range for component " +
                          std::to_string(c.modulus.value));
      }
      ++k;
    }
  }
  for (std::size_t j = 0; j < component_count(); ++j) {
    const PrimePower& pp = group_->components()[j].modulus;
    std::uint64_t c = 1;
    for (unsigned e = 0; e <= pp.exponent; ++e, c *= pp.prime) {
      const CharValue ref_one = component_eval(j, 1);
      bool factors = true;
      for (std::uint64_t y = 1; y < pp.value && factors; ++y) {
        if (y % pp.prime == 0) continue;
        const CharValue ref = (c == 1) ? ref_one : component_eval(j, y % c);
        factors = component_eval(j, y).turn == ref.turn;
      }
      if (factors) break;
    }
    component_conductors_.push_back(c);
  }
}

std::size_t DirichletChar::first_index(std::size_t j) const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < j; ++i) k += group_->components()[i].index_orders.size();
  return k;
}

bool DirichletChar::is_trivial() const {
  return std::all_of(indices_.begin(), indices_.end(), [](std::uint64_t a) { return a == 0; });
}

bool DirichletChar::component_trivial(std::size_t j) const {
  const std::size_t k = first_index(j);
  const std::size_t m = group_->components()[j].index_orders.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (indices_[k + i] != 0) return false;
  }
  return true;
}

CharValue DirichletChar::component_eval(std::size_t j, std::uint64_t x) const {
  const auto& c = group_->components()[j];
  const std::uint64_t y = x % c.modulus.value;
  if (y % c.modulus.prime == 0) return {};
  const std::size_t k = first_index(j);
  if (c.index_orders.empty()) return {Turn{}};
  Turn t(static_cast<std::int64_t>(mulmod(indices_[k], c.log[y], c.index_orders[0])), c.index_orders[0]);
  if (c.index_orders.size() == 2) {
    t = t + Turn(static_cast<std::int64_t>(mulmod(indices_[k + 1], c.log5[y], c.index_orders[1])),
                 c.index_orders[1]);
  }
  return {t};
}

CharValue DirichletChar::eval(std::uint64_t x) const {
  const std::uint64_t n = modulus();
  x %= n;
  if (std::gcd(x, n) != 1) return {};
  Turn t;
  for (std::size_t j = 0; j < component_count(); ++j) t = t + *component_eval(j, x).turn;
  return {t};
}

DirichletChar DirichletChar::inverse() const {
  std::vector<std::uint64_t> inv = indices_;
  std::size_t k = 0;
  for (const auto& c : group_->components()) {
    for (const std::uint64_t order : c.index_orders) {
      inv[k] = (order - inv[k]) % order;
      ++k;
    }
  }
  return DirichletChar(group_, std::move(inv));
}

std::complex<double> dirichlet_eval(const DirichletChar& chi, std::uint64_t x) { return chi(x); }

std::vector<DirichletChar> all_dirichlet_chars(const DirichletGroupPtr& group) {
  std::vector<std::uint64_t> orders;
  for (const auto& c : group->components()) orders.insert(orders.end(), c.index_orders.begin(), c.index_orders.end());
  std::vector<DirichletChar> out;
  out.reserve(group->phi());
  std::vector<std::uint64_t> idx(orders.size(), 0);
  while (true) {
    out.emplace_back(group, idx);
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < orders[pos]) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

std::uint64_t conductor(const DirichletChar& chi) {
  const std::uint64_t n = chi.modulus();
  for (const std::uint64_t c : divisors(n)) {
    std::vector<std::optional<Turn>> seen(c);
    bool ok = true;
    for (std::uint64_t x = 0; x < n && ok; ++x) {
      const CharValue v = chi.eval(x);
      if (v.is_zero()) continue;
      auto& slot = seen[x % c];
      if (!slot) {
        slot = v.turn;
      } else {
        ok = (*slot == *v.turn);
      }
    }
    if (ok) return c;
  }
  return n;
}

bool is_primitive(const DirichletChar& chi) { return conductor(chi) == chi.modulus(); }

std::uint64_t odd_prime_power_conductor(std::uint64_t p, unsigned r, std::uint64_t alpha) {
  const std::uint64_t phi = ipow(p, r - 1) * (p - 1);
  alpha %= phi;
  if (alpha == 0) return 1;
  return ipow(p, r - valuation(alpha, p, r));
}

}  // namespace gaussq
