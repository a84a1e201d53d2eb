#include "gaussq/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace gaussq {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) {
    if (m == 1) return 0;
    throw DomainError("invmod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0, 1};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
      pp.value *= d;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned cap) {
  if (x == 0) return cap;
  unsigned v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

Turn::Turn(std::int64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("Turn: zero denominator");
  const auto sden = static_cast<std::int64_t>(den);
  std::int64_t r = num % sden;
  if (r < 0) r += sden;
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(r), den);
  num_ = static_cast<std::uint64_t>(r) / g;
  den_ = den / g;
}

std::complex<double> Turn::value() const {
  if (4 % den_ == 0) {
    static constexpr std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return quarter[num_ * (4 / den_)];
  }
  return std::polar(1.0, radians());
}

Turn Turn::operator+(const Turn& o) const {
  const std::uint64_t l = std::lcm(den_, o.den_);
  const std::uint64_t a = mulmod(num_, l / den_, l);
  const std::uint64_t b = mulmod(o.num_, l / o.den_, l);
  return Turn(static_cast<std::int64_t>((a + b) % l), l);
}

Turn Turn::operator-() const { return Turn(-static_cast<std::int64_t>(num_), den_); }

double phase_in_turn_range(std::complex<double> z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a -= 2.0 * std::numbers::pi;
  return a;
}

double wrap_distance(double a, double b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

}  // namespace gaussq
