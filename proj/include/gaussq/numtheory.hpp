#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaussq {

/// Raised when an input violates a mathematical precondition (non-prime
/// modulus, zero where a unit is required, size bound exceeded, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kArithmeticBound = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kTabulationBound = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDirectSumBound = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kStateVectorBound = std::uint64_t{1} << 14;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;  // prime^exponent

  bool operator==(const PrimePower&) const = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes in increasing order.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Exponent of the largest power of p dividing x; x = 0 maps to `cap`.
unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned cap);

/// An exact root of unity exp(2*pi*i*num/den), kept as a reduced fraction of a turn.
class Turn {
 public:
  constexpr Turn() = default;
  Turn(std::int64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  Turn operator+(const Turn& o) const;
  Turn operator-() const;
  Turn operator-(const Turn& o) const { return *this + (-o); }
  bool operator==(const Turn&) const = default;

  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  double radians() const { return 2.0 * std::numbers::pi * turns(); }
  std::complex<double> value() const;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// zeta_n^k as a double-precision complex number.
inline std::complex<double> root_of_unity(std::int64_t k, std::uint64_t n) {
  return Turn(k, n).value();
}

/// Phase of z mapped to [0, 2*pi).
double phase_in_turn_range(std::complex<double> z);

/// min(|a-b|, 2*pi-|a-b|) after reducing both angles mod 2*pi.
double wrap_distance(double a, double b);

}  // namespace gaussq
