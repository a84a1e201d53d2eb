#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaussq/characters.hpp"

using namespace gaussq;

namespace {
bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("multiplicative characters of fields") {
  const auto f5 = make_field(5, 1);
  const MultChar chi(f5, 1);
  CHECK(near(chi(FieldElement{2}), {0, 1}));
  CHECK(near(chi(FieldElement{3}), {0, -1}));
  CHECK(near(chi(FieldElement{4}), {-1, 0}));
  CHECK(chi.eval(FieldElement{0}).is_zero());

  const MultChar trivial(f5, 0);
  CHECK(trivial.is_trivial());
  CHECK(near(trivial(f5->generator()), 1.0));
  CHECK(trivial.eval(FieldElement{0}).is_zero());

  const auto f241 = make_field(241, 1, 7);
  const MultChar chi241(f241, 10);
  const FieldElement x = f241->pow(FieldElement{7}, 3);
  CHECK(chi241.eval(x).turn == Turn(30, 240));
  CHECK(near(std::pow(chi241(FieldElement{7}), 3), chi241(x), 1e-12));
  CHECK(std::abs(chi241(x)) == doctest::Approx(1.0));

  CHECK_THROWS_AS(MultChar(f5, 4), DomainError);
}

TEST_CASE("character group") {
  const auto f5 = make_field(5, 1);
  CHECK(char_mul(MultChar(f5, 3), MultChar(f5, 0)).alpha() == 3);
  const MultChar prod = char_mul(MultChar(f5, 1), MultChar(f5, 3));
  CHECK(prod.is_trivial());
  for (std::uint32_t x = 1; x < 5; ++x) CHECK(near(prod(FieldElement{x}), 1.0));

  const auto f27 = make_field(3, 3);
  for (std::uint64_t a = 0; a < 26; ++a) {
    const MultChar chi(f27, a);
    const MultChar inv = chi.inverse();
    CHECK(inv.alpha() == (26 - a) % 26);
    CHECK(char_mul(chi, inv).is_trivial());
    for (std::uint32_t x = 1; x < 27; ++x) CHECK(near(inv(FieldElement{x}), std::conj(chi(FieldElement{x}))));
  }
  CHECK_THROWS_AS(char_mul(MultChar(f5, 1), MultChar(make_field(7, 1), 1)), DomainError);

  CHECK(quadratic_char(f5).alpha() == 2);
  CHECK(quadratic_char(f5).is_quadratic());
  CHECK_FALSE(MultChar(f5, 1).is_quadratic());
  CHECK_THROWS_AS(quadratic_char(make_field(2, 3)), DomainError);
}

TEST_CASE("additive characters") {
  const auto f9 = make_field(3, 2);
  const FieldAddChar e{f9, FieldElement{1}};
  CHECK(near(e(FieldElement{0}), 1.0));
  CHECK(e.turn(FieldElement{1}) == Turn(2, 3));
  const RingAddChar e4{4, 1};
  CHECK(near(e4(1), {0, 1}));
  CHECK(near(e4(3), {0, -1}));
}

TEST_CASE("Dirichlet characters") {
  const auto g4 = make_dirichlet_group(4);
  const DirichletChar chi4(g4, {1});
  CHECK(near(chi4(3), -1.0));
  CHECK(chi4.eval(2).is_zero());

  const auto g15 = make_dirichlet_group(15);
  for (const auto& chi : all_dirichlet_chars(g15)) CHECK(chi.eval(5).is_zero());
  CHECK(all_dirichlet_chars(g15).size() == 8);

  const auto g8 = make_dirichlet_group(8);
  CHECK(g8->index_count() == 2);
  const DirichletChar chi8(g8, {1, 1});
  CHECK(near(chi8(3) * chi8(5), chi8(7)));

  CHECK_THROWS_AS(DirichletChar(g8, {1}), DomainError);
  CHECK_THROWS_AS(DirichletChar(g8, {2, 0}), DomainError);
  CHECK_THROWS_AS(make_dirichlet_group(0), DomainError);
}

TEST_CASE("Dirichlet characters are multiplicative and vanish exactly on non-units") {
  for (std::uint64_t n : {1, 2, 8, 12, 16, 45, 64, 90}) {
    CAPTURE(n);
    const auto group = make_dirichlet_group(n);
    const auto chars = all_dirichlet_chars(group);
    CHECK(chars.size() == euler_phi(n));
    for (const auto& chi : chars) {
      for (std::uint64_t x = 0; x < n; ++x) {
        CHECK(chi.eval(x).is_zero() == (std::gcd(x, n) != 1 && n > 1));
        for (std::uint64_t y = 0; y < n; y += 3) CHECK(near(chi(x) * chi(y), chi(x * y % n), 1e-9));
      }
    }
  }
}

TEST_CASE("smallest primitive roots") {
  CHECK(smallest_primitive_root(3, 2) == 2);
  CHECK(smallest_primitive_root(7, 1) == 3);
  CHECK(smallest_primitive_root(5, 3) == 2);
}

TEST_CASE("conductors") {
  const auto g9 = make_dirichlet_group(9);
  CHECK(conductor(DirichletChar(g9, {0})) == 1);
  CHECK(conductor(DirichletChar(g9, {3})) == 3);
  CHECK(is_primitive(DirichletChar(g9, {1})));
  CHECK_FALSE(is_primitive(DirichletChar(g9, {3})));
  CHECK_FALSE(is_primitive(DirichletChar(g9, {0})));

  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const auto g = make_dirichlet_group(p);
    for (const auto& chi : all_dirichlet_chars(g))
      CHECK(conductor(chi) == (chi.is_trivial() ? 1 : p));
  }

  // Reference conductors mod 16 from tests/oracles/brute.py, x = (-1)^i 5^k.
  const auto g16 = make_dirichlet_group(16);
  const std::uint64_t expected[2][4] = {{1, 16, 8, 16}, {4, 16, 8, 16}};
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) CHECK(conductor(DirichletChar(g16, {a, b})) == expected[a][b]);

  CHECK(odd_prime_power_conductor(3, 2, 3) == 3);
  CHECK(odd_prime_power_conductor(5, 3, 50) == 5);
  CHECK(odd_prime_power_conductor(5, 3, 0) == 1);

  // Conductor of a product is the product of component conductors.
  const auto g360 = make_dirichlet_group(360);
  for (const auto& chi : all_dirichlet_chars(g360)) {
    std::uint64_t prod = 1;
    for (std::size_t j = 0; j < chi.component_count(); ++j) prod *= chi.component_conductor(j);
    CHECK(conductor(chi) == prod);
  }
}
