#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>

#include "gaussq/field.hpp"

using namespace gaussq;

TEST_CASE("construction conventions") {
  const auto f5 = make_field(5, 1);
  CHECK(f5->order() == 5);
  CHECK(f5->modpoly() == std::vector<std::uint32_t>{0});
  CHECK(f5->generator() == FieldElement{2});

  CHECK(make_field(241, 1, 7)->generator() == FieldElement{7});
  CHECK(make_field(2, 1)->generator() == FieldElement{1});

  // Reference moduli and generators from tests/oracles/brute.py.
  struct Row {
    std::uint64_t p;
    unsigned r;
    std::vector<std::uint32_t> modpoly;
    std::uint32_t g;
  };
  const std::array<Row, 6> rows{{{3, 2, {1, 0}, 4},
                                 {2, 3, {1, 1, 0}, 2},
                                 {2, 4, {1, 1, 0, 0}, 2},
                                 {5, 2, {2, 0}, 6},
                                 {3, 3, {1, 2, 0}, 3},
                                 {7, 2, {1, 0}, 9}}};
  for (const auto& row : rows) {
    CAPTURE(row.p);
    CAPTURE(row.r);
    const auto ctx = make_field(row.p, row.r);
    CHECK(ctx->modpoly() == row.modpoly);
    CHECK(ctx->generator() == FieldElement{row.g});
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(make_field(6, 1), DomainError);
  CHECK_THROWS_AS(make_field(5, 0), DomainError);
  CHECK_THROWS_AS(make_field(2, 23), DomainError);
  CHECK_THROWS_AS(make_field(5, 1, 4), DomainError);  // 4 has order 2
  CHECK_THROWS_AS(make_field(5, 1)->inv(FieldElement{0}), DomainError);
}

TEST_CASE("arithmetic") {
  const auto f5 = make_field(5, 1);
  CHECK(f5->mul(FieldElement{2}, FieldElement{3}) == FieldElement{1});
  CHECK(f5->inv(FieldElement{2}) == FieldElement{3});
  CHECK(f5->neg(FieldElement{1}) == FieldElement{4});
  CHECK(f5->pow(FieldElement{2}, -1) == FieldElement{3});

  const auto f9 = make_field(3, 2);
  CHECK(f9->pow(f9->generator(), 8) == f9->one());
  for (std::uint32_t k = 1; k < 8; ++k) CHECK(f9->pow(f9->generator(), k) != f9->one());
  CHECK(f9->from_coeffs(std::vector<std::uint32_t>{2, 1}) == FieldElement{5});
  CHECK(f9->coeffs(FieldElement{5}) == std::vector<std::uint32_t>{2, 1});
  CHECK(f9->from_int(-1) == FieldElement{2});
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    const auto ctx = make_field(p, r);
    const auto q = static_cast<std::uint32_t>(ctx->order());
    for (std::uint32_t a = 0; a < q; ++a) {
      const FieldElement x{a};
      CHECK(ctx->add(x, ctx->neg(x)) == ctx->zero());
      if (a) CHECK(ctx->mul(x, ctx->inv(x)) == ctx->one());
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElement y{b};
        CHECK(ctx->mul(x, y) == ctx->mul(y, x));
        const FieldElement z{(a * 7 + b) % q};
        CHECK(ctx->mul(x, ctx->add(y, z)) == ctx->add(ctx->mul(x, y), ctx->mul(x, z)));
      }
    }
  }
}

TEST_CASE("trace") {
  const auto f5 = make_field(5, 1);
  CHECK(trace(*f5, FieldElement{3}) == 3);
  const auto f4 = make_field(2, 2);
  CHECK(trace(*f4, FieldElement{1}) == 0);

  const auto f9 = make_field(3, 2);
  const std::vector<std::uint32_t> expected{0, 2, 1, 0, 2, 1, 0, 2, 1};
  std::map<std::uint32_t, int> tally;
  for (std::uint32_t k = 0; k < 9; ++k) {
    CHECK(trace(*f9, FieldElement{k}) == expected[k]);
    CHECK(f9->trace_table(FieldElement{k}) == expected[k]);
    ++tally[trace(*f9, FieldElement{k})];
  }
  CHECK(tally == std::map<std::uint32_t, int>{{0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("discrete log") {
  const auto f5 = make_field(5, 1);
  CHECK(discrete_log(*f5, FieldElement{1}) == 0);
  CHECK(discrete_log(*f5, FieldElement{3}) == 3);
  const auto f241 = make_field(241, 1, 7);
  CHECK(discrete_log(*f241, FieldElement{49}) == 2);
  for (std::uint32_t j = 0; j < 240; j += 7) CHECK(discrete_log(*f241, f241->exp_table(j)) == j);
  CHECK_THROWS_AS(discrete_log(*f5, FieldElement{0}), DomainError);

  // Untabulated field: BSGS without tables.
  const auto big = make_field(2, 21);
  CHECK_FALSE(big->tabulated());
  const FieldElement x = big->pow(big->generator(), 1234567);
  CHECK(discrete_log(*big, x) == 1234567);
  CHECK(element_order(*big, big->generator()) == big->group_order());
}

TEST_CASE("polynomial irreducibility") {
  CHECK(poly::is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(poly::is_irreducible({1, 0, 1}, 2));
  CHECK(poly::is_irreducible({1, 1, 0, 1}, 2));
  CHECK_FALSE(poly::is_irreducible({1, 0, 0, 0, 1}, 3));
}
