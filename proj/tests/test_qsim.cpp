#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaussq/gauss.hpp"
#include "gaussq/qsim.hpp"

using namespace gaussq;
using namespace gaussq::qsim;
using cd = std::complex<double>;

namespace {
const double kPi = std::numbers::pi;

template <typename A, typename B>
double dist(const A& a, const B& b) {
  return (a - b).norm();
}

Eigen::MatrixXcd field_matrix(const FieldCtx& ctx, FieldElement beta) {
  const auto q = static_cast<Eigen::Index>(ctx.order());
  Eigen::MatrixXcd m(q, q);
  for (Eigen::Index x = 0; x < q; ++x) m.col(x) = qft_field(basis_state(ctx.order(), x), ctx, beta);
  return m;
}
}  // namespace

TEST_CASE("field QFT examples") {
  const auto f9 = make_field(3, 2);
  CHECK(dist(qft_field(basis_state(9, 0), *f9, FieldElement{1}), uniform_state(9)) < 1e-12);
  CHECK(dist(qft_field(uniform_state(9), *f9, FieldElement{4}), basis_state(9, 0)) < 1e-12);

  const auto f5 = make_field(5, 1);
  const MultChar chi(f5, 1);
  const StateVector<double> hat = qft_field(char_state(chi), *f5, FieldElement{1});
  const cd g = gauss_sum_direct_field(chi, FieldElement{1});
  CHECK(std::abs(hat(0)) < 1e-12);
  for (std::uint32_t y = 1; y < 5; ++y)
    CHECK(std::abs(hat(y) - chi(f5->inv(FieldElement{y})) * g / (2.0 * std::sqrt(5.0))) < 1e-12);

  CHECK_THROWS_AS(qft_field(basis_state(5, 0), *f5, FieldElement{0}), DomainError);
  CHECK_THROWS_AS(qft_field(basis_state(4, 0), *f5, FieldElement{1}), DomainError);
}

TEST_CASE("field QFT is unitary and the fast path agrees") {
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}, {7, 1}}) {
    const auto ctx = make_field(p, r);
    const auto q = static_cast<Eigen::Index>(ctx->order());
    for (std::uint32_t b : {1u, 2u, static_cast<std::uint32_t>(q - 1)}) {
      const Eigen::MatrixXcd m = field_matrix(*ctx, FieldElement{b});
      CHECK((m.adjoint() * m - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff() < 1e-12);
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Random(q);
    psi.normalize();
    for (std::uint32_t b = 1; b < q; b += 3) {
      const StateVector<double> dense = qft_field(psi, *ctx, FieldElement{b});
      CHECK(dist(qft_field_fast(psi, *ctx, FieldElement{b}), dense) < 1e-12);
      CHECK(dist(qft_field_rescale(qft_field(psi, *ctx, ctx->one()), *ctx, FieldElement{b}), dense) < 1e-12);
    }
  }
}

TEST_CASE("ring QFT") {
  const StateVector<double> e1 = qft_ring(basis_state(4, 1), 4);
  const StateVector<double> expected = (StateVector<double>(4) << 1, cd(0, 1), -1, cd(0, -1)).finished() / 2.0;
  CHECK(dist(e1, expected) < 1e-15);
  CHECK(dist(qft_ring(basis_state(12, 0), 12), uniform_state(12)) < 1e-12);

  for (std::uint64_t n : {5, 8, 9, 25, 77, 100}) {
    for (const auto& chi : all_dirichlet_chars(make_dirichlet_group(n))) {
      if (!is_primitive(chi)) continue;
      const StateVector<double> hat = qft_ring(char_state(chi), n);
      const StateVector<double> inv = char_state(chi.inverse());
      const cd global = hat(1) / inv(1);
      CHECK(std::abs(std::abs(global) - 1.0) < 1e-12);
      CHECK(dist(hat, global * inv) < 1e-12);
    }
  }
}

TEST_CASE("phase kickback") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Random(8);
  psi.normalize();
  CHECK(dist(phase_kickback(psi, [](std::uint64_t) { return 0; }, 5), psi) < 1e-15);
  const StateVector<double> signs = phase_kickback(uniform_state(4), [](std::uint64_t x) { return x % 2; }, 2);
  for (Eigen::Index x = 0; x < 4; ++x) CHECK(std::abs(signs(x) - (x % 2 ? -0.5 : 0.5)) < 1e-15);

  const auto f = [](std::uint64_t x) { return 3 * x * x + 1; };
  const auto regs = phase_kickback_register(psi, f, 7);
  CHECK(regs.factorization_residual < 1e-12);
  CHECK(dist(regs.system, phase_kickback(psi, f, 7)) < 1e-12);
  CHECK_THROWS_AS(phase_kickback_register(psi, f, 65), DomainError);
}

TEST_CASE("amplitude amplification") {
  const auto all = amplitude_amplify(16, [](std::uint64_t) { return 1; }, 16);
  CHECK(dist(all, uniform_state(16)) < 1e-12);

  const auto one = amplitude_amplify(4, [](std::uint64_t x) { return x == 2; }, 1);
  CHECK(std::norm(one(2)) > 1 - 1e-12);

  for (std::uint64_t dim : {2, 3, 5, 9, 27, 100, 343}) {
    for (std::uint64_t w = 1; w <= dim; w += (dim / 7 + 1)) {
      const auto state = amplitude_amplify(dim, [w](std::uint64_t x) { return x < w; }, w);
      StateVector<double> target = StateVector<double>::Zero(dim);
      target.head(w).setConstant(1.0 / std::sqrt(static_cast<double>(w)));
      CHECK(std::norm(target.dot(state)) >= 1 - 1e-10);
    }
  }
  CHECK_THROWS_AS(amplitude_amplify(4, [](std::uint64_t x) { return x < 2; }, 1), DomainError);
  CHECK_THROWS_AS(amplitude_amplify(4, [](std::uint64_t) { return 0; }, 0), DomainError);
  CHECK_THROWS_AS(amplitude_amplify(4, [](std::uint64_t) { return 1; }, 5), DomainError);
}

TEST_CASE("character state preparation") {
  const auto f5 = make_field(5, 1);
  const StateVector<double> expected = (StateVector<double>(5) << 0, 1, cd(0, 1), cd(0, -1), -1).finished() / 2.0;
  CHECK(dist(char_state(MultChar(f5, 1)), expected) < 1e-15);
  CHECK(dist(prepare_char_state(MultChar(f5, 1)), expected) < 1e-12);

  const auto f49 = make_field(7, 2);
  StateVector<double> units = StateVector<double>::Constant(49, 1.0 / std::sqrt(48.0));
  units(0) = 0;
  CHECK(dist(prepare_char_state(MultChar(f49, 0)), units) < 1e-12);
  for (std::uint64_t a = 1; a < 48; a += 5) {
    const MultChar chi(f49, a);
    CHECK(std::norm(char_state(chi).dot(prepare_char_state(chi))) >= 1 - 1e-10);
  }
}

TEST_CASE("eigenphase procedure") {
  const auto f5 = make_field(5, 1);
  const auto res = eigenphase_gauss_field(MultChar(f5, 1), FieldElement{1});
  CHECK(res.gamma / (2 * kPi) == doctest::Approx(0.338104095587).epsilon(1e-9));
  CHECK(res.residual < 1e-12);
  CHECK(res.amplitude_at_zero < 1e-12);

  const auto f241 = make_field(241, 1, 7);
  CHECK(eigenphase_gauss_field(MultChar(f241, 10), FieldElement{1}).gamma / (2 * kPi) ==
        doctest::Approx(0.6772).epsilon(5e-4));

  const auto f7 = make_field(7, 1);
  CHECK(eigenphase_gauss_field(quadratic_char(f7), FieldElement{1}).gamma == doctest::Approx(kPi / 2));

  CHECK_THROWS_AS(eigenphase_gauss_field(MultChar(f5, 0), FieldElement{1}), DomainError);
  CHECK_THROWS_AS(eigenphase_gauss_field(MultChar(f5, 1), FieldElement{0}), DomainError);

  for (std::uint64_t n : {5, 16, 21, 27}) {
    for (const auto& chi : all_dirichlet_chars(make_dirichlet_group(n))) {
      if (!is_primitive(chi)) continue;
      const auto ring = eigenphase_gauss_ring(chi);
      CHECK(wrap_distance(ring.gamma, phase_in_turn_range(gauss_sum_direct_ring(chi, 1))) < 1e-10);
    }
  }
  CHECK_THROWS_AS(eigenphase_gauss_ring(DirichletChar(make_dirichlet_group(9), {3})), DomainError);
}

TEST_CASE("relative-phase measurements") {
  Rng rng(11);
  const double gamma = 1.234;
  bool always = true, never = false;
  for (int i = 0; i < 1000; ++i) {
    always = always && sample_phase_measurement(gamma, gamma, rng);
    never = never || sample_phase_measurement(gamma, gamma + kPi, rng);
  }
  CHECK(always);
  CHECK_FALSE(never);
  std::uint64_t hits = 0;
  for (int i = 0; i < 100000; ++i) hits += sample_phase_measurement(gamma, gamma + kPi / 2, rng);
  CHECK(std::abs(hits / 1e5 - 0.5) < 0.01);

  const auto f7 = make_field(7, 1);
  const auto chi = char_state(MultChar(f7, 1));
  const auto joint = stale_superposition(chi, gamma);
  CHECK(measurement_probability(joint, chi, gamma) == doctest::Approx(1.0));
  CHECK(measurement_probability(joint, chi, gamma + kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(measurement_probability(joint, chi, 0.3) == doctest::Approx(0.5 + 0.5 * std::cos(gamma - 0.3)));
}

TEST_CASE("phase estimation") {
  for (auto strategy : {EstimationStrategy::two_basis, EstimationStrategy::adaptive}) {
    for (double gamma : {0.0, kPi, 2 * kPi * 0.6772}) {
      Rng rng(5);
      const auto est = estimate_phase(RelativePhaseSource{gamma}, 10000, strategy, rng);
      CHECK(est.samples_used == 10000);
      CHECK(wrap_distance(est.gamma_hat, gamma) < 0.05);
      std::uint64_t shots = 0;
      for (const auto& b : est.per_basis_counts) shots += b.shots;
      CHECK(shots == 10000);
    }
  }
  Rng a(9), b(9);
  CHECK(estimate_phase(RelativePhaseSource{1.0}, 500, EstimationStrategy::adaptive, a).gamma_hat ==
        estimate_phase(RelativePhaseSource{1.0}, 500, EstimationStrategy::adaptive, b).gamma_hat);
  Rng c(1);
  CHECK_THROWS_AS(estimate_phase(RelativePhaseSource{1.0}, 1, EstimationStrategy::two_basis, c), DomainError);
}

TEST_CASE("doubling t lowers the mean error") {
  const double gamma = 2 * kPi * 0.6772;
  for (auto strategy : {EstimationStrategy::two_basis, EstimationStrategy::adaptive}) {
    double previous = 10;
    for (std::uint64_t t : {250, 500, 1000, 2000}) {
      double total = 0;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng = Rng(seed).split(t);
        total += wrap_distance(estimate_phase(RelativePhaseSource{gamma}, t, strategy, rng).gamma_hat, gamma);
      }
      CHECK(total / 200 < previous);
      previous = total / 200;
    }
  }
}

TEST_CASE("single precision scalar") {
  const auto f5 = make_field(5, 1);
  const auto hat = qft_field(char_state<float>(MultChar(f5, 1)), *f5, FieldElement{1});
  static_assert(std::is_same_v<decltype(hat), const StateVector<float>>);
  CHECK(std::abs(hat(0)) < 1e-6f);
}
