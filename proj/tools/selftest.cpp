#include <cmath>
#include <functional>
#include <string>

#include "cli.hpp"
#include "gaussq/gauss.hpp"
#include "gaussq/qsim.hpp"
#include "gaussq/reductions.hpp"

namespace gaussq::cli {

namespace {

struct Suite {
  SelftestReport report;

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    ok ? ++report.passed : ++report.failed;
    nlohmann::json entry = {{"name", name}, {"ok", ok}};
    if (!detail.empty()) entry["error"] = detail;
    report.checks.push_back(entry);
  }
};

bool norms_hold(std::uint64_t p, unsigned r) {
  const FieldPtr ctx = make_field(p, r);
  const Eigen::MatrixXcd table = gauss_sum_table(ctx);
  const double q = static_cast<double>(ctx->order());
  for (Eigen::Index a = 1; a < table.rows(); ++a)
    for (Eigen::Index b = 1; b < table.cols(); ++b)
      if (std::abs(std::norm(table(a, b)) - q) > 1e-8 * q) return false;
  return true;
}

}  // namespace

SelftestReport run_selftest() {
  Suite s;
  s.check("norm |G|^2 = q over F_7, F_9, F_25, F_27", [] {
    return norms_hold(7, 1) && norms_hold(3, 2) && norms_hold(5, 2) && norms_hold(3, 3);
  });
  s.check("quadratic closed form, p^r <= 125", [] {
    for (std::uint64_t p : {3, 5, 7, 11})
      for (unsigned r = 1; ipow(p, r) <= 125; ++r) {
        const auto ctx = make_field(p, r);
        if (std::abs(gauss_sum_direct_field(quadratic_char(ctx), FieldElement{1}) - quadratic_gauss_closed(p, r)) > 1e-9)
          return false;
      }
    return true;
  });
  s.check("Jacobi through Gauss sums over F_13", [] {
    const auto ctx = make_field(13, 1);
    for (std::uint64_t a = 1; a < 12; ++a)
      for (std::uint64_t b = 1; b < 12; ++b) {
        if ((a + b) % 12 == 0) continue;
        const MultChar chi(ctx, a), psi(ctx, b);
        if (std::abs(jacobi_direct(chi, psi) - jacobi_via_gauss(chi, psi)) > 1e-9) return false;
      }
    return true;
  });
  s.check("ring pipeline against direct sum, n <= 48", [] {
    for (std::uint64_t n = 1; n <= 48; ++n) {
      const auto group = make_dirichlet_group(n);
      for (const auto& chi : all_dirichlet_chars(group)) {
        const RingGaussPipeline pipeline(chi);
        for (std::uint64_t b = 0; b < n; ++b)
          if (std::abs(pipeline(b).value - gauss_sum_direct_ring(chi, b)) > 1e-8) return false;
      }
    }
    return true;
  });
  s.check("eigenphase matches direct phase over F_11 and F_9", [] {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{11, 1}, {3, 2}}) {
      const auto ctx = make_field(p, r);
      for (std::uint64_t a = 1; a < ctx->group_order(); ++a) {
        const MultChar chi(ctx, a);
        const auto eig = qsim::eigenphase_gauss_field(chi, FieldElement{1});
        const double direct = phase_in_turn_range(gauss_sum_direct_field(chi, FieldElement{1}));
        if (wrap_distance(eig.gamma, direct) > 1e-9) return false;
      }
    }
    return true;
  });
  s.check("exact oracle recovers every discrete log in F_16 and F_29", [] {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 4}, {29, 1}}) {
      const auto ctx = make_field(p, r);
      GaussPhaseOracle oracle(ctx, GaussOracle{});
      for (std::uint32_t x = 1; x < ctx->order(); ++x)
        if (dlog_via_gauss_oracle(ctx, FieldElement{x}, oracle).ell != ctx->log_table(FieldElement{x})) return false;
    }
    return true;
  });
  s.check("field and ring Fourier transforms are unitary", [] {
    const auto ctx = make_field(3, 3);
    const auto dim = static_cast<Eigen::Index>(ctx->order());
    Eigen::MatrixXcd f(dim, dim), w(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
      const auto e = qsim::basis_state(ctx->order(), static_cast<std::uint64_t>(x));
      f.col(x) = qsim::qft_field(e, *ctx, FieldElement{1});
      w.col(x) = qsim::qft_ring(e, ctx->order());
    }
    const auto id = Eigen::MatrixXcd::Identity(dim, dim);
    return (f.adjoint() * f - id).norm() < 1e-10 && (w.adjoint() * w - id).norm() < 1e-10;
  });
  s.check("sequential autocorrelation over F_17", [] {
    const auto ctx = make_field(17, 1);
    for (std::uint64_t sh = 1; sh < 16; ++sh) {
      const auto expected = -root_of_unity(-static_cast<std::int64_t>(sh), 17) / 16.0;
      if (std::abs(autocorrelation(MultChar(ctx, 3), WalkOrdering::sequential, sh) - expected) > 1e-9) return false;
    }
    return true;
  });
  return s.report;
}

}  // namespace gaussq::cli
