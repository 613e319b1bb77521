#include "doctest.h"
#include "gen.hpp"
#include "zolo/cheb_poly.hpp"
#include "zolo/kernels.hpp"

using namespace zolo;

TEST_SUITE("kernels") {

TEST_CASE("parallel residual scan is bit-identical to the serial one") {
  testgen::Gen g(21);
  for (int trial = 0; trial < 5; ++trial) {
    const ProblemSpec spec = ProblemSpec::weighted(g.integer(0, 3), g.integer(1, 8), g.uniform(0.1, 0.9));
    const ReducedProblem prob(spec, 160);
    const ChebPoly q(prob.lo(), prob.hi(), g.coeffs(static_cast<std::size_t>(prob.degree()) + 1, 160));
    const auto ts = chebyshev_lobatto(static_cast<std::size_t>(g.integer(2, 700)), prob.lo(), prob.hi());
    const auto a = kernels::residual_scan_serial(prob, q, ts);
    const auto b = kernels::residual_scan_parallel(prob, q, ts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("parallel power residuals are bit-identical to the serial ones") {
  testgen::Gen g(22);
  const std::size_t n = 513;
  const auto c = g.coeffs(9, 128), s = g.coeffs(n, 128), w = g.coeffs(n, 128), y = g.coeffs(n, 128);
  const auto a = kernels::power_residuals(c, s, w, y, kernels::Exec::Serial);
  const auto b = kernels::power_residuals(c, s, w, y, kernels::Exec::Parallel);
  for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
  // r = g - w * sum c_j s^j
  MPValue p(128), pw(1L, 128);
  for (const auto& cj : c) {
    p += cj * pw;
    pw *= s[7];
  }
  CHECK(a[7] == y[7] - w[7] * p);
}

TEST_CASE("thread count is positive") { CHECK(kernels::max_threads() >= 1); }

}
