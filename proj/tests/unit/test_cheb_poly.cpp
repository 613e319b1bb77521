#include <stdexcept>

#include "doctest.h"
#include "gen.hpp"
#include "zolo/cheb_poly.hpp"

using namespace zolo;

namespace {

MPValue horner(const std::vector<MPValue>& b, const MPValue& t) {
  MPValue acc(t.bits());
  for (std::size_t j = b.size(); j-- > 0;) acc = acc * t + b[j];
  return acc;
}

}  // namespace

TEST_SUITE("cheb_poly") {

TEST_CASE("T_j values on [-1, 1]") {
  std::vector<MPValue> c(4, MPValue(128));
  c[3] = MPValue(1.0, 128);
  const ChebPoly t3(MPValue(-1.0, 128), MPValue(1.0, 128), c);
  const MPValue s(0.3, 128);
  CHECK(t3(s).to_double() == doctest::Approx(4 * 0.027 - 3 * 0.3));
  CHECK(t3.degree() == 3);
}

TEST_CASE("Clenshaw agrees with the power basis on random polynomials") {
  testgen::Gen g(42);
  for (int trial = 0; trial < 40; ++trial) {
    const Bits bits = 200;
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 51));
    const double lo = g.uniform(0.0, 0.9);
    const double hi = lo + g.uniform(0.05, 1.0);
    const ChebPoly q(MPValue(lo, bits), MPValue(hi, bits), g.coeffs(n, bits));
    const std::vector<MPValue> b = q.to_power_basis();
    for (int i = 0; i < 5; ++i) {
      const MPValue t(g.uniform(lo, hi), bits);
      // The monomial form is ill-conditioned on narrow intervals; scale by its condition sum.
      MPValue cond(bits), tj(1L, bits);
      for (const auto& bj : b) {
        cond += abs(bj) * tj;
        tj *= t;
      }
      const MPValue diff = abs(q(t) - horner(b, t));
      CHECK(diff <= cond * ldexp(MPValue(1L, bits), -190));
    }
  }
}

TEST_CASE("derivative matches a difference quotient") {
  testgen::Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Bits bits = 256;
    const ChebPoly q(MPValue(0.25, bits), MPValue(1.0, bits), g.coeffs(static_cast<std::size_t>(g.integer(1, 20)), bits));
    const ChebPoly dq = q.derivative();
    const MPValue t(g.uniform(0.3, 0.9), bits), h = ldexp(MPValue(1L, bits), -60);
    const MPValue fd = (q(t + h) - q(t - h)) / ldexp(h, 1);
    CHECK(abs(fd - dq(t)).to_double() < 1e-25);
  }
}

TEST_CASE("extrapolation is flagged") {
  const ChebPoly q(MPValue(0.25, 64), MPValue(1.0, 64), {MPValue(1.0, 64), MPValue(2.0, 64)});
  CHECK_FALSE(cheb_eval(q, MPValue(0.5, 64)).extrapolated);
  const ChebEval e = cheb_eval(q, MPValue(-4.0, 64));
  CHECK(e.extrapolated);
  // s = (2t - 1.25)/0.75 at t = -4 is -37/3
  CHECK(e.value.to_double() == doctest::Approx(1.0 + 2.0 * (-9.25 / 0.75)));
}

TEST_CASE("Lobatto points are ascending with exact endpoints") {
  const MPValue lo(0.0625, 128), hi(1.0, 128);
  const auto pts = chebyshev_lobatto(17, lo, hi);
  REQUIRE(pts.size() == 17);
  CHECK(pts.front() == lo);
  CHECK(pts.back() == hi);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);
}

TEST_CASE("empty interval is rejected") {
  CHECK_THROWS_AS(ChebPoly(MPValue(1.0, 64), MPValue(1.0, 64), {MPValue(64)}), std::invalid_argument);
}

}
