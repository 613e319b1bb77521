#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gen.hpp"
#include "zolo/numerics.hpp"

using namespace zolo;

TEST_SUITE("numerics") {

TEST_CASE("golden section finds a smooth maximum") {
  const ScalarFn f = [](const MPValue& t) { return -(t - 0.3) * (t - 0.3); };
  const Bits bits = 128;
  const ExtremumResult r = find_extremum(f, {MPValue(0.0, bits), MPValue(0.5, bits), MPValue(1.0, bits)},
                                         ldexp(MPValue(1L, bits), -64));
  CHECK(r.converged);
  CHECK(r.t.to_double() == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("golden section minimum and rejected brackets") {
  const ScalarFn f = [](const MPValue& t) { return cos(t); };
  const Bits bits = 128;
  const ExtremumResult r = find_extremum(f, {MPValue(2.0, bits), MPValue(3.0, bits), MPValue(4.0, bits)},
                                         ldexp(MPValue(1L, bits), -60), Extremum::Minimum);
  CHECK(r.t.to_double() == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK_THROWS_AS(find_extremum(f, {MPValue(3.0, bits), MPValue(2.0, bits), MPValue(4.0, bits)},
                                MPValue(1e-10, bits)),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_extremum(f, {MPValue(0.1, bits), MPValue(0.2, bits), MPValue(0.3, bits)},
                                MPValue(1e-10, bits)),
                  std::invalid_argument);
}

TEST_CASE("adaptive Simpson on smooth and kinked integrands") {
  const Bits bits = 128;
  const Quadrature q{MPValue(1e-20, bits)};
  const QuadResult r1 = integrate([](const MPValue& x) { return exp(x); }, MPValue(0.0, bits), MPValue(1.0, bits), q);
  CHECK(r1.ok);
  CHECK(abs(r1.value - (exp(MPValue(1.0, bits)) - 1.0)).to_double() < 1e-19);
  const QuadResult r2 =
      integrate([](const MPValue& x) { return abs(x - 0.3); }, MPValue(0.0, bits), MPValue(1.0, bits), q);
  const MPValue k(0.3, bits);
  const MPValue exact = ldexp(k * k + (1.0 - k) * (1.0 - k), -1);
  CHECK(abs(r2.value - exact).to_double() < 1e-18);
}

TEST_CASE("quadrature reports an exhausted budget") {
  const Bits bits = 64;
  const QuadResult r = integrate([](const MPValue& x) { return sin(1.0 / x); }, MPValue(1e-6, bits), MPValue(1.0, bits),
                                 {MPValue(1e-18, bits), 64});
  CHECK_FALSE(r.ok);
}

TEST_CASE("complete pivoting solves random systems") {
  testgen::Gen g(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 12));
    const Bits bits = 160;
    std::vector<MPValue> a = g.coeffs(n * n, bits), x = g.coeffs(n, bits), b(n, MPValue(bits));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += a[i * n + j] * x[j];
    const std::vector<MPValue> y = solve_dense(a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(abs(y[i] - x[i]).to_double() < 1e-30);
  }
  CHECK_THROWS(solve_dense({MPValue(1.0, 64), MPValue(2.0, 64), MPValue(2.0, 64), MPValue(4.0, 64)},
                           {MPValue(1.0, 64), MPValue(1.0, 64)}));
}

TEST_CASE("Gamma at half integers and reals") {
  CHECK(gamma_half_integer(0, 128).to_double() == doctest::Approx(std::sqrt(std::numbers::pi)));
  CHECK(gamma_half_integer(3, 128).to_double() == doctest::Approx(std::tgamma(3.5)));
  testgen::Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const double x = g.uniform(-4.9, 30.0);
    if (std::abs(x - std::round(x)) < 1e-3 && x < 0.5) continue;
    CHECK(gamma_real(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  CHECK(gamma_real(-0.5) == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_real(-2.0), std::domain_error);
  CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
}

}
