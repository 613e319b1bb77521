#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gen.hpp"
#include "zolo/mp_value.hpp"

using namespace zolo;

TEST_SUITE("mp_value") {

TEST_CASE("precision follows the wider operand") {
  const MPValue a(1.0, 64), b(3.0, 200);
  CHECK((a / b).bits() == 200);
  CHECK((a + 1.0).bits() == 64);
  CHECK(MPValue(a, 300).bits() == 300);
}

TEST_CASE("third is accurate to the working width") {
  const MPValue third = MPValue(1L, 256) / 3.0;
  const MPValue back = third * 3.0 - 1.0;
  CHECK(abs(back) < ldexp(MPValue(1L, 256), -250));
}

TEST_CASE("parse accepts decimals and rejects junk") {
  CHECK(mp("0.25", 64) == 0.25);
  CHECK(mp("-1.5e-3", 64).to_double() == doctest::Approx(-1.5e-3));
  CHECK_THROWS_AS(mp("0.2x", 64), std::invalid_argument);
  CHECK_THROWS_AS(mp("", 64), std::invalid_argument);
  CHECK_THROWS_AS(mp("inf", 64), std::invalid_argument);
  CHECK_THROWS_AS(mp("0.5", 8), std::invalid_argument);
}

TEST_CASE("to_string round trips") {
  testgen::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Bits bits = g.integer(53, 400);
    const MPValue x = exp(MPValue(g.uniform(-40.0, 40.0), bits)) * (g.integer(0, 1) ? 1.0 : -1.0);
    CHECK(mp(x.to_string(), bits) == x);
  }
}

TEST_CASE("elementary functions agree with double") {
  testgen::Gen g(7);
  for (int i = 0; i < 100; ++i) {
    const double x = g.uniform(0.01, 5.0);
    const MPValue v(x, 120);
    CHECK(sqrt(v).to_double() == doctest::Approx(std::sqrt(x)));
    CHECK(log(v).to_double() == doctest::Approx(std::log(x)));
    CHECK(sin(v).to_double() == doctest::Approx(std::sin(x)));
    CHECK(acosh(v + 1.0).to_double() == doctest::Approx(std::acosh(x + 1.0)));
    CHECK(atan2(v, MPValue(-1.0, 120)).to_double() == doctest::Approx(std::atan2(x, -1.0)));
  }
  CHECK(acosh(MPValue(10.0, 128)).to_double() == doctest::Approx(2.993222846126).epsilon(1e-12));
  CHECK((1.0 / cosh(MPValue(1.0, 128))).to_double() == doctest::Approx(0.648054273664).epsilon(1e-12));
}

TEST_CASE("ordering and sign") {
  const MPValue a(-2.0, 64), b(3.0, 90);
  CHECK(a < b);
  CHECK(b > 2.5);
  CHECK(a.sign() < 0);
  CHECK(max(a, b) == b);
  CHECK(min(a, b) == a);
  CHECK(MPValue(80).is_zero());
}

TEST_CASE("principal arccos inverts cos and keeps u near pi accurate") {
  testgen::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    const MPComplex z{MPValue(g.uniform(-5.0, 5.0), 160), MPValue(g.uniform(-5.0, 5.0), 160)};
    const MPComplex w = principal_arccos(z);
    CHECK(w.re >= 0.0);
    CHECK(w.re <= pi(160));
    const MPComplex back = cos(w);
    CHECK(abs(MPComplex{back.re - z.re, back.im - z.im}).to_double() < 1e-40);
  }
  // cos(pi - d + i v) with tiny d: the imaginary part must survive.
  const Bits bits = 256;
  const MPValue d = ldexp(MPValue(1L, bits), -120), v(30.0, bits);
  const MPComplex z = cos(MPComplex{pi(bits) - d, v});
  const MPComplex w = principal_arccos(z);
  CHECK(((pi(bits) - w.re) / d - 1.0).to_double() == doctest::Approx(0.0).epsilon(1e-20));
}

}
