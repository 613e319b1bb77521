#include <stdexcept>

#include "doctest.h"
#include "zolo/problem.hpp"

using namespace zolo;

TEST_SUITE("problem") {

TEST_CASE("degree budget") {
  CHECK(ProblemSpec::weighted(0, 1, 0.5).degree() == 0);
  CHECK(ProblemSpec::weighted(2, 3, 0.5).degree() == 4);
  CHECK(ProblemSpec::unweighted(1.0, 12, 0.4).degree() == 6);
}

TEST_CASE("domain is enforced") {
  CHECK_THROWS_AS(validate(ProblemSpec::weighted(-1, 2, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(validate(ProblemSpec::weighted(1, 0, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(validate(ProblemSpec::weighted(1, 1, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(ProblemSpec::unweighted(2.0, 4, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(validate(ProblemSpec::unweighted(1.0, 3, 0.5)), std::invalid_argument);
  CHECK_NOTHROW(validate(ProblemSpec::weighted(0, 1, 0.5)));
}

TEST_CASE("degenerate a needs the override") {
  ProblemSpec s = ProblemSpec::weighted(1, 1, 0.995);
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s.allow_degenerate = true;
  CHECK_NOTHROW(validate(s));
  CHECK_THROWS_AS(validate(ProblemSpec::weighted(1, 1, 0.005)), std::invalid_argument);
}

TEST_CASE("precision rule") {
  // ceil(2 log2 3) + 96
  CHECK(default_precision(ProblemSpec::weighted(1, 2, 0.5)) == 100);
  CHECK(default_precision(ProblemSpec::weighted(2, 1, 0.5)) == 100);
  CHECK(default_precision(ProblemSpec::unweighted(1.0, 4, 0.5)) == 100);
  ProblemSpec s = ProblemSpec::weighted(1, 2, 0.5);
  s.mantissa_bits = 99;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s.mantissa_bits = 300;
  CHECK(working_precision(s) == 300);
}

TEST_CASE("reduced residual") {
  const ReducedProblem weighted(ProblemSpec::weighted(1, 1, 0.5), 128);
  CHECK(weighted.lo().to_double() == 0.25);
  // weight sqrt(t)/t^k with k = 1 at t = 0.25 is 2
  CHECK(weighted.weight(MPValue(0.25, 128)).to_double() == doctest::Approx(2.0));
  const ReducedProblem plain(ProblemSpec::unweighted(1.0, 2, 0.5), 128);
  CHECK(plain.residual(MPValue(0.64, 128), MPValue(0.5, 128)).to_double() == doctest::Approx(0.3));
}

}
