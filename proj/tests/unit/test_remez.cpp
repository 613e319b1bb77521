#include <stdexcept>

#include "doctest.h"
#include "zolo/remez.hpp"

using namespace zolo;

TEST_SUITE("remez") {

TEST_CASE("k = 0, m = 1 is (1-a)/(1+a) with a linear approximant") {
  for (double a : {0.2, 0.5, 0.8}) {
    const ProblemSpec spec = ProblemSpec::weighted(0, 1, a);
    const EquiSolution sol = remez_solve(spec);
    const MPValue av(a, sol.bits);
    CHECK(abs(sol.L - (1.0 - av) / (1.0 + av)).to_double() < 1e-25);
    REQUIRE(sol.alternation.size() == 2);
    CHECK(sol.alternation[0].x.to_double() == doctest::Approx(a));
    CHECK(sol.alternation[1].x.to_double() == doctest::Approx(1.0));
    const RationalExpansion f = expand_rational(sol, spec);
    REQUIRE(f.laurent.size() == 1);
    CHECK(f.laurent.at(1).to_double() == doctest::Approx(2.0 / (1.0 + a)).epsilon(1e-14));
  }
}

TEST_CASE("k = m = 1 at a = 1/4") {
  const ProblemSpec spec = ProblemSpec::weighted(1, 1, 0.25);
  const EquiSolution sol = remez_solve(spec);
  CHECK((sol.L * 9.0 - 1.0).to_double() == doctest::Approx(0.0).epsilon(1e-25));
  const RationalExpansion f = expand_rational(sol, spec);
  CHECK(f.laurent.at(-1).to_double() == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  CHECK(f.laurent.at(1).to_double() == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  // The expansion reproduces sgn - residual at every alternation point.
  for (const auto& p : sol.alternation) CHECK(abs(1.0 - f(p.x) - p.residual).to_double() < 1e-25);
}

TEST_CASE("uniform |x| at degree 2") {
  const ProblemSpec spec = ProblemSpec::unweighted(1.0, 2, 0.5);
  const EquiSolution sol = remez_solve(spec);
  CHECK((sol.L * 48.0 - 1.0).to_double() == doctest::Approx(0.0).epsilon(1e-25));
  REQUIRE(sol.alternation.size() == 3);
  CHECK(sol.alternation[1].x.to_double() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(sol.q(MPValue(0.0, sol.bits)).to_double() == doctest::Approx(1.0 / 3.0 + 1.0 / 48.0).epsilon(1e-14));
  CHECK_THROWS_AS(expand_rational(sol, spec), std::invalid_argument);
}

TEST_CASE("levelled deviation never decreases and the result is level") {
  for (auto [k, m] : {std::pair{0, 5}, std::pair{2, 6}, std::pair{3, 2}}) {
    const EquiSolution sol = remez_solve(ProblemSpec::weighted(k, m, 0.5));
    for (std::size_t i = 1; i < sol.level_history.size(); ++i) {
      CHECK(sol.level_history[i] >= sol.level_history[i - 1] * (1.0 - 1e-20));
    }
    CHECK(sol.levelness.to_double() <= 1e-12);
    CHECK(sol.probe_max <= sol.L * (1.0 + 1e-12));
    const XAlternation xs = alternation_in_x(sol);
    CHECK_FALSE(xs.anomaly());
  }
}

TEST_CASE("L lies in (0, 1) and decreases in m") {
  for (int k : {0, 1, 3}) {
    MPValue prev(1.0, 53);
    for (int m = 1; m <= 8; ++m) {
      const EquiSolution sol = remez_solve(ProblemSpec::weighted(k, m, 0.4));
      CHECK(sol.L > 0.0);
      CHECK(sol.L < prev);
      prev = MPValue(sol.L, 53);
    }
  }
}

TEST_CASE("swapping k and m leaves L unchanged") {
  const EquiSolution a = remez_solve(ProblemSpec::weighted(1, 4, 0.35));
  const EquiSolution b = remez_solve(ProblemSpec::weighted(4, 1, 0.35));
  CHECK((abs(a.L - b.L) / a.L).to_double() < 1e-15);
}

TEST_CASE("parallel execution gives the same answer") {
  const ProblemSpec spec = ProblemSpec::weighted(2, 7, 0.6);
  const EquiSolution s = remez_solve(spec, kernels::Exec::Serial);
  const EquiSolution p = remez_solve(spec, kernels::Exec::Parallel);
  CHECK(s.L == p.L);
  CHECK(s.iterations == p.iterations);
}

TEST_CASE("iteration cap raises ConvergenceError with the last reference") {
  ProblemSpec spec = ProblemSpec::weighted(2, 6, 0.5);
  spec.max_iterations = 1;
  try {
    remez_solve(spec);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_reference().size() == static_cast<std::size_t>(spec.degree()) + 2);
  }
}

TEST_CASE("invalid specs are rejected before solving") {
  CHECK_THROWS_AS(remez_solve(ProblemSpec::weighted(1, 1, 1.5)), std::invalid_argument);
  CHECK_THROWS_AS(remez_solve(ProblemSpec::unweighted(4.0, 4, 0.5)), std::invalid_argument);
}

}
