#include <stdexcept>

#include "doctest.h"
#include "zolo/grid_oracle.hpp"
#include "zolo/remez.hpp"

using namespace zolo;

TEST_SUITE("grid_oracle") {

TEST_CASE("discrete error sits just below L and approaches it") {
  for (auto [k, m] : {std::pair{0, 3}, std::pair{1, 4}, std::pair{2, 2}}) {
    const ProblemSpec spec = ProblemSpec::weighted(k, m, 0.5);
    const MPValue L = remez_solve(spec).L;
    const MPValue coarse = grid_oracle(spec, 200).error;
    const MPValue fine = grid_oracle(spec, 4000).error;
    CHECK(coarse <= L * (1.0 + 1e-20));
    CHECK(fine <= L * (1.0 + 1e-20));
    CHECK(((L - fine) / L).to_double() < 1e-5);
    CHECK(fine >= coarse * (1.0 - 1e-20));
  }
}

TEST_CASE("uniform problem") {
  const ProblemSpec spec = ProblemSpec::unweighted(1.0, 8, 0.5);
  const MPValue L = remez_solve(spec).L;
  const GridOracleResult g = grid_oracle(spec, 4000);
  CHECK(((L - g.error) / L).to_double() == doctest::Approx(0.0).epsilon(1e-5));
}

TEST_CASE("N + 2 nodes is interpolation with a levelled error") {
  const ProblemSpec spec = ProblemSpec::weighted(1, 2, 0.5);
  const GridOracleResult g = grid_oracle(spec, 4);
  CHECK(g.exchanges == 0);
  CHECK(g.error > 0.0);
  CHECK(g.error <= remez_solve(spec).L);
  CHECK_THROWS_AS(grid_oracle(spec, 3), std::invalid_argument);
}

TEST_CASE("parallel residuals give the same oracle value") {
  const ProblemSpec spec = ProblemSpec::weighted(1, 5, 0.5);
  CHECK(grid_oracle(spec, 1000, kernels::Exec::Serial).error == grid_oracle(spec, 1000, kernels::Exec::Parallel).error);
}

}
