#pragma once

#include <cstddef>

#include "zolo/kernels.hpp"
#include "zolo/mp_value.hpp"
#include "zolo/problem.hpp"

namespace zolo {

struct GridOracleResult {
  /// Minimax error of the discretized problem (a lower bound for L).
  MPValue error;
  std::size_t grid_size = 0;
  int exchanges = 0;
  /// The exchange was restarted from a dense re-seed after stalling.
  bool reseeded = false;
};

/// Discrete minimax on grid_size Chebyshev-Lobatto nodes of [a^2, 1] by
/// single-point (Stiefel) exchange. Shares no code with the Remez solver
/// beyond the residual kernels: powers of the reference variable instead of
/// Chebyshev polynomials, and its own Gauss-Jordan elimination.
/// Requires grid_size >= N + 2; values below 4 (N + 2) are only meaningful
/// for the interpolation limit grid_size == N + 2.
GridOracleResult grid_oracle(const ProblemSpec& spec, std::size_t grid_size,
                             kernels::Exec exec = kernels::Exec::Serial);

}  // namespace zolo
