#pragma once

// Data-parallel residual kernels. Each has a serial reference and an OpenMP
// version; both write element i from input i only, so the outputs are
// bit-identical regardless of thread count.

#include <span>
#include <vector>

#include "zolo/cheb_poly.hpp"
#include "zolo/mp_value.hpp"
#include "zolo/problem.hpp"

namespace zolo::kernels {

enum class Exec { Serial, Parallel };

/// r_i = target(t_i) - weight(t_i) * q(t_i)
std::vector<MPValue> residual_scan_serial(const ReducedProblem& prob, const ChebPoly& q,
                                          std::span<const MPValue> ts);
std::vector<MPValue> residual_scan_parallel(const ReducedProblem& prob, const ChebPoly& q,
                                            std::span<const MPValue> ts);

inline std::vector<MPValue> residual_scan(const ReducedProblem& prob, const ChebPoly& q,
                                          std::span<const MPValue> ts, Exec exec) {
  return exec == Exec::Parallel ? residual_scan_parallel(prob, q, ts) : residual_scan_serial(prob, q, ts);
}

/// r_i = g_i - w_i * sum_j c_j s_i^j (Horner), for precomputed node data.
std::vector<MPValue> power_residuals_serial(std::span<const MPValue> coeffs, std::span<const MPValue> s,
                                            std::span<const MPValue> w, std::span<const MPValue> g);
std::vector<MPValue> power_residuals_parallel(std::span<const MPValue> coeffs, std::span<const MPValue> s,
                                              std::span<const MPValue> w, std::span<const MPValue> g);

inline std::vector<MPValue> power_residuals(std::span<const MPValue> coeffs, std::span<const MPValue> s,
                                            std::span<const MPValue> w, std::span<const MPValue> g,
                                            Exec exec) {
  return exec == Exec::Parallel ? power_residuals_parallel(coeffs, s, w, g)
                                : power_residuals_serial(coeffs, s, w, g);
}

/// Threads available to the parallel kernels.
int max_threads();

}  // namespace zolo::kernels
