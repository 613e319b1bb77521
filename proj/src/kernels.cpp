#include "zolo/kernels.hpp"

#include <omp.h>

#include <cstddef>

namespace zolo::kernels {

namespace {

MPValue horner(std::span<const MPValue> coeffs, const MPValue& s) {
  MPValue acc = coeffs.back();
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * s + coeffs[j];
  return acc;
}

}  // namespace

std::vector<MPValue> residual_scan_serial(const ReducedProblem& prob, const ChebPoly& q,
                                          std::span<const MPValue> ts) {
  std::vector<MPValue> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(prob.residual(t, q(t)));
  return out;
}

std::vector<MPValue> residual_scan_parallel(const ReducedProblem& prob, const ChebPoly& q,
                                            std::span<const MPValue> ts) {
  const auto n = static_cast<std::ptrdiff_t>(ts.size());
  std::vector<MPValue> out(ts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = prob.residual(ts[i], q(ts[i]));
  return out;
}

std::vector<MPValue> power_residuals_serial(std::span<const MPValue> coeffs, std::span<const MPValue> s,
                                            std::span<const MPValue> w, std::span<const MPValue> g) {
  std::vector<MPValue> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(g[i] - w[i] * horner(coeffs, s[i]));
  return out;
}

std::vector<MPValue> power_residuals_parallel(std::span<const MPValue> coeffs, std::span<const MPValue> s,
                                              std::span<const MPValue> w, std::span<const MPValue> g) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  std::vector<MPValue> out(s.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = g[i] - w[i] * horner(coeffs, s[i]);
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace zolo::kernels
