#pragma once

// Scalar kernels shared by the solver and the checks: extremum search,
// adaptive quadrature, dense linear solve and the Gamma function.

#include <functional>
#include <vector>

#include "zolo/mp_value.hpp"

namespace zolo {

using ScalarFn = std::function<MPValue(const MPValue&)>;

enum class Extremum { Maximum, Minimum };

struct Bracket {
  MPValue left;
  MPValue mid;
  MPValue right;
};

struct ExtremumResult {
  MPValue t;
  MPValue value;
  bool converged = true;
  /// When not converged: the other surviving candidate.
  MPValue alt_t;
  MPValue alt_value;
  int iterations = 0;
};

/// Golden-section search on a bracket whose middle point beats both ends.
/// Throws std::invalid_argument if the bracket is not ordered or not a bracket.
ExtremumResult find_extremum(const ScalarFn& f, const Bracket& bracket, const MPValue& tol,
                             Extremum kind = Extremum::Maximum, int max_iterations = 2000);

struct Quadrature {
  MPValue abs_tol;
  int max_subdivisions = 1 << 16;
};

struct QuadResult {
  MPValue value;
  MPValue error_estimate;
  bool ok = true;  // false: subdivision budget exhausted, value is partial
  int subdivisions = 0;
};

/// Adaptive Simpson with Richardson correction.
QuadResult integrate(const ScalarFn& f, const MPValue& lo, const MPValue& hi, const Quadrature& quad);

/// Solves the dense n x n system A x = b (A row-major) by Gaussian
/// elimination with complete pivoting. Throws std::runtime_error if singular.
std::vector<MPValue> solve_dense(std::vector<MPValue> a, std::vector<MPValue> b);

/// Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!) at `bits` precision.
MPValue gamma_half_integer(int k, Bits bits);

/// Gamma(x) in double precision (Lanczos, g = 7, with reflection for x < 1/2).
/// Throws std::domain_error at the poles x = 0, -1, -2, ...
double gamma_real(double x);

}  // namespace zolo
