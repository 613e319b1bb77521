#pragma once

#include <string>

#include "zolo/mp_value.hpp"

namespace zolo {

enum class ProblemKind {
  /// sgn(x) on [-1,-a] U [a,1] by odd f with poles of order 2k-1 at 0 and 2m-1 at infinity.
  WeightedSgn,
  /// |x|^p on [-1,-a] U [a,1] by polynomials of degree n (n even).
  UnweightedAbsP,
};

std::string to_string(ProblemKind kind);

struct ProblemSpec {
  ProblemKind kind = ProblemKind::WeightedSgn;
  int k = 0;
  int m = 1;
  double p = 1.0;
  int n = 2;
  MPValue a;
  /// 0 selects default_precision().
  Bits mantissa_bits = 0;
  double level_tol = 1e-12;
  int max_iterations = 60;
  /// Admit a <= 0.01 or a >= 0.99.
  bool allow_degenerate = false;

  static ProblemSpec weighted(int k, int m, MPValue a);
  static ProblemSpec weighted(int k, int m, double a) { return weighted(k, m, MPValue(a, 53)); }
  static ProblemSpec unweighted(double p, int n, MPValue a);
  static ProblemSpec unweighted(double p, int n, double a) { return unweighted(p, n, MPValue(a, 53)); }

  /// Degree budget N of Q(t); the alternation has N + 2 points.
  int degree() const;
};

/// Throws std::invalid_argument when the spec violates its domain.
void validate(const ProblemSpec& spec);

/// ceil(r * log2((1+a)/(1-a))) + 96, r the decay rate exponent of the error
/// (max(k, m) for WeightedSgn, n/2 for UnweightedAbsP).
Bits default_precision(const ProblemSpec& spec);

/// mantissa_bits if set, otherwise the default rule.
Bits working_precision(const ProblemSpec& spec);

/// Single-interval weighted Chebyshev problem on [lo, hi] = [a^2, 1]:
/// minimize max |target(t) - weight(t) Q(t)| over deg Q <= degree.
class ReducedProblem {
 public:
  ReducedProblem(const ProblemSpec& spec, Bits bits);

  const MPValue& lo() const { return lo_; }
  const MPValue& hi() const { return hi_; }
  int degree() const { return degree_; }
  Bits bits() const { return bits_; }
  ProblemKind kind() const { return kind_; }

  MPValue target(const MPValue& t) const;
  MPValue weight(const MPValue& t) const;
  MPValue residual(const MPValue& t, const MPValue& q_at_t) const {
    return target(t) - weight(t) * q_at_t;
  }

 private:
  ProblemKind kind_;
  int k_;
  MPValue half_p_;
  bool sqrt_target_;
  MPValue lo_;
  MPValue hi_;
  int degree_;
  Bits bits_;
};

}  // namespace zolo
