#pragma once

#include <cstddef>
#include <vector>

#include "zolo/mp_value.hpp"

namespace zolo {

/// Polynomial sum_j c_j T_j(s) where s = (2t - lo - hi) / (hi - lo) maps
/// [lo, hi] onto [-1, 1].
class ChebPoly {
 public:
  ChebPoly() : ChebPoly(MPValue(-1.0, 53), MPValue(1.0, 53), {}) {}
  ChebPoly(MPValue lo, MPValue hi, std::vector<MPValue> coeffs);

  const MPValue& lo() const { return lo_; }
  const MPValue& hi() const { return hi_; }
  const std::vector<MPValue>& coeffs() const { return coeffs_; }
  std::vector<MPValue>& coeffs() { return coeffs_; }

  /// Highest index with a nonzero coefficient (0 for the zero polynomial).
  std::size_t degree() const;
  bool contains(const MPValue& t) const { return lo_ <= t && t <= hi_; }

  /// Reference variable s for a point t.
  MPValue to_reference(const MPValue& t) const;

  /// Clenshaw recurrence. Points outside [lo, hi] are evaluated by the same
  /// formula (analytic continuation); use cheb_eval to get the flag.
  MPValue operator()(const MPValue& t) const;

  /// Derivative with respect to t, on the same interval.
  ChebPoly derivative() const;

  /// Coefficients b_j of the same polynomial written as sum_j b_j t^j.
  std::vector<MPValue> to_power_basis() const;

 private:
  MPValue lo_;
  MPValue hi_;
  std::vector<MPValue> coeffs_;
};

struct ChebEval {
  MPValue value;
  bool extrapolated = false;
};

ChebEval cheb_eval(const ChebPoly& q, const MPValue& t);

/// n >= 2 Chebyshev-Lobatto points (extrema of T_{n-1}) on [lo, hi],
/// ascending, endpoints included exactly.
std::vector<MPValue> chebyshev_lobatto(std::size_t n, const MPValue& lo, const MPValue& hi);

}  // namespace zolo
