#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zolo/cheb_poly.hpp"
#include "zolo/kernels.hpp"
#include "zolo/mp_value.hpp"
#include "zolo/problem.hpp"

namespace zolo {

/// The exchange did not level the reference within max_iterations.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<MPValue> last_reference)
      : std::runtime_error(what), last_reference_(std::move(last_reference)) {}
  const std::vector<MPValue>& last_reference() const { return last_reference_; }

 private:
  std::vector<MPValue> last_reference_;
};

/// The levelled deviation fell into the rounding floor; rerun with more bits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlternationPoint {
  MPValue t;         // in [a^2, 1]
  MPValue x;         // sqrt(t), in [a, 1]
  MPValue residual;  // target - weight * Q at t
  int sign = 0;
};

struct EquiSolution {
  ProblemKind kind = ProblemKind::WeightedSgn;
  MPValue L;
  std::vector<AlternationPoint> alternation;
  ChebPoly q;
  int iterations = 0;
  /// (max |r| - min |r|) / max |r| over the alternation.
  MPValue levelness;
  /// |h| of each levelled reference, in iteration order.
  std::vector<MPValue> level_history;
  /// Largest |residual| seen on the final dense probe scan.
  MPValue probe_max;
  Bits bits = 0;
};

/// Remez exchange on the reduced problem. Throws std::invalid_argument for an
/// invalid spec, ConvergenceError or PrecisionError on numerical failure.
EquiSolution remez_solve(const ProblemSpec& spec, kernels::Exec exec = kernels::Exec::Serial);

/// Laurent form f(x) = sum_e c_e x^e of the weighted-sgn approximant, odd e only.
struct RationalExpansion {
  std::map<int, MPValue> laurent;
  MPValue operator()(const MPValue& x) const;
};

/// Requires kind == WeightedSgn.
RationalExpansion expand_rational(const EquiSolution& sol, const ProblemSpec& spec);

struct XAlternation {
  std::vector<MPValue> x;
  bool starts_at_a = false;
  bool ends_at_one = false;
  bool anomaly() const { return !(starts_at_a && ends_at_one); }
};

/// Alternation points as x = sqrt(t); endpoint membership is checked, not assumed.
XAlternation alternation_in_x(const EquiSolution& sol);

}  // namespace zolo
