#include "zolo/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace zolo {

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::WeightedSgn ? "weighted-sgn" : "unweighted-abs-p";
}

ProblemSpec ProblemSpec::weighted(int k, int m, MPValue a) {
  ProblemSpec s;
  s.kind = ProblemKind::WeightedSgn;
  s.k = k;
  s.m = m;
  s.a = std::move(a);
  return s;
}

ProblemSpec ProblemSpec::unweighted(double p, int n, MPValue a) {
  ProblemSpec s;
  s.kind = ProblemKind::UnweightedAbsP;
  s.p = p;
  s.n = n;
  s.a = std::move(a);
  return s;
}

int ProblemSpec::degree() const { return kind == ProblemKind::WeightedSgn ? m + k - 1 : n / 2; }

void validate(const ProblemSpec& spec) {
  if (!(spec.a > 0.0 && spec.a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
  if (!spec.allow_degenerate && (spec.a <= 0.01 || spec.a >= 0.99)) {
    throw std::invalid_argument("a <= 0.01 or a >= 0.99 is degenerate; pass allow_degenerate to override");
  }
  if (spec.kind == ProblemKind::WeightedSgn) {
    if (spec.k < 0) throw std::invalid_argument("k must be >= 0");
    if (spec.m < 1) throw std::invalid_argument("m must be >= 1");
  } else {
    if (!(spec.p > 0.0) || !std::isfinite(spec.p)) throw std::invalid_argument("p must be positive");
    const double half = spec.p / 2.0;
    if (half == std::floor(half)) throw std::invalid_argument("p must not be an even integer");
    if (spec.n < 2 || spec.n % 2 != 0) throw std::invalid_argument("n must be an even integer >= 2");
  }
  if (!(spec.level_tol > 0.0 && spec.level_tol < 1.0)) throw std::invalid_argument("level_tol must lie in (0, 1)");
  if (spec.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (spec.mantissa_bits != 0 && spec.mantissa_bits < default_precision(spec)) {
    throw std::invalid_argument("mantissa_bits " + std::to_string(spec.mantissa_bits) +
                                " is below the required " + std::to_string(default_precision(spec)));
  }
}

Bits default_precision(const ProblemSpec& spec) {
  const double a = spec.a.to_double();
  const int rate = spec.kind == ProblemKind::WeightedSgn ? std::max(spec.k, spec.m) : spec.n / 2;
  const double per_step = std::log2((1.0 + a) / (1.0 - a));
  return static_cast<Bits>(std::ceil(rate * per_step)) + 96;
}

Bits working_precision(const ProblemSpec& spec) {
  return spec.mantissa_bits != 0 ? spec.mantissa_bits : default_precision(spec);
}

ReducedProblem::ReducedProblem(const ProblemSpec& spec, Bits bits)
    : kind_(spec.kind),
      k_(spec.k),
      half_p_(spec.p / 2.0, bits),
      sqrt_target_(spec.kind == ProblemKind::UnweightedAbsP && spec.p == 1.0),
      degree_(spec.degree()),
      bits_(bits) {
  const MPValue a(spec.a, bits);
  lo_ = a * a;
  hi_ = MPValue(1L, bits);
}

MPValue ReducedProblem::target(const MPValue& t) const {
  if (kind_ == ProblemKind::WeightedSgn) return MPValue(1L, bits_);
  return sqrt_target_ ? sqrt(t) : pow(t, half_p_);
}

MPValue ReducedProblem::weight(const MPValue& t) const {
  if (kind_ == ProblemKind::UnweightedAbsP) return MPValue(1L, bits_);
  // t^{-(k - 1/2)} = sqrt(t) / t^k
  return k_ == 0 ? sqrt(t) : sqrt(t) / pow(t, static_cast<long>(k_));
}

}  // namespace zolo
