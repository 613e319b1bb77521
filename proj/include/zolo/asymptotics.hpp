#pragma once

// Closed-form evaluators: the m -> infinity limit constant of the normalized
// error, the B-surrogate, Y_k, the diagonal reduction, the uniform |x|^p
// asymptotic, the weighted-to-uniform constant link, and the two-slit
// solvable model (critical point, B, its expansion, and the map itself).

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "zolo/mp_value.hpp"

namespace zolo {

enum class FormulaId {
  EQ01,
  EQ41_B,
  EQ32_B_FROM_L,
  YK,
  EQ62_DIAG,
  EQ6215_MAP,
  APP1_EN,
  ESTAR_CONST,
  MODEL_C,
  MODEL_B,
  MODEL_B_Q,
  MODEL_PHI,
};

std::string to_string(FormulaId id);

struct AsymptoticReport {
  FormulaId formula_id = FormulaId::EQ01;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  /// Imaginary part; only MODEL_PHI sets it.
  double value_im = 0.0;
  bool is_complex = false;
};

/// (2/pi) ((1-a^2)/(2a))^(k+1/2) Gamma(k+1/2)
double limit_rhs_eq01(int k, double a);

/// L ((1+a)/(1-a))^(m-1/2) (2m-1)^(k+1/2), evaluated in log space at L's precision.
MPValue normalized_error(int k, int m, const MPValue& a, const MPValue& L);

/// B = arccosh(1/L); requires 0 < L < 1.
MPValue b_from_error(const MPValue& L);
double b_from_error(double L);

/// log Gamma(k+1/2) - (k+1/2) log 2 - log pi, integer k >= 0 only.
double y_k_closed(int k);

/// (m-1/2) log((1+a)/(1-a)) + (k+1/2) log(2m-1) + (k+1/2) log(a/(1-a^2)) - Y_k
double b_asymptote(int k, int m, double a);

/// 2 sqrt(a) / (1 + a)
double diag_map(double a);
MPValue diag_map(const MPValue& a);

/// (1-a) / sqrt(pi sqrt(a) (1+a))
double diag_limit_rhs(double a);

/// Uniform error asymptotic for |x|^p by degree-n polynomials on [-1,-a] U [a,1]:
/// with s = -p/2, l = n/2:  a^(-s-1) l^(s-1) / |Gamma(s)| ((1-a)/(1+a))^(l+1) (1+a)^2 / 2.
double app1_en_asymptote(double p, double a, int n);

/// ((1+a)^2/a)^(p/2+1) c(p),  c(p) = (2/pi) 2^(-p/2-1) Gamma(p/2+1); p > -2, not even.
double estar_limit_const(double p, double a);

/// sqrt((m a^2 + k a) / (m + k a))
double model_critical_point(int k, int m, double a);

/// k log((c+a)/(c-a)) + m log((1+c)/(1-c)); requires k >= 1.
double model_B(int k, int m, double a);

/// Ratio mode k = q m: m (q log((c+a)/(c-a)) + log((1+c)/(1-c))), c = sqrt((a^2+qa)/(1+qa)).
double model_B_q(int q, int m, double a);

/// m log((1+a)/(1-a)) + k log(2m) + k log(2a/(1-a^2)) + k - k log k
double model_B_asymptote(int k, int m, double a);

/// k log((a+z)/(a-z)) + m log((1+z)/(1-z)) on the closed upper half-plane,
/// principal branches, so Im phi lies in [0, (k+m) pi]. Throws at z = +-a, +-1
/// and for Im z < 0.
MPComplex model_phi(const MPComplex& z, int k, int m, const MPValue& a);
std::complex<double> model_phi(std::complex<double> z, int k, int m, double a);

/// Dispatches by id using named inputs (k, m, a, p, n, q, L, z_re, z_im).
/// Missing or out-of-domain inputs throw std::invalid_argument.
AsymptoticReport evaluate_formula(FormulaId id, const std::vector<std::pair<std::string, double>>& inputs);

}  // namespace zolo
