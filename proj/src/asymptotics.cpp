#include "zolo/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zolo/numerics.hpp"

namespace zolo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit_interval(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
}

void require_not_even(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
  if (p / 2.0 == std::floor(p / 2.0)) throw std::invalid_argument("p must not be an even integer");
}

double lgamma_half_integer(int k) { return log(gamma_half_integer(k, 128)).to_double(); }

}  // namespace

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::EQ01: return "EQ01";
    case FormulaId::EQ41_B: return "EQ41_B";
    case FormulaId::EQ32_B_FROM_L: return "EQ32_B_FROM_L";
    case FormulaId::YK: return "YK";
    case FormulaId::EQ62_DIAG: return "EQ62_DIAG";
    case FormulaId::EQ6215_MAP: return "EQ6215_MAP";
    case FormulaId::APP1_EN: return "APP1_EN";
    case FormulaId::ESTAR_CONST: return "ESTAR_CONST";
    case FormulaId::MODEL_C: return "MODEL_C";
    case FormulaId::MODEL_B: return "MODEL_B";
    case FormulaId::MODEL_B_Q: return "MODEL_B_Q";
    case FormulaId::MODEL_PHI: return "MODEL_PHI";
  }
  return "UNKNOWN";
}

double limit_rhs_eq01(int k, double a) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  require_unit_interval(a);
  const double e = k + 0.5;
  return 2.0 / kPi * std::exp(e * std::log((1.0 - a * a) / (2.0 * a)) + lgamma_half_integer(k));
}

MPValue normalized_error(int k, int m, const MPValue& a, const MPValue& L) {
  if (!(L > 0.0)) throw std::invalid_argument("normalized_error: L must be positive");
  const Bits bits = L.bits();
  const MPValue av(a, bits);
  const MPValue log_growth = log((1.0 + av) / (1.0 - av)) * (m - 0.5);
  const MPValue log_poly = log(MPValue(2L * m - 1, bits)) * (k + 0.5);
  return exp(log(L) + log_growth + log_poly);
}

MPValue b_from_error(const MPValue& L) {
  if (!(L > 0.0 && L < 1.0)) throw std::invalid_argument("b_from_error: L must lie in (0, 1)");
  return acosh(1.0 / L);
}

double b_from_error(double L) {
  if (!(L > 0.0 && L < 1.0)) throw std::invalid_argument("b_from_error: L must lie in (0, 1)");
  return std::acosh(1.0 / L);
}

double y_k_closed(int k) {
  if (k < 0) throw std::invalid_argument("Y_k is only available in closed form for integer k >= 0");
  return lgamma_half_integer(k) - (k + 0.5) * std::log(2.0) - std::log(kPi);
}

double b_asymptote(int k, int m, double a) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  require_unit_interval(a);
  const double e = k + 0.5;
  return (m - 0.5) * std::log((1.0 + a) / (1.0 - a)) + e * std::log(2.0 * m - 1.0) +
         e * std::log(a / (1.0 - a * a)) - y_k_closed(k);
}

double diag_map(double a) {
  require_unit_interval(a);
  return 2.0 * std::sqrt(a) / (1.0 + a);
}

MPValue diag_map(const MPValue& a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
  return ldexp(sqrt(a), 1) / (1.0 + a);
}

double diag_limit_rhs(double a) {
  require_unit_interval(a);
  return (1.0 - a) / std::sqrt(kPi * std::sqrt(a) * (1.0 + a));
}

double app1_en_asymptote(double p, double a, int n) {
  require_not_even(p);
  require_unit_interval(a);
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be an even integer >= 2");
  const double s = -p / 2.0;
  const double l = n / 2.0;
  const double log_val = (-s - 1.0) * std::log(a) + (s - 1.0) * std::log(l) - std::log(std::abs(gamma_real(s))) +
                         (l + 1.0) * std::log((1.0 - a) / (1.0 + a)) + std::log((1.0 + a) * (1.0 + a) / 2.0);
  return std::exp(log_val);
}

double estar_limit_const(double p, double a) {
  // Gamma(p/2 + 1) stays finite down to p > -2, which admits p = 2k - 1 at k = 0.
  if (!(p > -2.0)) throw std::invalid_argument("p must exceed -2");
  if (p / 2.0 == std::floor(p / 2.0)) throw std::invalid_argument("p must not be an even integer");
  require_unit_interval(a);
  const double c = 2.0 / kPi * std::pow(2.0, -p / 2.0 - 1.0) * gamma_real(p / 2.0 + 1.0);
  return std::pow((1.0 + a) * (1.0 + a) / a, p / 2.0 + 1.0) * c;
}

double model_critical_point(int k, int m, double a) {
  if (k < 0 || m < 1) throw std::invalid_argument("model needs k >= 0 and m >= 1");
  require_unit_interval(a);
  return std::sqrt((m * a * a + k * a) / (m + k * a));
}

double model_B(int k, int m, double a) {
  if (k < 1) throw std::invalid_argument("model_B needs k >= 1 (the slit model degenerates at k = 0)");
  const double c = model_critical_point(k, m, a);
  if (!(c > a)) throw std::invalid_argument("model_B: critical point does not exceed a");
  return k * std::log((c + a) / (c - a)) + m * std::log((1.0 + c) / (1.0 - c));
}

double model_B_q(int q, int m, double a) {
  if (q < 1 || m < 1) throw std::invalid_argument("model_B_q needs q >= 1 and m >= 1");
  require_unit_interval(a);
  const double c = std::sqrt((a * a + q * a) / (1.0 + q * a));
  return m * (q * std::log((c + a) / (c - a)) + std::log((1.0 + c) / (1.0 - c)));
}

double model_B_asymptote(int k, int m, double a) {
  if (k < 1 || m < 1) throw std::invalid_argument("model_B_asymptote needs k >= 1 and m >= 1");
  require_unit_interval(a);
  return m * std::log((1.0 + a) / (1.0 - a)) + k * std::log(2.0 * m) + k * std::log(2.0 * a / (1.0 - a * a)) + k -
         k * std::log(static_cast<double>(k));
}

MPComplex model_phi(const MPComplex& z, int k, int m, const MPValue& a) {
  if (k < 0 || m < 0) throw std::invalid_argument("model_phi needs k, m >= 0");
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
  if (z.im < 0.0) throw std::invalid_argument("model_phi: z must lie in the closed upper half-plane");
  if (z.im.is_zero() && (abs(z.re) == a || abs(z.re) == 1.0)) {
    throw std::invalid_argument("model_phi: z is a branch point");
  }
  const Bits bits = std::max({z.re.bits(), z.im.bits(), a.bits()});
  const MPValue x(z.re, bits), y(z.im, bits), av(a, bits);
  const MPValue y2 = y * y;
  const MPValue mod2 = x * x + y2;
  // log((c+z)/(c-z)) = 1/2 log(|c+z|^2/|c-z|^2) + i atan2(2 c y, c^2 - |z|^2)
  auto log_ratio = [&](const MPValue& c) -> MPComplex {
    const MPValue num = (c + x) * (c + x) + y2;
    const MPValue den = (c - x) * (c - x) + y2;
    return {ldexp(log(num / den), -1), atan2(ldexp(c * y, 1), c * c - mod2)};
  };
  const MPComplex inner = log_ratio(av);
  const MPComplex outer = log_ratio(MPValue(1L, bits));
  return {inner.re * static_cast<double>(k) + outer.re * static_cast<double>(m),
          inner.im * static_cast<double>(k) + outer.im * static_cast<double>(m)};
}

std::complex<double> model_phi(std::complex<double> z, int k, int m, double a) {
  const MPComplex r = model_phi(MPComplex{MPValue(z.real(), 64), MPValue(z.imag(), 64)}, k, m, MPValue(a, 64));
  return {r.re.to_double(), r.im.to_double()};
}

namespace {

double input(const std::vector<std::pair<std::string, double>>& in, const std::string& name) {
  for (const auto& [key, v] : in) {
    if (key == name) return v;
  }
  throw std::invalid_argument("formula input '" + name + "' is missing");
}

int int_input(const std::vector<std::pair<std::string, double>>& in, const std::string& name) {
  const double v = input(in, name);
  if (v != std::floor(v)) throw std::invalid_argument("formula input '" + name + "' must be an integer");
  return static_cast<int>(v);
}

}  // namespace

AsymptoticReport evaluate_formula(FormulaId id, const std::vector<std::pair<std::string, double>>& in) {
  AsymptoticReport rep;
  rep.formula_id = id;
  rep.inputs = in;
  switch (id) {
    case FormulaId::EQ01:
      rep.value = limit_rhs_eq01(int_input(in, "k"), input(in, "a"));
      break;
    case FormulaId::EQ41_B:
      rep.value = b_asymptote(int_input(in, "k"), int_input(in, "m"), input(in, "a"));
      break;
    case FormulaId::EQ32_B_FROM_L:
      rep.value = b_from_error(input(in, "L"));
      break;
    case FormulaId::YK:
      rep.value = y_k_closed(int_input(in, "k"));
      break;
    case FormulaId::EQ62_DIAG:
      rep.value = diag_limit_rhs(input(in, "a"));
      break;
    case FormulaId::EQ6215_MAP:
      rep.value = diag_map(input(in, "a"));
      break;
    case FormulaId::APP1_EN:
      rep.value = app1_en_asymptote(input(in, "p"), input(in, "a"), int_input(in, "n"));
      break;
    case FormulaId::ESTAR_CONST:
      rep.value = estar_limit_const(input(in, "p"), input(in, "a"));
      break;
    case FormulaId::MODEL_C:
      rep.value = model_critical_point(int_input(in, "k"), int_input(in, "m"), input(in, "a"));
      break;
    case FormulaId::MODEL_B:
      rep.value = model_B(int_input(in, "k"), int_input(in, "m"), input(in, "a"));
      break;
    case FormulaId::MODEL_B_Q:
      rep.value = model_B_q(int_input(in, "q"), int_input(in, "m"), input(in, "a"));
      break;
    case FormulaId::MODEL_PHI: {
      const std::complex<double> z(input(in, "z_re"), input(in, "z_im"));
      const std::complex<double> w = model_phi(z, int_input(in, "k"), int_input(in, "m"), input(in, "a"));
      rep.value = w.real();
      rep.value_im = w.imag();
      rep.is_complex = true;
      break;
    }
  }
  if (!std::isfinite(rep.value) || !std::isfinite(rep.value_im)) {
    throw std::invalid_argument("formula " + to_string(id) + " is not finite at these inputs");
  }
  return rep;
}

}  // namespace zolo
