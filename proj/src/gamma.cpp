#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zolo/numerics.hpp"

namespace zolo {

MPValue gamma_half_integer(int k, Bits bits) {
  if (k < 0) throw std::invalid_argument("gamma_half_integer: k must be >= 0, got " + std::to_string(k));
  // Gamma(1/2) = sqrt(pi); Gamma(j + 3/2) = (j + 1/2) Gamma(j + 1/2).
  MPValue g = sqrt(pi(bits));
  for (int j = 0; j < k; ++j) g = g * (j + 0.5);
  return g;
}

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  // Valid for x >= 1/2.
  x -= 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) sum += kLanczosCoeffs[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  // t^(x+1/2) e^-t split in two to stay finite near x = 170.
  const double half_pow = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * sum;
}

}  // namespace

double gamma_real(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_real: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) {
    throw std::domain_error("gamma_real: pole at nonpositive integer " + std::to_string(x));
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

}  // namespace zolo
