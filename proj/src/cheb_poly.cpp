#include "zolo/cheb_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zolo {

ChebPoly::ChebPoly(MPValue lo, MPValue hi, std::vector<MPValue> coeffs)
    : lo_(std::move(lo)), hi_(std::move(hi)), coeffs_(std::move(coeffs)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("ChebPoly: interval requires lo < hi");
  if (coeffs_.empty()) coeffs_.emplace_back(MPValue(std::max(lo_.bits(), hi_.bits())));
}

std::size_t ChebPoly::degree() const {
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (!coeffs_[j].is_zero()) return j;
  }
  return 0;
}

MPValue ChebPoly::to_reference(const MPValue& t) const {
  return (ldexp(t, 1) - lo_ - hi_) / (hi_ - lo_);
}

MPValue ChebPoly::operator()(const MPValue& t) const {
  const MPValue s = to_reference(t);
  const MPValue two_s = ldexp(s, 1);
  MPValue b1(s.bits());
  MPValue b2(s.bits());
  for (std::size_t j = coeffs_.size(); j-- > 1;) {
    MPValue b0 = coeffs_[j] + two_s * b1 - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return coeffs_[0] + s * b1 - b2;
}

ChebPoly ChebPoly::derivative() const {
  const std::size_t n = coeffs_.size();
  const Bits bits = coeffs_[0].bits();
  if (n == 1) return ChebPoly(lo_, hi_, {MPValue(bits)});
  std::vector<MPValue> d(n - 1, MPValue(bits));
  // d_{j-1} = d_{j+1} + 2 j c_j, then halve d_0.
  for (std::size_t j = n - 1; j >= 1; --j) {
    MPValue next = (j + 1 < n - 1) ? d[j + 1] : MPValue(bits);
    d[j - 1] = next + coeffs_[j] * static_cast<double>(2 * j);
  }
  d[0] = ldexp(d[0], -1);
  const MPValue scale = 2.0 / (hi_ - lo_);
  for (auto& c : d) c = c * scale;
  return ChebPoly(lo_, hi_, std::move(d));
}

std::vector<MPValue> ChebPoly::to_power_basis() const {
  const std::size_t n = coeffs_.size();
  const Bits bits = 2 * std::max(coeffs_[0].bits(), lo_.bits());
  // s = alpha t + beta; T_{j+1} = 2 s T_j - T_{j-1}, each T_j kept in powers of t.
  const MPValue width(hi_ - lo_, bits);
  const MPValue alpha = 2.0 / width;
  const MPValue beta = -(MPValue(lo_, bits) + MPValue(hi_, bits)) / width;
  std::vector<MPValue> out(n, MPValue(bits));
  std::vector<MPValue> prev(n, MPValue(bits));
  std::vector<MPValue> cur(n, MPValue(bits));
  prev[0] = MPValue(1L, bits);
  out[0] = out[0] + coeffs_[0];
  if (n > 1) {
    cur[0] = beta;
    cur[1] = alpha;
    for (std::size_t i = 0; i < 2; ++i) out[i] = out[i] + coeffs_[1] * cur[i];
  }
  for (std::size_t j = 2; j < n; ++j) {
    std::vector<MPValue> next(n, MPValue(bits));
    for (std::size_t i = 0; i < j; ++i) {
      next[i] = next[i] + ldexp(beta * cur[i], 1) - prev[i];
      next[i + 1] = next[i + 1] + ldexp(alpha * cur[i], 1);
    }
    prev = std::move(cur);
    cur = std::move(next);
    for (std::size_t i = 0; i <= j; ++i) out[i] = out[i] + coeffs_[j] * cur[i];
  }
  const Bits out_bits = coeffs_[0].bits();
  for (auto& c : out) c = MPValue(c, out_bits);
  return out;
}

ChebEval cheb_eval(const ChebPoly& q, const MPValue& t) { return {q(t), !q.contains(t)}; }

std::vector<MPValue> chebyshev_lobatto(std::size_t n, const MPValue& lo, const MPValue& hi) {
  if (n < 2) throw std::invalid_argument("chebyshev_lobatto: need at least 2 points");
  const Bits bits = std::max(lo.bits(), hi.bits());
  const MPValue mid = ldexp(lo + hi, -1);
  const MPValue half = ldexp(hi - lo, -1);
  const MPValue pi_over = pi(bits) / static_cast<double>(n - 1);
  std::vector<MPValue> pts;
  pts.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0) {
      pts.emplace_back(lo, bits);
    } else if (j == n - 1) {
      pts.emplace_back(hi, bits);
    } else if (2 * j == n - 1) {
      pts.push_back(mid);
    } else {
      pts.push_back(mid - half * cos(pi_over * static_cast<double>(j)));
    }
  }
  return pts;
}

}  // namespace zolo
