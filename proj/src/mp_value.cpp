#include "zolo/mp_value.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace zolo {

namespace {

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

MPValue apply(Unary f, const MPValue& x) {
  MPValue r(x.bits());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

MPValue apply(Binary f, const MPValue& a, const MPValue& b) {
  MPValue r(std::max(a.bits(), b.bits()));
  f(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

MPValue::MPValue() : MPValue(Bits{53}) {}

MPValue::MPValue(Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

MPValue::MPValue(double v, Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

MPValue::MPValue(long v, Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

MPValue::MPValue(const MPValue& other, Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

MPValue::MPValue(const MPValue& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

MPValue::MPValue(MPValue&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

MPValue& MPValue::operator=(const MPValue& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

MPValue& MPValue::operator=(MPValue&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

MPValue::~MPValue() { mpfr_clear(v_); }

std::string MPValue::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(std::max(digits, 0)), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  // Trailing zeros carry no information once the precision tag travels alongside.
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(static_cast<long>(e10) - 1);
  return out;
}

MPValue& MPValue::operator+=(const MPValue& rhs) { return *this = *this + rhs; }
MPValue& MPValue::operator-=(const MPValue& rhs) { return *this = *this - rhs; }
MPValue& MPValue::operator*=(const MPValue& rhs) { return *this = *this * rhs; }
MPValue& MPValue::operator/=(const MPValue& rhs) { return *this = *this / rhs; }

MPValue& MPValue::operator*=(double rhs) {
  mpfr_mul_d(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

MPValue& MPValue::operator/=(double rhs) {
  mpfr_div_d(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

MPValue mp(std::string_view decimal, Bits bits) {
  if (bits < kMinUserBits) {
    throw std::invalid_argument("mantissa width must be at least " + std::to_string(kMinUserBits) +
                                " bits, got " + std::to_string(bits));
  }
  const std::string text(decimal);
  if (text.empty()) throw std::invalid_argument("empty number");
  MPValue r(bits);
  char* end = nullptr;
  mpfr_strtofr(r.raw(), text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0' || !r.is_finite()) {
    throw std::invalid_argument("not a decimal real: '" + text + "'");
  }
  return r;
}

MPValue operator-(const MPValue& x) { return apply(mpfr_neg, x); }
MPValue operator+(const MPValue& a, const MPValue& b) { return apply(mpfr_add, a, b); }
MPValue operator-(const MPValue& a, const MPValue& b) { return apply(mpfr_sub, a, b); }
MPValue operator*(const MPValue& a, const MPValue& b) { return apply(mpfr_mul, a, b); }
MPValue operator/(const MPValue& a, const MPValue& b) { return apply(mpfr_div, a, b); }

MPValue operator+(const MPValue& a, double b) {
  MPValue r(a.bits());
  mpfr_add_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

MPValue operator-(const MPValue& a, double b) {
  MPValue r(a.bits());
  mpfr_sub_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

MPValue operator*(const MPValue& a, double b) {
  MPValue r(a.bits());
  mpfr_mul_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

MPValue operator/(const MPValue& a, double b) {
  MPValue r(a.bits());
  mpfr_div_d(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

MPValue operator+(double a, const MPValue& b) { return b + a; }

MPValue operator-(double a, const MPValue& b) {
  MPValue r(b.bits());
  mpfr_d_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

MPValue operator*(double a, const MPValue& b) { return b * a; }

MPValue operator/(double a, const MPValue& b) {
  MPValue r(b.bits());
  mpfr_d_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

bool operator==(const MPValue& a, const MPValue& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const MPValue& a, const MPValue& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const MPValue& a, double b) { return mpfr_cmp_d(a.raw(), b) == 0 && !mpfr_nan_p(a.raw()); }

std::partial_ordering operator<=>(const MPValue& a, double b) {
  if (mpfr_nan_p(a.raw()) || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.raw(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

MPValue abs(const MPValue& x) { return apply(mpfr_abs, x); }
MPValue sqrt(const MPValue& x) { return apply(mpfr_sqrt, x); }
MPValue exp(const MPValue& x) { return apply(mpfr_exp, x); }
MPValue log(const MPValue& x) { return apply(mpfr_log, x); }
MPValue log1p(const MPValue& x) { return apply(mpfr_log1p, x); }
MPValue pow(const MPValue& x, const MPValue& y) { return apply(mpfr_pow, x, y); }

MPValue pow(const MPValue& x, long n) {
  MPValue r(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

MPValue sin(const MPValue& x) { return apply(mpfr_sin, x); }
MPValue cos(const MPValue& x) { return apply(mpfr_cos, x); }
MPValue acos(const MPValue& x) { return apply(mpfr_acos, x); }
MPValue sinh(const MPValue& x) { return apply(mpfr_sinh, x); }
MPValue cosh(const MPValue& x) { return apply(mpfr_cosh, x); }
MPValue acosh(const MPValue& x) { return apply(mpfr_acosh, x); }
MPValue atan2(const MPValue& y, const MPValue& x) { return apply(mpfr_atan2, y, x); }
MPValue hypot(const MPValue& x, const MPValue& y) { return apply(mpfr_hypot, x, y); }
MPValue lngamma(const MPValue& x) { return apply(mpfr_lngamma, x); }

MPValue ldexp(const MPValue& x, long e) {
  MPValue r(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

MPValue pi(Bits bits) {
  MPValue r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

const MPValue& max(const MPValue& a, const MPValue& b) { return a < b ? b : a; }
const MPValue& min(const MPValue& a, const MPValue& b) { return b < a ? b : a; }

MPValue abs(const MPComplex& z) { return hypot(z.re, z.im); }

MPComplex principal_arccos(const MPComplex& z) {
  const Bits bits = std::max(z.re.bits(), z.im.bits());
  if (z.im.is_zero()) {
    if (abs(z.re) <= 1.0) return {acos(z.re), MPValue(bits)};
    // On the cut take v >= 0.
    const MPValue v = acosh(abs(z.re));
    return {z.re.sign() > 0 ? MPValue(bits) : pi(bits), v};
  }
  const MPValue plus = hypot(z.re + 1.0, z.im);
  const MPValue minus = hypot(z.re - 1.0, z.im);
  MPValue half_sum = ldexp(plus + minus, -1);
  if (half_sum < 1.0) half_sum = MPValue(1L, bits);
  const MPValue v_abs = acosh(half_sum);
  // sin u = |Im z| / sinh|v|, cos u = Re z / cosh v; atan2 normalizes both.
  const MPValue u = atan2(abs(z.im) / sinh(v_abs), z.re / cosh(v_abs));
  return {u, z.im.sign() > 0 ? -v_abs : v_abs};
}

MPComplex cos(const MPComplex& w) {
  return {cos(w.re) * cosh(w.im), -(sin(w.re) * sinh(w.im))};
}

}  // namespace zolo
