#pragma once

// Arbitrary-precision binary floating point on top of MPFR.
//
// Every MPValue carries its own mantissa width. Binary operations round the
// result to the larger of the operand widths; operations with a plain double
// keep the MPValue's width. All rounding is to nearest.

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace zolo {

using Bits = mpfr_prec_t;

/// Smallest mantissa width accepted from user input.
inline constexpr Bits kMinUserBits = 24;

class MPValue {
 public:
  MPValue();  // zero, 53 bits
  explicit MPValue(Bits bits);
  MPValue(double v, Bits bits);
  MPValue(long v, Bits bits);
  MPValue(int v, Bits bits) : MPValue(static_cast<long>(v), bits) {}
  /// Copy of `other` rounded to `bits`.
  MPValue(const MPValue& other, Bits bits);

  MPValue(const MPValue& other);
  MPValue(MPValue&& other) noexcept;
  MPValue& operator=(const MPValue& other);
  MPValue& operator=(MPValue&& other) noexcept;
  ~MPValue();

  Bits bits() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Scientific decimal. digits == 0 picks enough digits to round-trip.
  std::string to_string(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  MPValue& operator+=(const MPValue& rhs);
  MPValue& operator-=(const MPValue& rhs);
  MPValue& operator*=(const MPValue& rhs);
  MPValue& operator/=(const MPValue& rhs);
  MPValue& operator*=(double rhs);
  MPValue& operator/=(double rhs);

 private:
  mpfr_t v_;
};

/// Parses a decimal string ("0.5", "-1.25e-3") at `bits` of precision.
/// Throws std::invalid_argument on malformed input or bits < kMinUserBits.
MPValue mp(std::string_view decimal, Bits bits);

MPValue operator-(const MPValue& x);
MPValue operator+(const MPValue& a, const MPValue& b);
MPValue operator-(const MPValue& a, const MPValue& b);
MPValue operator*(const MPValue& a, const MPValue& b);
MPValue operator/(const MPValue& a, const MPValue& b);
MPValue operator+(const MPValue& a, double b);
MPValue operator-(const MPValue& a, double b);
MPValue operator*(const MPValue& a, double b);
MPValue operator/(const MPValue& a, double b);
MPValue operator+(double a, const MPValue& b);
MPValue operator-(double a, const MPValue& b);
MPValue operator*(double a, const MPValue& b);
MPValue operator/(double a, const MPValue& b);

bool operator==(const MPValue& a, const MPValue& b);
std::partial_ordering operator<=>(const MPValue& a, const MPValue& b);
bool operator==(const MPValue& a, double b);
std::partial_ordering operator<=>(const MPValue& a, double b);

MPValue abs(const MPValue& x);
MPValue sqrt(const MPValue& x);
MPValue exp(const MPValue& x);
MPValue log(const MPValue& x);
MPValue log1p(const MPValue& x);
MPValue pow(const MPValue& x, const MPValue& y);
MPValue pow(const MPValue& x, long n);
MPValue sin(const MPValue& x);
MPValue cos(const MPValue& x);
MPValue acos(const MPValue& x);
MPValue sinh(const MPValue& x);
MPValue cosh(const MPValue& x);
MPValue acosh(const MPValue& x);
MPValue atan2(const MPValue& y, const MPValue& x);
MPValue hypot(const MPValue& x, const MPValue& y);
/// x * 2^e, exact.
MPValue ldexp(const MPValue& x, long e);
MPValue pi(Bits bits);
MPValue lngamma(const MPValue& x);

const MPValue& max(const MPValue& a, const MPValue& b);
const MPValue& min(const MPValue& a, const MPValue& b);

/// Complex number over MPValue pairs; only what the curve and model checks need.
struct MPComplex {
  MPValue re;
  MPValue im;
};

MPValue abs(const MPComplex& z);

/// Principal arccos, returned as (u, v) with u in [0, pi] and
/// cos(u + iv) == z. v carries the sign opposite to Im z. Computed through
/// v = acosh((|z+1| + |z-1|)/2) and an atan2 for u, so u stays accurate even
/// when it is within 2^-bits of pi.
MPComplex principal_arccos(const MPComplex& z);

/// cos(u + iv) = cos u cosh v - i sin u sinh v.
MPComplex cos(const MPComplex& w);

}  // namespace zolo
