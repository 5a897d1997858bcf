#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssi {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certification step could not be completed (degenerate input or a cap was hit).
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// The first surface is neither projectable nor ruled.
class NotProjectableError : public Error {
 public:
  using Error::Error;
};

/// The two surfaces share a component, so the plane curve is identically zero.
class SharedComponentError : public Error {
 public:
  using Error::Error;
};

/// Parses "3", "-2/7", "0.05", "1e-3", "-1.25E2" into an exact rational.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

int sign(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Rational abs(const Rational& r);
Rational pow(const Rational& r, unsigned e);

/// Simplest rational (smallest denominator, then smallest |numerator|) in the
/// closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Simplest rational in the open interval (lo, hi); requires lo < hi.
Rational simplest_inside(const Rational& lo, const Rational& hi);

/// Nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& r, unsigned bits);

/// Decimal rendering with `digits` significant digits (round half to even via GMP).
std::string to_decimal(const Rational& r, int digits);

}  // namespace ssi
