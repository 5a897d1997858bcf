#pragma once

#include <map>
#include <string>

#include "ssi/poly.hpp"
#include "ssi/upoly.hpp"

namespace ssi {

/// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static Interval point(const Rational& r) { return {r, r}; }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  /// +1 / -1 when the interval excludes zero, 0 otherwise.
  int sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& k);
Interval pow(const Interval& a, unsigned e);
Interval hull(const Interval& a, const Interval& b);
/// Throws when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

/// Horner evaluation.
Interval evaluate(const UPoly& p, const Interval& x);
/// Term-wise evaluation; every variable of p must be bound.
Interval evaluate(const Poly& p, const std::map<std::string, Interval>& at);

}  // namespace ssi
