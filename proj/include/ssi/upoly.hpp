#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssi/poly.hpp"
#include "ssi/rational.hpp"

namespace ssi {

/// Dense univariate polynomial over Q; c[i] is the coefficient of x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UPoly x();
  static UPoly from_poly(const Poly& p, const std::string& var);
  Poly to_poly(const std::string& var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign((*this)(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  /// p(x + a)
  UPoly shift(const Rational& a) const;
  /// p(k x)
  UPoly scale(const Rational& k) const;
  /// Integer coefficients with gcd 1 and the sign of the leading coefficient kept.
  std::vector<Integer> primitive_integer() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& k);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns (g, s, t) with s a + t b = g, g monic.
struct XGcd {
  UPoly g, s, t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);
UPoly squarefree(const UPoly& p);

/// Number of sign changes in a coefficient sequence, zeros skipped.
template <class T, class SignFn>
int sign_variations(const std::vector<T>& c, SignFn sgn) {
  int prev = 0;
  int count = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace ssi
