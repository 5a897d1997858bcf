#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssi/interval.hpp"
#include "ssi/upoly.hpp"

namespace ssi {

/// A real algebraic number: either an exact rational, or the unique root of a squarefree
/// polynomial in an open interval (lo, hi) whose endpoints are not roots.
///
/// Refinement mutates the interval; the defining polynomial may be replaced by a factor
/// that still vanishes at the number (this happens during exact zero tests).
class RealAlg {
 public:
  RealAlg() = default;
  static RealAlg rational(const Rational& r);
  /// p squarefree, exactly one root in (lo, hi), p(lo) p(hi) < 0.
  RealAlg(UPoly p, Rational lo, Rational hi);

  bool is_rational() const { return exact_; }
  /// Exact value; only valid when is_rational().
  const Rational& value() const { return value_; }
  const Rational& lo() const { return exact_ ? value_ : lo_; }
  const Rational& hi() const { return exact_ ? value_ : hi_; }
  Interval interval() const { return {lo(), hi()}; }
  Rational width() const { return hi() - lo(); }
  /// Defining polynomial (x - value for rationals).
  const UPoly& poly() const { return p_; }

  void bisect();
  /// Shrinks until width <= w.
  void refine(const Rational& w);
  /// Shrinks until the interval lies strictly inside (a, b); the number must be in there.
  void refine_inside(const Rational& a, const Rational& b);

  /// Sign of h at this number, certified. May shrink the interval or replace the
  /// defining polynomial by a factor.
  int sign_at(const UPoly& h);
  /// Sign of (this - r).
  int compare(const Rational& r);
  /// Decides whether the number is rational; if so switches to the exact form.
  /// The check is complete: it refines below 1/lc^2 of the primitive integer polynomial.
  bool certify_rational();
  /// Cheap attempt with the current interval only.
  bool try_rational();
  /// Restrict the defining polynomial to a factor g (g | poly) if g vanishes here;
  /// returns whether it does.
  bool restrict_to_factor(const UPoly& g);

  double approx() const;
  std::string to_string() const;

 private:
  UPoly p_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
  bool exact_ = false;
  bool rational_checked_ = false;
  Rational value_;
};

using RealAlgPtr = std::shared_ptr<RealAlg>;

/// Sign of (a - b); equality is decided exactly.
int compare(RealAlg& a, RealAlg& b);

/// Real roots of p in the closed interval [lo, hi], sorted. The squarefree part is taken
/// internally. Rational roots are certified and returned in exact form when
/// `certify_rationals` is set.
std::vector<RealAlg> isolate_univariate(const UPoly& p, const Rational& lo, const Rational& hi,
                                        bool certify_rationals = true);

/// Number of distinct real roots of p in the open interval (lo, hi). Throws when an
/// endpoint is a root, so the caller can perturb the query.
int count_roots_in(const UPoly& p, const Rational& lo, const Rational& hi);

}  // namespace ssi
