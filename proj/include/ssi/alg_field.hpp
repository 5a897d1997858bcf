#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssi/poly.hpp"
#include "ssi/real_roots.hpp"

namespace ssi {

/// Arithmetic in Q(alpha) for a real algebraic alpha. Elements are polynomials in alpha
/// kept reduced modulo alpha's current defining polynomial.
class AlgField {
 public:
  explicit AlgField(RealAlgPtr alpha) : alpha_(std::move(alpha)) {}

  const RealAlgPtr& alpha() const { return alpha_; }
  bool is_rational() const { return alpha_->is_rational(); }

  UPoly reduce(const UPoly& a) const;
  int sign(const UPoly& a) const { return alpha_->sign_at(a); }
  bool is_zero(const UPoly& a) const { return sign(a) == 0; }
  UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }
  /// Inverse of a nonzero element; throws if a vanishes at alpha.
  UPoly inverse(const UPoly& a) const;
  Interval enclose(const UPoly& a) const { return evaluate(a, alpha_->interval()); }

 private:
  RealAlgPtr alpha_;
};

/// Univariate polynomial in t with coefficients in Q(alpha); index = power of t.
using AlgUPoly = std::vector<UPoly>;

/// Specializes P(v, t) at v = alpha. The leading zero coefficients are trimmed.
AlgUPoly specialize(const Poly& p, const std::string& v, const std::string& t, const AlgField& k);
void trim(AlgUPoly& f, const AlgField& k);
AlgUPoly derivative(const AlgUPoly& f);
/// Remainder; b must have a nonzero leading coefficient.
AlgUPoly remainder(const AlgUPoly& a, const AlgUPoly& b, const AlgField& k);
AlgUPoly quotient(const AlgUPoly& a, const AlgUPoly& b, const AlgField& k);
/// Monic gcd.
AlgUPoly gcd(const AlgUPoly& a, const AlgUPoly& b, const AlgField& k);
AlgUPoly squarefree(const AlgUPoly& f, const AlgField& k);
/// Value at a rational t as an element of Q(alpha).
UPoly value_at(const AlgUPoly& f, const Rational& t, const AlgField& k);
int sign_at(const AlgUPoly& f, const Rational& t, const AlgField& k);
int degree(const AlgUPoly& f);

/// One isolated root of a squarefree fibre: exact rational t, or the unique root in the
/// open interval (lo, hi) with nonzero end values.
struct FibreRoot {
  bool exact = false;
  Rational lo, hi;
};

/// Roots of the squarefree f in [lo, hi], sorted. Over a rational field, `certify` decides
/// whether rational roots are recognised exactly.
std::vector<FibreRoot> isolate_fibre(const AlgUPoly& f, const Rational& lo, const Rational& hi, const AlgField& k,
                                     bool certify = true);

}  // namespace ssi
