#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ssi/poly.hpp"

namespace ssi {

/// Pseudo-remainder of a by b with respect to var: rem(lc(b)^(deg a - deg b + 1) a, b).
Poly prem(const Poly& a, const Poly& b, const std::string& var);

/// Res_var(p, q) by the subresultant PRS. A side that is constant in var is raised to
/// the other side's degree; two constants give 1.
Poly resultant(const Poly& p, const Poly& q, const std::string& var);

/// Exact quotient p / q; throws when q is zero or the remainder is nonzero.
Poly exact_divide(const Poly& p, const Poly& q);
/// Returns true and sets quot when q divides p.
bool divides(const Poly& q, const Poly& p, Poly* quot = nullptr);

/// Greatest common divisor over Q, normalized (see normalize). gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);

/// Content w.r.t. main_vars (a polynomial in the remaining variables) and the primitive part.
/// The content absorbs the positive rational content so the primitive part has coprime
/// integer coefficients.
std::pair<Poly, Poly> content_primitive(const Poly& p, const std::set<std::string>& main_vars);

/// p / gcd(p, all partial derivatives), normalized.
Poly squarefree_part(const Poly& p);

/// Canonical representative up to a nonzero rational constant: coprime integer
/// coefficients and a positive graded-lex leading coefficient.
Poly normalize(const Poly& p);

/// Positive rational c with p / c having coprime integer coefficients.
Rational rational_content(const Poly& p);

/// Equality up to a nonzero rational constant.
bool equal_up_to_constant(const Poly& a, const Poly& b);

/// Successive resultant elimination: for each variable in turn, the polynomial of lowest
/// positive degree in it is the pivot and every other polynomial containing the variable is
/// replaced by its resultant with the pivot. Zero results are dropped; survivors are made
/// squarefree and normalized. A nonzero constant result means the system has no solution:
/// the return value is then empty and *inconsistent is set.
std::vector<Poly> eliminate(std::vector<Poly> system, const std::vector<std::string>& vars, bool* inconsistent = nullptr);

/// Quotient of two polynomials with the common gcd removed.
struct RationalFunction {
  Poly numer;
  Poly denom{Rational(1)};

  RationalFunction() = default;
  RationalFunction(Poly n, Poly d);

  /// Divide out gcd(numer, denom) and make denom's leading coefficient positive and integer-primitive.
  RationalFunction reduced() const;
  RationalFunction derivative(const std::string& var) const;
  Rational evaluate(const std::map<std::string, Rational>& at) const;
  bool depends_on(const std::string& var) const { return numer.has_var(var) || denom.has_var(var); }
  RationalFunction rename(const std::map<std::string, std::string>& m) const;
  /// Substitute var := value (a rational function); the result is not reduced.
  RationalFunction substitute(const std::string& var, const RationalFunction& value) const;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

}  // namespace ssi
