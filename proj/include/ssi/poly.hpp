#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ssi/rational.hpp"

namespace ssi {

using Exponent = std::vector<int>;

/// Graded-lex order, largest first. Variables are compared in the order of the
/// owning polynomial's (alphabetically sorted) variable list.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: the variable list is sorted and contains only variables that
/// occur with positive degree, no zero coefficient is stored, and terms are kept
/// in graded-lex order. Two polynomials are equal iff their representations are.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)

  static Poly variable(const std::string& name);
  static Poly monomial(const Rational& c, const std::vector<std::string>& vars, const Exponent& e);
  /// Builds a canonical polynomial from arbitrary (possibly unsorted, redundant) data.
  static Poly from_terms(std::vector<std::string> vars, const TermMap& terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Value of a constant polynomial; throws for non-constants.
  Rational constant_value() const;

  bool has_var(const std::string& name) const;
  int var_index(const std::string& name) const;  // -1 when absent
  int degree(const std::string& name) const;
  int total_degree() const;
  /// Leading (graded-lex) coefficient; zero for the zero polynomial.
  Rational leading_coefficient() const;

  /// Coefficients with respect to `var`, index = power; empty for zero.
  std::vector<Poly> coefficients(const std::string& var) const;
  static Poly from_coefficients(const std::string& var, const std::vector<Poly>& coeffs);
  Poly leading_coeff(const std::string& var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly derivative(const std::string& var) const;
  Poly substitute(const std::string& var, const Poly& value) const;
  Poly substitute(const std::string& var, const Rational& value) const;
  /// Full evaluation; every variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;
  Poly rename(const std::map<std::string, std::string>& renaming) const;

  /// Canonical text: "c*x^2*y - z + 1/2" with terms in graded-lex order.
  std::string to_string() const;
  /// Parses +, -, *, /, ^ expressions with rational/decimal literals and identifiers.
  /// Division is allowed by nonzero constants only.
  static Poly parse(std::string_view text);

 private:
  // Terms re-expressed over a superset of the variable list.
  TermMap terms_over(const std::vector<std::string>& vars) const;
  void compact();

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Sorted union of two variable lists.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

}  // namespace ssi
