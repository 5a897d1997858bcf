#include "ssi/algebra.hpp"

#include <algorithm>

namespace ssi {
namespace {

using Coeffs = std::vector<Poly>;

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs to_coeffs(const Poly& p, const std::string& var) { return p.coefficients(var); }

Poly from_coeffs(const Coeffs& c, const std::string& var) { return Poly::from_coefficients(var, c); }

// Pseudo-remainder on coefficient vectors.
Coeffs prem_coeffs(Coeffs a, const Coeffs& b) {
  int db = deg(b);
  if (deg(a) < db) return a;
  const Poly& lb = b.back();
  int d = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    Poly lr = a.back();
    int k = deg(a) - db;
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(j + k)] -= lr * b[static_cast<std::size_t>(j)];
    }
    trim(a);
    --d;
  }
  if (d > 0 && !a.empty()) {
    Poly f = lb.pow(static_cast<unsigned>(d));
    for (auto& x : a) x *= f;
  }
  return a;
}

Coeffs divide_coeffs(Coeffs a, const Poly& d) {
  if (d.is_constant()) {
    Rational inv = 1 / d.constant_value();
    for (auto& x : a) x *= inv;
    return a;
  }
  for (auto& x : a) x = exact_divide(x, d);
  return a;
}

Poly leading_term_quotient(const Poly& r, const Poly& b, bool* ok) {
  // Leading term of r divided by leading term of b, over the merged variable list.
  auto vars = merge_vars(r.vars(), b.vars());
  const auto& [er, cr] = *r.terms().begin();
  const auto& [eb, cb] = *b.terms().begin();
  Exponent e(vars.size(), 0);
  for (std::size_t i = 0; i < r.vars().size(); ++i) {
    auto pos = std::lower_bound(vars.begin(), vars.end(), r.vars()[i]) - vars.begin();
    e[static_cast<std::size_t>(pos)] += er[i];
  }
  for (std::size_t i = 0; i < b.vars().size(); ++i) {
    auto pos = std::lower_bound(vars.begin(), vars.end(), b.vars()[i]) - vars.begin();
    e[static_cast<std::size_t>(pos)] -= eb[i];
    if (e[static_cast<std::size_t>(pos)] < 0) {
      *ok = false;
      return Poly();
    }
  }
  *ok = true;
  return Poly::monomial(cr / cb, vars, e);
}

// Main variable used by the recursive gcd: the largest name occurring in either input.
std::string main_var(const Poly& a, const Poly& b) {
  std::string v;
  if (!a.vars().empty()) v = a.vars().back();
  if (!b.vars().empty() && (v.empty() || b.vars().back() > v)) v = b.vars().back();
  return v;
}

Poly content_in(const Poly& p, const std::string& var) {
  Poly g;
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly subresultant_gcd(Poly a, Poly b, const std::string& var) {
  // a, b primitive in var with positive degree.
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  Coeffs A = to_coeffs(a, var);
  Coeffs B = to_coeffs(b, var);
  Poly g(1), h(1);
  for (;;) {
    int delta = deg(A) - deg(B);
    Coeffs R = prem_coeffs(A, B);
    if (R.empty()) break;
    if (deg(R) == 0) return Poly(1);
    A = std::move(B);
    Poly div = g * h.pow(static_cast<unsigned>(delta));
    B = divide_coeffs(std::move(R), div);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Poly res = from_coeffs(B, var);
  return content_primitive(res, {var}).second;
}

}  // namespace

Poly prem(const Poly& a, const Poly& b, const std::string& var) {
  if (b.is_zero()) throw Error("pseudo-remainder by zero polynomial");
  return from_coeffs(prem_coeffs(to_coeffs(a, var), to_coeffs(b, var)), var);
}

Poly resultant(const Poly& p, const Poly& q, const std::string& var) {
  if (p.is_zero() && q.is_zero()) throw Error("zero polynomial resultant undefined");
  if (p.is_zero() || q.is_zero()) return Poly();
  int da = p.degree(var);
  int db = q.degree(var);
  if (da == 0 && db == 0) return Poly(1);
  if (db == 0) return q.pow(static_cast<unsigned>(da));
  if (da == 0) return p.pow(static_cast<unsigned>(db));

  Coeffs A = to_coeffs(p, var);
  Coeffs B = to_coeffs(q, var);
  int s = 1;
  if (da < db) {
    std::swap(A, B);
    if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
  }
  Poly g(1), h(1);
  for (;;) {
    int a = deg(A);
    int b = deg(B);
    int delta = a - b;
    if ((a % 2 == 1) && (b % 2 == 1)) s = -s;
    Coeffs R = prem_coeffs(A, B);
    A = std::move(B);
    if (R.empty()) return Poly();
    Poly div = g * h.pow(static_cast<unsigned>(delta));
    B = divide_coeffs(std::move(R), div);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (deg(B) == 0) break;
  }
  int a = deg(A);
  Poly lcb = B.back();
  Poly res = a == 1 ? lcb : exact_divide(lcb.pow(static_cast<unsigned>(a)), h.pow(static_cast<unsigned>(a - 1)));
  return s < 0 ? -res : res;
}

bool divides(const Poly& q, const Poly& p, Poly* quot) {
  if (q.is_zero()) throw Error("division by zero polynomial");
  if (q.is_constant()) {
    if (quot) *quot = p * Rational(1 / q.constant_value());
    return true;
  }
  Poly r = p;
  Poly acc;
  while (!r.is_zero()) {
    bool ok = false;
    Poly m = leading_term_quotient(r, q, &ok);
    if (!ok) return false;
    acc += m;
    r -= m * q;
  }
  if (quot) *quot = std::move(acc);
  return true;
}

Poly exact_divide(const Poly& p, const Poly& q) {
  Poly out;
  if (!divides(q, p, &out)) throw Error("exact_divide: nonzero remainder dividing " + p.to_string() + " by " + q.to_string());
  return out;
}

Rational rational_content(const Poly& p) {
  if (p.is_zero()) return 1;
  Integer num = 0;
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return p * Rational(1 / c);
}

bool equal_up_to_constant(const Poly& a, const Poly& b) { return normalize(a) == normalize(b); }

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return Poly(1);
  std::string var = main_var(p, q);
  if (!p.has_var(var)) return gcd(p, content_in(q, var));
  if (!q.has_var(var)) return gcd(q, content_in(p, var));
  Poly cp = content_in(p, var);
  Poly cq = content_in(q, var);
  Poly pp = exact_divide(p, cp);
  Poly pq = exact_divide(q, cq);
  Poly c = gcd(cp, cq);
  Poly g = subresultant_gcd(pp, pq, var);
  return normalize(c * g);
}

std::pair<Poly, Poly> content_primitive(const Poly& p, const std::set<std::string>& main_vars) {
  if (p.is_zero()) throw Error("content of zero polynomial");
  // Group terms by their exponents in the main variables.
  std::map<Exponent, Poly::TermMap> groups;
  std::vector<std::size_t> main_idx;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    if (main_vars.count(p.vars()[i])) main_idx.push_back(i);
  }
  for (const auto& [e, c] : p.terms()) {
    Exponent key;
    Exponent rest = e;
    for (std::size_t i : main_idx) {
      key.push_back(e[i]);
      rest[i] = 0;
    }
    groups[key].emplace(rest, c);
  }
  Poly g;
  for (const auto& [key, t] : groups) {
    g = gcd(g, Poly::from_terms(p.vars(), t));
    if (g.is_constant()) break;
  }
  Poly prim0 = exact_divide(p, g);
  Rational k = rational_content(prim0);
  return {g * k, prim0 * Rational(1 / k)};
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error("squarefree part of zero polynomial");
  if (p.is_constant()) return Poly(1);
  Poly g = p;
  for (const auto& v : p.vars()) {
    g = gcd(g, p.derivative(v));
    if (g.is_constant()) break;
  }
  return normalize(exact_divide(p, g));
}

std::vector<Poly> eliminate(std::vector<Poly> system, const std::vector<std::string>& vars, bool* inconsistent) {
  if (inconsistent) *inconsistent = false;
  auto add_unique = [](std::vector<Poly>& out, const Poly& p) {
    for (const auto& q : out) {
      if (q == p) return;
    }
    out.push_back(p);
  };
  std::vector<Poly> cur;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      if (inconsistent) *inconsistent = true;
      return {};
    }
    add_unique(cur, squarefree_part(p));
  }
  for (const auto& var : vars) {
    std::vector<Poly> with, without;
    for (auto& p : cur) (p.has_var(var) ? with : without).push_back(p);
    if (with.empty()) continue;
    auto pivot_it = std::min_element(with.begin(), with.end(), [&](const Poly& a, const Poly& b) {
      if (a.degree(var) != b.degree(var)) return a.degree(var) < b.degree(var);
      return a.size() < b.size();
    });
    Poly pivot = *pivot_it;
    with.erase(pivot_it);
    std::vector<Poly> next = without;
    for (const auto& q : with) {
      Poly r = resultant(pivot, q, var);
      if (r.is_zero()) continue;
      if (r.is_constant()) {
        if (inconsistent) *inconsistent = true;
        return {};
      }
      add_unique(next, squarefree_part(r));
    }
    cur = std::move(next);
  }
  return cur;
}

RationalFunction::RationalFunction(Poly n, Poly d) : numer(std::move(n)), denom(std::move(d)) {
  if (denom.is_zero()) throw Error("rational function with zero denominator");
}

RationalFunction RationalFunction::reduced() const {
  if (numer.is_zero()) return RationalFunction(Poly(), Poly(1));
  Poly g = gcd(numer, denom);
  Poly n = exact_divide(numer, g);
  Poly d = exact_divide(denom, g);
  Rational c = rational_content(d);
  if (d.leading_coefficient() < 0) c = -c;
  return RationalFunction(n * Rational(1 / c), d * Rational(1 / c));
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
  return RationalFunction(numer.derivative(var) * denom - numer * denom.derivative(var), denom * denom);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& at) const {
  Rational d = denom.evaluate(at);
  if (d == 0) throw Error("rational function evaluated at a pole");
  return numer.evaluate(at) / d;
}

RationalFunction RationalFunction::rename(const std::map<std::string, std::string>& m) const {
  return RationalFunction(numer.rename(m), denom.rename(m));
}

namespace {

// Numerator and denominator of p(var := a/b) = sum c_i a^i b^(n-i) / b^n.
RationalFunction substitute_poly(const Poly& p, const std::string& var, const RationalFunction& value) {
  if (!p.has_var(var)) return RationalFunction(p, Poly(1));
  auto cs = p.coefficients(var);
  int n = static_cast<int>(cs.size()) - 1;
  Poly num;
  Poly apow(1);
  std::vector<Poly> bpow(static_cast<std::size_t>(n) + 1);
  bpow[0] = Poly(1);
  for (int i = 1; i <= n; ++i) bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * value.denom;
  for (int i = 0; i <= n; ++i) {
    if (!cs[static_cast<std::size_t>(i)].is_zero()) {
      num += cs[static_cast<std::size_t>(i)] * apow * bpow[static_cast<std::size_t>(n - i)];
    }
    apow *= value.numer;
  }
  return RationalFunction(num, bpow[static_cast<std::size_t>(n)]);
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::string& var, const RationalFunction& value) const {
  RationalFunction n = substitute_poly(numer, var, value);
  RationalFunction d = substitute_poly(denom, var, value);
  return RationalFunction(n.numer * d.denom, n.denom * d.numer);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denom == b.denom) return RationalFunction(a.numer + b.numer, a.denom);
  return RationalFunction(a.numer * b.denom + b.numer * a.denom, a.denom * b.denom);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.denom == b.denom) return RationalFunction(a.numer - b.numer, a.denom);
  return RationalFunction(a.numer * b.denom - b.numer * a.denom, a.denom * b.denom);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.numer * b.numer, a.denom * b.denom);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.numer.is_zero()) throw Error("rational function division by zero");
  return RationalFunction(a.numer * b.denom, a.denom * b.numer);
}

}  // namespace ssi
