#include "ssi/upoly.hpp"

#include <algorithm>

namespace ssi {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

UPoly UPoly::from_poly(const Poly& p, const std::string& var) {
  for (const auto& v : p.vars()) {
    if (v != var) throw Error("expected a univariate polynomial in " + var + ", got " + p.to_string());
  }
  std::vector<Rational> c;
  for (const auto& q : p.coefficients(var)) c.push_back(q.constant_value());
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(const std::string& var) const {
  Poly::TermMap t;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) t.emplace(Exponent{static_cast<int>(i)}, c_[i]);
  }
  return Poly::from_terms({var}, t);
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * Rational(1 / c_.back());
}

UPoly UPoly::shift(const Rational& a) const {
  std::vector<Rational> c = c_;
  if (a == 0) return UPoly(c);
  std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += a * c[j + 1];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::scale(const Rational& k) const {
  std::vector<Rational> c = c_;
  Rational pw = 1;
  for (auto& x : c) {
    x *= pw;
    pw *= k;
  }
  return UPoly(std::move(c));
}

std::vector<Integer> UPoly::primitive_integer() const {
  Integer l = 1;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(c_.size());
  Integer g = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational s = c_[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& k) {
  if (k == 0) return UPoly();
  UPoly r = a;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::string UPoly::to_string(const std::string& var) const { return to_poly(var).to_string(); }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("univariate division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  Rational inv = 1 / b.lc();
  for (int k = da - db; k >= 0; --k) {
    Rational f = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    // Keep coefficient growth in check.
    y = r.monic();
  }
  return x.monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = Rational(1), s1;
  UPoly t0, t1 = Rational(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly squarefree(const UPoly& p) {
  if (p.is_zero()) throw Error("squarefree part of zero polynomial");
  if (p.degree() <= 0) return UPoly(Rational(1));
  return (p / gcd(p, p.derivative())).monic();
}

}  // namespace ssi
