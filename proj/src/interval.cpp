#include "ssi/interval.hpp"

#include <algorithm>
#include <vector>

namespace ssi {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo >= 0 && b.lo >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Interval& a, const Rational& k) {
  if (k >= 0) return {a.lo * k, a.hi * k};
  return {a.hi * k, a.lo * k};
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(1);
  Rational l = ssi::pow(a.lo, e);
  Rational h = ssi::pow(a.hi, e);
  if (e % 2 == 1) return {l, h};
  if (a.lo >= 0) return {l, h};
  if (a.hi <= 0) return {h, l};
  return {0, std::max(l, h)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval evaluate(const UPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval::point(0);
  if (x.lo == x.hi) return Interval::point(p(x.lo));
  Interval acc = Interval::point(p.lc());
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc = acc * x + Interval::point(p[static_cast<std::size_t>(i)]);
  }
  return acc;
}

Interval evaluate(const Poly& p, const std::map<std::string, Interval>& at) {
  const auto& vars = p.vars();
  std::vector<std::vector<Interval>> powers(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = at.find(vars[i]);
    if (it == at.end()) throw Error("interval evaluation: variable '" + vars[i] + "' is not bound");
    int d = p.degree(vars[i]);
    powers[i].reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) powers[i].push_back(pow(it->second, static_cast<unsigned>(k)));
  }
  Interval sum = Interval::point(0);
  for (const auto& [e, c] : p.terms()) {
    Interval term = Interval::point(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    }
    sum = sum + term;
  }
  return sum;
}

}  // namespace ssi

namespace ssi {

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error("interval division by an interval containing zero");
  Rational c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace ssi
