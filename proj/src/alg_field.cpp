#include "ssi/alg_field.hpp"

#include "ssi/descartes.hpp"

namespace ssi {

UPoly AlgField::reduce(const UPoly& a) const {
  if (alpha_->is_rational()) return UPoly(a(alpha_->value()));
  const UPoly& p = alpha_->poly();
  if (a.degree() < p.degree()) return a;
  return a % p;
}

UPoly AlgField::inverse(const UPoly& a) const {
  UPoly r = reduce(a);
  if (alpha_->is_rational()) {
    if (r.is_zero()) throw Error("inverse of zero in Q(alpha)");
    return UPoly(Rational(1 / r.lc()));
  }
  UPoly g = ssi::gcd(r, alpha_->poly());
  if (g.degree() > 0) {
    if (alpha_->restrict_to_factor(g)) throw Error("inverse of zero in Q(alpha)");
    r = reduce(r);
  }
  XGcd x = xgcd(r, alpha_->poly());
  if (x.g.degree() != 0) throw Error("inverse: defining polynomial not coprime after splitting");
  return reduce(x.s);
}

int degree(const AlgUPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(AlgUPoly& f, const AlgField& k) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

AlgUPoly specialize(const Poly& p, const std::string& v, const std::string& t, const AlgField& k) {
  AlgUPoly out;
  for (const auto& c : p.coefficients(t)) out.push_back(k.reduce(UPoly::from_poly(c, v)));
  trim(out, k);
  return out;
}

AlgUPoly derivative(const AlgUPoly& f) {
  AlgUPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
  return d;
}

namespace {

std::pair<AlgUPoly, AlgUPoly> divide(AlgUPoly a, const AlgUPoly& b, const AlgField& k) {
  if (b.empty()) throw Error("division by zero polynomial over Q(alpha)");
  trim(a, k);
  int db = degree(b);
  if (degree(a) < db) return {AlgUPoly(), a};
  UPoly inv = k.inverse(b.back());
  AlgUPoly q(static_cast<std::size_t>(degree(a) - db + 1));
  while (degree(a) >= db) {
    int shift = degree(a) - db;
    UPoly f = k.mul(a.back(), inv);
    q[static_cast<std::size_t>(shift)] = f;
    for (int j = 0; j < db; ++j) {
      auto& slot = a[static_cast<std::size_t>(shift + j)];
      slot = k.reduce(slot - f * b[static_cast<std::size_t>(j)]);
    }
    a.pop_back();
    trim(a, k);
  }
  return {q, a};
}

}  // namespace

AlgUPoly remainder(const AlgUPoly& a, const AlgUPoly& b, const AlgField& k) { return divide(a, b, k).second; }

AlgUPoly quotient(const AlgUPoly& a, const AlgUPoly& b, const AlgField& k) { return divide(a, b, k).first; }

AlgUPoly gcd(const AlgUPoly& a0, const AlgUPoly& b0, const AlgField& k) {
  AlgUPoly a = a0, b = b0;
  trim(a, k);
  trim(b, k);
  while (!b.empty()) {
    AlgUPoly r = remainder(a, b, k);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  UPoly inv = k.inverse(a.back());
  for (auto& c : a) c = k.mul(c, inv);
  return a;
}

AlgUPoly squarefree(const AlgUPoly& f, const AlgField& k) {
  AlgUPoly g = gcd(f, derivative(f), k);
  if (degree(g) <= 0) return f;
  return quotient(f, g, k);
}

UPoly value_at(const AlgUPoly& f, const Rational& t, const AlgField& k) {
  UPoly acc;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
  return k.reduce(acc);
}

int sign_at(const AlgUPoly& f, const Rational& t, const AlgField& k) { return k.sign(value_at(f, t, k)); }

namespace {

struct FieldRing {
  const AlgField* k;
  int sign(const UPoly& a) const { return k->sign(a); }
  UPoly add(const UPoly& a, const UPoly& b) const { return a + b; }
  UPoly shl(const UPoly& a, unsigned s) const {
    Integer f = 1;
    f <<= s;
    return a * Rational(f);
  }
};

// The cell (a, b) holds exactly one root of f, but a neighbouring exact root may sit on
// an end. Bisect with the deflated polynomial until both ends are non-roots.
void shrink_off_roots(const AlgUPoly& f, Rational& a, Rational& b, const AlgField& k) {
  bool root_a = sign_at(f, a, k) == 0;
  bool root_b = sign_at(f, b, k) == 0;
  if (!root_a && !root_b) return;
  AlgUPoly g = f;
  if (root_a) g = quotient(g, AlgUPoly{UPoly(Rational(-a)), UPoly(Rational(1))}, k);
  if (root_b) g = quotient(g, AlgUPoly{UPoly(Rational(-b)), UPoly(Rational(1))}, k);
  int sa = sign_at(g, a, k);
  while (root_a || root_b) {
    Rational m = (a + b) / 2;
    int s = sign_at(g, m, k);
    if (s == 0) {
      a = b = m;
      return;
    }
    if (s == sa) {
      a = m;
      root_a = false;
    } else {
      b = m;
      root_b = false;
    }
  }
}

}  // namespace

std::vector<FibreRoot> isolate_fibre(const AlgUPoly& f0, const Rational& lo, const Rational& hi, const AlgField& k,
                                     bool certify) {
  AlgUPoly f = f0;
  trim(f, k);
  if (f.empty()) throw Error("isolate_fibre: zero fibre");
  std::vector<FibreRoot> out;
  if (k.is_rational()) {
    std::vector<Rational> c;
    for (const auto& x : f) c.push_back(k.reduce(x).is_zero() ? Rational(0) : k.reduce(x).lc());
    for (auto& r : isolate_univariate(UPoly(c), lo, hi, certify)) {
      out.push_back({r.is_rational(), r.lo(), r.hi()});
    }
    return out;
  }
  if (degree(f) <= 0) return out;
  if (sign_at(f, lo, k) == 0) out.push_back({true, lo, lo});
  if (lo < hi) {
    Rational w = hi - lo;
    // Coefficients of f(lo + w x).
    AlgUPoly g = f;
    std::size_t n = g.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j-- > i;) g[j] = g[j] + g[j + 1] * lo;
    }
    Rational pw = 1;
    for (auto& x : g) {
      x = x * pw;
      pw *= w;
    }
    FieldRing ring{&k};
    for (const auto& cell : descartes_unit(g, ring)) {
      Rational a = lo + w * cell.lo();
      Rational b = lo + w * cell.hi();
      if (cell.exact) {
        out.push_back({true, a, a});
        continue;
      }
      shrink_off_roots(f, a, b, k);
      if (a == b) {
        out.push_back({true, a, a});
        continue;
      }
      Rational r = simplest_inside(a, b);
      if (sign_at(f, r, k) == 0) {
        out.push_back({true, r, r});
      } else {
        out.push_back({false, a, b});
      }
    }
    if (sign_at(f, hi, k) == 0) out.push_back({true, hi, hi});
  }
  return out;
}

}  // namespace ssi
