#include "ssi/real_roots.hpp"

#include <algorithm>

#include "ssi/descartes.hpp"

namespace ssi {

Rational DyadicCell::lo() const {
  Integer den = 1;
  den <<= k;
  Rational r(c, den);
  r.canonicalize();
  return r;
}

Rational DyadicCell::hi() const {
  if (exact) return lo();
  Integer den = 1;
  den <<= k;
  Rational r(c + 1, den);
  r.canonicalize();
  return r;
}

namespace {

struct IntegerRing {
  int sign(const Integer& a) const { return sgn(a); }
  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer shl(const Integer& a, unsigned k) const {
    Integer r;
    mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
  }
};

// Cells of the squarefree q on the open interval (lo, hi), via q(lo + (hi - lo) x).
std::vector<DyadicCell> unit_cells(const UPoly& q, const Rational& lo, const Rational& hi) {
  UPoly t = q.shift(lo).scale(hi - lo);
  IntegerRing ring;
  return descartes_unit(t.primitive_integer(), ring);
}

}  // namespace

RealAlg RealAlg::rational(const Rational& r) {
  RealAlg a;
  a.exact_ = true;
  a.rational_checked_ = true;
  a.value_ = r;
  a.p_ = UPoly(std::vector<Rational>{-r, 1});
  return a;
}

RealAlg::RealAlg(UPoly p, Rational lo, Rational hi) : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_lo_ = p_.sign_at(lo_);
  int sign_hi = p_.sign_at(hi_);
  if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi) {
    throw Error("RealAlg: interval is not a sign-change bracket of " + p_.to_string());
  }
}

void RealAlg::bisect() {
  if (exact_) return;
  Rational m = (lo_ + hi_) / 2;
  int s = p_.sign_at(m);
  if (s == 0) {
    exact_ = true;
    rational_checked_ = true;
    value_ = m;
    p_ = UPoly(std::vector<Rational>{-m, 1});
  } else if (s == sign_lo_) {
    lo_ = m;
  } else {
    hi_ = m;
  }
}

void RealAlg::refine(const Rational& w) {
  while (!exact_ && hi_ - lo_ > w) bisect();
}

void RealAlg::refine_inside(const Rational& a, const Rational& b) {
  for (int i = 0; !exact_ && (lo_ <= a || hi_ >= b); ++i) {
    if (i > 100000) throw CertificationError("refine_inside: number not inside the requested interval");
    bisect();
  }
  if (exact_ && (value_ <= a || value_ >= b)) throw Error("refine_inside: number not inside the requested interval");
}

bool RealAlg::restrict_to_factor(const UPoly& g) {
  if (exact_) return g.sign_at(value_) == 0;
  if (g.degree() <= 0) return false;
  int sl = g.sign_at(lo_);
  int sh = g.sign_at(hi_);
  if (sl != sh) {
    p_ = g.monic();
    sign_lo_ = sl;
    return true;
  }
  p_ = (p_ / g).monic();
  sign_lo_ = p_.sign_at(lo_);
  return false;
}

int RealAlg::sign_at(const UPoly& h) {
  if (exact_) return sign(h(value_));
  if (h.is_zero()) return 0;
  UPoly r = h.degree() >= p_.degree() ? h % p_ : h;
  for (int round = 0;; ++round) {
    if (exact_) return sign(r(value_));
    if (r.is_zero()) return 0;
    if (r.degree() == 0) return sign(r.lc());
    int s = evaluate(r, Interval(lo_, hi_)).sign();
    if (s != 0) return s;
    if (round == 3) {
      UPoly g = gcd(r, p_);
      if (g.degree() > 0) {
        if (restrict_to_factor(g)) return 0;
        r = r % p_;
      }
    }
    if (round > 20000) throw CertificationError("sign_at: refinement cap reached");
    bisect();
  }
}

int RealAlg::compare(const Rational& r) {
  if (exact_) return sign(value_ - r);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  int s = p_.sign_at(r);
  if (s == 0) {
    exact_ = true;
    rational_checked_ = true;
    value_ = r;
    p_ = UPoly(std::vector<Rational>{-r, 1});
    return 0;
  }
  // r lies between lo and the root when p(r) has the sign of p(lo).
  return s == sign_lo_ ? 1 : -1;
}

bool RealAlg::try_rational() {
  if (exact_) return true;
  Rational r = simplest_inside(lo_, hi_);
  if (p_.sign_at(r) == 0) {
    compare(r);
    return true;
  }
  return false;
}

bool RealAlg::certify_rational() {
  if (exact_) return true;
  if (rational_checked_) return false;
  auto ints = p_.primitive_integer();
  Integer l = ints.back();
  if (l < 0) l = -l;
  Rational bound(1, l * l);
  bound.canonicalize();
  for (int i = 0; !exact_; ++i) {
    if ((i % 8 == 0 || hi_ - lo_ < bound) && try_rational()) return true;
    if (hi_ - lo_ < bound) break;
    bisect();
  }
  rational_checked_ = true;
  return exact_;
}

double RealAlg::approx() const {
  if (exact_) return value_.get_d();
  Rational m = (lo_ + hi_) / 2;
  return m.get_d();
}

std::string RealAlg::to_string() const {
  if (exact_) return ssi::to_string(value_);
  return "root of " + p_.to_string() + " in (" + ssi::to_string(lo_) + ", " + ssi::to_string(hi_) + ")";
}

int compare(RealAlg& a, RealAlg& b) {
  for (int round = 0;; ++round) {
    if (a.is_rational()) return -b.compare(a.value());
    if (b.is_rational()) return a.compare(b.value());
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    if (round == 2) {
      UPoly g = gcd(a.poly(), b.poly());
      if (g.degree() > 0) {
        Rational l = std::max(a.lo(), b.lo());
        Rational h = std::min(a.hi(), b.hi());
        if (g.sign_at(l) != g.sign_at(h)) return 0;
      }
    }
    if (round > 20000) throw CertificationError("compare: refinement cap reached");
    if (a.width() >= b.width()) {
      a.bisect();
    } else {
      b.bisect();
    }
  }
}

std::vector<RealAlg> isolate_univariate(const UPoly& p, const Rational& lo, const Rational& hi,
                                        bool certify_rationals) {
  if (p.is_zero()) throw Error("isolate_univariate: zero polynomial");
  if (lo > hi) throw Error("isolate_univariate: empty domain");
  std::vector<RealAlg> out;
  if (p.degree() <= 0) return out;
  UPoly q = squarefree(p);
  if (q.sign_at(lo) == 0) out.push_back(RealAlg::rational(lo));
  if (lo == hi) return out;
  Rational w = hi - lo;
  for (const auto& cell : unit_cells(q, lo, hi)) {
    if (cell.exact) {
      out.push_back(RealAlg::rational(lo + w * cell.lo()));
    } else {
      // A neighbouring exact root may sit on a cell end; divide it out of the bracket.
      Rational a = lo + w * cell.lo();
      Rational b = lo + w * cell.hi();
      UPoly g = q;
      if (g.sign_at(a) == 0) g = g / UPoly(std::vector<Rational>{-a, 1});
      if (g.sign_at(b) == 0) g = g / UPoly(std::vector<Rational>{-b, 1});
      out.emplace_back(g, a, b);
    }
  }
  if (q.sign_at(hi) == 0) out.push_back(RealAlg::rational(hi));
  if (certify_rationals) {
    for (auto& a : out) a.certify_rational();
  }
  return out;
}

int count_roots_in(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error("count_roots_in: zero polynomial");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
    throw Error("count_roots_in: root at an interval endpoint; perturb the query interval");
  }
  if (p.degree() <= 0 || lo >= hi) return 0;
  return static_cast<int>(unit_cells(squarefree(p), lo, hi).size());
}

}  // namespace ssi
