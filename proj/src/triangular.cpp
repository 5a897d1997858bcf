#include "ssi/triangular.hpp"

#include <algorithm>

namespace ssi {

FibrePtr make_fibre(const RealAlgPtr& alpha, const Poly& g, const std::string& v, const std::string& t) {
  AlgField k(alpha);
  AlgUPoly f = specialize(g, v, t, k);
  if (f.empty()) throw Error("vertical component leaked into triangular solve");
  f = squarefree(f, k);
  return std::make_shared<Fibre>(Fibre{k, std::move(f)});
}

AlgPoint::AlgPoint(RealAlgPtr v, FibrePtr fibre, const FibreRoot& root)
    : v_(std::move(v)), fibre_(std::move(fibre)), t_exact_(root.exact), c_(root.lo), d_(root.hi) {
  if (!t_exact_) sign_c_ = sign_at(fibre_->f, c_, fibre_->field);
}

AlgPoint AlgPoint::rational(const Rational& v, const Rational& t) {
  auto alpha = std::make_shared<RealAlg>(RealAlg::rational(v));
  AlgField k(alpha);
  auto fib = std::make_shared<Fibre>(Fibre{k, AlgUPoly{UPoly(Rational(-t)), UPoly(Rational(1))}});
  return AlgPoint(alpha, fib, FibreRoot{true, t, t});
}

double AlgPoint::t_approx() const {
  Rational m = (c_ + d_) / 2;
  return m.get_d();
}

void AlgPoint::bisect_t() {
  if (t_exact_) return;
  Rational m = (c_ + d_) / 2;
  int s = sign_at(fibre_->f, m, fibre_->field);
  if (s == 0) {
    t_exact_ = true;
    c_ = d_ = m;
  } else if (s == sign_c_) {
    c_ = m;
  } else {
    d_ = m;
  }
}

void AlgPoint::refine(const Rational& w) {
  v_->refine(w);
  while (!t_exact_ && d_ - c_ > w) bisect_t();
}

int AlgPoint::compare_t(const Rational& r) {
  if (t_exact_) return sign(c_ - r);
  if (r <= c_) return 1;
  if (r >= d_) return -1;
  int s = sign_at(fibre_->f, r, fibre_->field);
  if (s == 0) {
    t_exact_ = true;
    c_ = d_ = r;
    return 0;
  }
  return s == sign_c_ ? 1 : -1;
}

bool AlgPoint::try_rational_t() {
  if (t_exact_) return true;
  return compare_t(simplest_inside(c_, d_)) == 0;
}

std::string AlgPoint::to_string() const {
  std::string t = t_exact_ ? ssi::to_string(c_) : "(" + ssi::to_string(c_) + ", " + ssi::to_string(d_) + ")";
  return "(" + v_->to_string() + ", " + t + ")";
}

Interval enclose(const Poly& p, const AlgPoint& pt, const std::string& v, const std::string& t) {
  return evaluate(p, {{v, pt.v_interval()}, {t, pt.t_interval()}});
}

int sign_at(const Poly& p, AlgPoint& pt, const std::string& v, const std::string& t) {
  for (const auto& name : p.vars()) {
    if (name != v && name != t) throw Error("sign_at: unexpected variable '" + name + "' in " + p.to_string());
  }
  for (int round = 0;; ++round) {
    if (pt.t_exact()) {
      UPoly h = UPoly::from_poly(p.substitute(t, pt.t_lo()), v);
      return pt.v()->sign_at(h);
    }
    int s = enclose(p, pt, v, t).sign();
    if (s != 0) return s;
    if (round == 3) {
      const AlgField& k = pt.fibre()->field;
      AlgUPoly q = specialize(p, v, t, k);
      if (q.empty()) return 0;
      AlgUPoly g = gcd(q, pt.fibre()->f, k);
      if (degree(g) >= 1) {
        if (sign_at(g, pt.t_lo(), k) != sign_at(g, pt.t_hi(), k)) return 0;
      }
    }
    if (round > 20000) throw CertificationError("sign_at: refinement cap reached at " + pt.to_string());
    pt.v()->bisect();
    pt.bisect_t();
  }
}

int compare_t(AlgPoint& a, AlgPoint& b) {
  for (int round = 0;; ++round) {
    if (a.t_exact()) return -b.compare_t(a.t_lo());
    if (b.t_exact()) return a.compare_t(b.t_lo());
    if (a.t_hi() <= b.t_lo()) return -1;
    if (b.t_hi() <= a.t_lo()) return 1;
    if (round == 2) {
      const AlgField& k = a.fibre()->field;
      AlgUPoly g = gcd(a.fibre()->f, b.fibre()->f, k);
      if (degree(g) >= 1) {
        Rational l = std::max(a.t_lo(), b.t_lo());
        Rational h = std::min(a.t_hi(), b.t_hi());
        if (sign_at(g, l, k) != sign_at(g, h, k)) return 0;
      }
    }
    if (round > 20000) throw CertificationError("compare_t: refinement cap reached");
    if (a.t_hi() - a.t_lo() >= b.t_hi() - b.t_lo()) {
      a.bisect_t();
    } else {
      b.bisect_t();
    }
  }
}

std::vector<AlgPoint> fibre_points(const RealAlgPtr& alpha, const Poly& g, const Rational& lo, const Rational& hi,
                                   const std::string& v, const std::string& t, bool certify) {
  FibrePtr fib = make_fibre(alpha, g, v, t);
  std::vector<AlgPoint> out;
  for (const auto& r : isolate_fibre(fib->f, lo, hi, fib->field, certify)) out.emplace_back(alpha, fib, r);
  return out;
}

std::vector<AlgPoint> isolate_triangular(const UPoly& h, const Poly& g, const Rational& A, const Rational& B,
                                         const Rational& C, const Rational& D, const std::string& v,
                                         const std::string& t) {
  std::vector<AlgPoint> out;
  for (auto& root : isolate_univariate(h, A, B)) {
    auto alpha = std::make_shared<RealAlg>(root);
    for (auto& p : fibre_points(alpha, g, C, D, v, t)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ssi
