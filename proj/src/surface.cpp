#include "ssi/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssi/real_roots.hpp"

namespace ssi {
namespace {

const std::array<std::string, 3> kXYZ{"x", "y", "z"};

}  // namespace

RationalSurface RationalSurface::with_params(const std::string& a, const std::string& b) const {
  std::map<std::string, std::string> m{{params[0], a}, {params[1], b}};
  RationalSurface out;
  out.params = {a, b};
  for (int i = 0; i < 3; ++i) out.coords[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i)].rename(m);
  return out;
}

std::array<Rational, 3> RationalSurface::evaluate(const Rational& p0, const Rational& p1) const {
  std::map<std::string, Rational> at{{params[0], p0}, {params[1], p1}};
  return {coords[0].evaluate(at), coords[1].evaluate(at), coords[2].evaluate(at)};
}

Poly RationalSurface::substitute_into(const Poly& F) const {
  std::array<int, 3> idx{};
  std::array<int, 3> maxdeg{};
  for (int i = 0; i < 3; ++i) {
    idx[static_cast<std::size_t>(i)] = F.var_index(kXYZ[static_cast<std::size_t>(i)]);
    maxdeg[static_cast<std::size_t>(i)] = std::max(0, F.degree(kXYZ[static_cast<std::size_t>(i)]));
  }
  for (const auto& v : F.vars()) {
    if (v != "x" && v != "y" && v != "z") throw Error("implicit polynomial has unexpected variable '" + v + "'");
  }
  std::array<std::vector<Poly>, 3> pp, qp;
  for (std::size_t i = 0; i < 3; ++i) {
    pp[i].push_back(Poly(1));
    qp[i].push_back(Poly(1));
    for (int k = 1; k <= maxdeg[i]; ++k) {
      pp[i].push_back(pp[i].back() * coords[i].numer);
      qp[i].push_back(qp[i].back() * coords[i].denom);
    }
  }
  auto exps = [&](const Exponent& e) {
    std::array<std::size_t, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = idx[i] >= 0 ? static_cast<std::size_t>(e[static_cast<std::size_t>(idx[i])]) : 0;
    return out;
  };
  // lcm of the distinct term denominators
  std::map<std::array<std::size_t, 3>, Poly> dens;
  for (const auto& [e, c] : F.terms()) {
    auto k = exps(e);
    if (!dens.count(k)) dens[k] = qp[0][k[0]] * qp[1][k[1]] * qp[2][k[2]];
  }
  Poly lcm(1);
  for (const auto& [k, d] : dens) {
    Poly g = gcd(lcm, d);
    lcm = lcm * exact_divide(d, g);
  }
  std::map<std::array<std::size_t, 3>, Poly> cofactor;
  for (const auto& [k, d] : dens) cofactor[k] = exact_divide(lcm, d);
  Poly num;
  for (const auto& [e, c] : F.terms()) {
    auto k = exps(e);
    num += c * (pp[0][k[0]] * pp[1][k[1]] * pp[2][k[2]] * cofactor[k]);
  }
  return num;
}

RationalSurface RuledSurface::to_surface() const {
  RationalSurface out;
  out.params = params;
  Poly s = Poly::variable(params[1]);
  out.coords[0] = RationalFunction(a0 + a1 * s, d1).reduced();
  out.coords[1] = RationalFunction(b0 + b1 * s, d2).reduced();
  out.coords[2] = RationalFunction(c0 + c1 * s, d3).reduced();
  return out;
}

std::optional<Projectability> is_projectable(const RationalSurface& s) {
  for (int k : {2, 0, 1}) {
    const auto& c = s.coords[static_cast<std::size_t>(k)];
    for (int keep : {1, 0}) {
      const std::string& gone = s.params[static_cast<std::size_t>(1 - keep)];
      if (c.depends_on(gone)) continue;
      // The other two coordinates must carry the eliminated parameter.
      bool others = false;
      for (int i = 0; i < 3; ++i) {
        if (i != k && s.coords[static_cast<std::size_t>(i)].depends_on(gone)) others = true;
      }
      if (!others) continue;
      return Projectability{k, keep};
    }
  }
  return std::nullopt;
}

std::pair<RationalSurface, BirationalMap> reparametrize_ruled(const RuledSurface& r) {
  const std::array<const Poly*, 3> p0{&r.a0, &r.b0, &r.c0};
  const std::array<const Poly*, 3> p1{&r.a1, &r.b1, &r.c1};
  const std::array<const Poly*, 3> den{&r.d1, &r.d2, &r.d3};
  int k = -1;
  for (int cand : {2, 0, 1}) {
    if (!p1[static_cast<std::size_t>(cand)]->is_zero()) {
      k = cand;
      break;
    }
  }
  if (k < 0) throw Error("degenerate ruled surface (a curve)");
  auto K = static_cast<std::size_t>(k);
  const std::string& s = r.params[1];
  Poly sv = Poly::variable(s);
  BirationalMap map;
  map.params = r.params;
  map.coordinate = k;
  map.forward_s = RationalFunction(*p0[K] + *p1[K] * sv, *den[K]).reduced();
  map.inverse_s = RationalFunction(*den[K] * sv - *p0[K], *p1[K]).reduced();

  RationalSurface out;
  out.params = r.params;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == K) {
      out.coords[i] = RationalFunction(sv, Poly(1));
      continue;
    }
    RationalFunction line(*p0[i] + *p1[i] * sv, *den[i]);
    out.coords[i] = line.substitute(s, map.inverse_s).reduced();
  }
  return {out, map};
}

Implicitization implicitize(const RationalSurface& s) {
  auto proj = is_projectable(s);
  if (!proj) {
    throw NotProjectableError(
        "surface is not projectable: no coordinate depends on a single parameter; implicitization of general "
        "rational surfaces is outside the supported class");
  }
  Implicitization out;
  out.proj = *proj;
  auto k = static_cast<std::size_t>(proj->coordinate);
  const std::string& keep = s.params[static_cast<std::size_t>(proj->parameter)];
  const std::string& gone = s.params[static_cast<std::size_t>(1 - proj->parameter)];
  for (const auto& v : {s.params[0], s.params[1]}) {
    if (v == "x" || v == "y" || v == "z") throw Error("surface parameters may not be named x, y or z");
  }
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != k) others.push_back(i);
  }
  auto implicit_eq = [&](std::size_t i) {
    return s.coords[i].denom * Poly::variable(kXYZ[i]) - s.coords[i].numer;
  };
  out.resultant = resultant(implicit_eq(others[0]), implicit_eq(others[1]), gone);
  if (out.resultant.is_zero()) {
    throw Error("implicitization: first resultant vanishes identically (improper or degenerate parametrization)");
  }
  auto [content, L] = content_primitive(out.resultant, {kXYZ[others[0]], kXYZ[others[1]]});
  out.content = content;
  out.L = L;
  if (!L.has_var(keep)) {
    out.cylindrical = true;
    out.F = squarefree_part(L);
  } else {
    out.F = squarefree_part(resultant(implicit_eq(k), L, keep));
  }
  out.F = normalize(out.F);
  return out;
}

PlaneCurve plane_curve(const Poly& F, const RationalSurface& s2) {
  PlaneCurve out;
  out.numerator = s2.substitute_into(F);
  if (out.numerator.is_zero()) throw SharedComponentError("surfaces share a component: F(S2(v,t)) vanishes identically");
  out.G_full = squarefree_part(out.numerator);
  auto [V, G] = content_primitive(out.G_full, {s2.params[1]});
  out.V = normalize(V);
  out.G = normalize(G);
  return out;
}

namespace {

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(Rational(p[static_cast<std::size_t>(i)] / p.lc()))));
  return m + 1;
}

std::vector<RealAlg> all_real_roots(const Poly& h, const std::string& var) {
  UPoly u = UPoly::from_poly(h, var);
  Rational b = cauchy_bound(u);
  return isolate_univariate(u, -b, b, false);
}

}  // namespace

SingularLocusReport singular_locus(const Poly& F, const RationalSurface& s1, int degree_budget) {
  SingularLocusReport rep;
  if (F.total_degree() > degree_budget) {
    rep.status = "skipped";
    return rep;
  }
  std::vector<Poly> sys{F, F.derivative("x"), F.derivative("y"), F.derivative("z")};
  std::array<std::vector<RealAlg>, 3> roots;
  const std::array<std::vector<std::string>, 3> orders{
      std::vector<std::string>{"z", "y"}, std::vector<std::string>{"z", "x"}, std::vector<std::string>{"y", "x"}};
  for (std::size_t i = 0; i < 3; ++i) {
    bool inconsistent = false;
    auto elim = eliminate(sys, orders[i], &inconsistent);
    if (inconsistent) {
      rep.status = "empty";
      return rep;
    }
    Poly h;
    for (const auto& p : elim) h = gcd(h, p);
    if (h.is_zero()) {
      rep.status = "positive-dimensional";
      return rep;
    }
    if (h.is_constant()) {
      rep.status = "empty";
      return rep;
    }
    roots[i] = all_real_roots(h, kXYZ[i]);
  }
  rep.status = "zero-dimensional";
  if (roots[0].size() * roots[1].size() * roots[2].size() > 1000) {
    rep.status = "skipped";
    return rep;
  }
  Rational w(1, Integer(1) << 40);
  for (auto& a : roots) {
    for (auto& r : a) r.refine(w);
  }
  for (auto& rx : roots[0]) {
    for (auto& ry : roots[1]) {
      for (auto& rz : roots[2]) {
        std::map<std::string, Interval> box{{"x", rx.interval()}, {"y", ry.interval()}, {"z", rz.interval()}};
        bool all = true;
        for (const auto& p : sys) all = all && evaluate(p, box).contains_zero();
        if (!all) continue;
        std::array<double, 3> pt{rx.approx(), ry.approx(), rz.approx()};
        rep.points.push_back(pt);
        // Sampled preimage search over [-10, 10]^2.
        double best = std::numeric_limits<double>::infinity();
        for (int i = -50; i <= 50; ++i) {
          for (int j = -50; j <= 50; ++j) {
            try {
              auto q = s1.evaluate(Rational(i, 5), Rational(j, 5));
              double d = std::hypot(q[0].get_d() - pt[0], q[1].get_d() - pt[1], q[2].get_d() - pt[2]);
              best = std::min(best, d);
            } catch (const Error&) {
            }
          }
        }
        rep.preimage_found.push_back(best < 1e-6);
      }
    }
  }
  return rep;
}

}  // namespace ssi
