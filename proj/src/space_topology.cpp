#include "ssi/space_topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ssi/algebra.hpp"

namespace ssi {
namespace {

const std::map<std::string, std::string> kToUS{{"v", "u"}, {"t", "s"}};

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (at(x) != x) x = at(x) = at(at(x));
    return x;
  }
  int& at(int x) { return p[static_cast<std::size_t>(x)]; }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    at(a) = b;  // smallest index represents the class
  }
};

void check_params(const RationalSurface& s2) {
  if (s2.params[0] != "v" || s2.params[1] != "t") throw Error("second surface must use parameters (v, t)");
}

Rational box_width(const AlgPoint& p) { return std::max(p.v_interval().width(), p.t_interval().width()); }

void shrink(AlgPoint& p) {
  Rational w = box_width(p);
  if (w == 0) return;
  p.refine(w / 16);
}

Interval enclose_rf(const RationalFunction& x, AlgPoint& p) {
  for (int round = 0;; ++round) {
    Interval d = enclose(x.denom, p);
    if (d.sign() != 0) return enclose(x.numer, p) / d;
    if (round == 0 && sign_at(x.denom, p) == 0) {
      throw CertificationError("parameter pole on intersection curve at " + p.to_string());
    }
    if (round > 400) throw CertificationError("cannot enclose coordinate at " + p.to_string());
    shrink(p);
  }
}

// Zero set of {G = 0, r = 0} projected to v: Res_t, or the gcd when neither involves t.
Poly eliminant(const Poly& G, const Poly& r) {
  if (G.degree("t") <= 0 && r.degree("t") <= 0) return gcd(G, r);
  return resultant(G, r, "t");
}

UPoly gcd_of_eliminants(const Poly& G, const std::vector<Poly>& R, bool* all_zero) {
  UPoly h;
  bool any = false;
  for (const auto& r : R) {
    if (r.is_zero()) continue;
    Poly e = eliminant(G, r);
    if (e.is_zero()) continue;
    UPoly u = UPoly::from_poly(e, "v");
    h = any ? gcd(h, u) : u;
    any = true;
  }
  *all_zero = !any;
  return h;
}

// Common solutions in the box of all nonzero polys; h(v) vanishes at every solution's v.
std::vector<AlgPoint> solve_in_box(const UPoly& h, const std::vector<Poly>& polys, const Box& box) {
  std::vector<AlgPoint> out;
  if (h.degree() < 1) return out;
  for (auto& r : isolate_univariate(h, box.A, box.B)) {
    auto alpha = std::make_shared<RealAlg>(r);
    FibrePtr fib;
    for (const auto& p : polys) {
      if (p.is_zero() || p.degree("t") < 1) continue;
      try {
        fib = make_fibre(alpha, p);
        break;
      } catch (const Error&) {
        // p(alpha, t) vanishes identically; try the next one
      }
    }
    if (!fib) {
      bool on_line = true;
      for (const auto& p : polys) {
        if (!p.is_zero() && p.degree("t") < 1 && alpha->sign_at(UPoly::from_poly(p, "v")) != 0) on_line = false;
      }
      if (on_line) throw NonZeroDimensionalError("solution set contains the vertical line v = " + alpha->to_string());
      continue;
    }
    for (const auto& root : isolate_fibre(fib->f, box.C, box.D, fib->field)) {
      AlgPoint pt(alpha, fib, root);
      bool ok = true;
      for (const auto& p : polys) {
        if (!p.is_zero() && sign_at(p, pt) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(pt);
    }
  }
  return out;
}

Poly fibre_poly(const AlgPoint& p) {
  Poly f;
  Poly t = Poly::variable("t");
  Poly tp(1);
  for (const auto& c : p.fibre()->f) {
    f += c.to_poly("v") * tp;
    tp *= t;
  }
  return f;
}

void separate_v(RealAlg& x, RealAlg& y) {
  for (int i = 0; !(x.hi() < y.lo()); ++i) {
    if (i > 100000) throw CertificationError("cannot separate parameters");
    if (x.width() >= y.width()) {
      x.bisect();
    } else {
      y.bisect();
    }
  }
}

void separate_t(AlgPoint& p, AlgPoint& q) {
  for (int i = 0; !(p.t_hi() < q.t_lo()); ++i) {
    if (i > 100000) throw CertificationError("cannot separate parameters");
    if (p.t_hi() - p.t_lo() >= q.t_hi() - q.t_lo()) {
      p.bisect_t();
    } else {
      q.bisect_t();
    }
  }
}

bool conflict(const SpaceGraph& sg, const SpaceEdge& e, const SpaceEdge& f, bool strict) {
  auto box = [&](int v) { return to_box(sg.vertices[static_cast<std::size_t>(v)].x); };
  int shared = (e.from == f.from) + (e.from == f.to) + (e.to == f.from) + (e.to == f.to);
  Verdict r;
  if (shared >= 2) {
    r = Verdict::Yes;
  } else if (shared == 1) {
    int s = (e.from == f.from || e.from == f.to) ? e.from : e.to;
    int a = e.from == s ? e.to : e.from;
    int b = f.from == s ? f.to : f.from;
    r = overlap_beyond_shared(box(s), box(a), box(b));
  } else {
    r = segments_intersect(box(e.from), box(e.to), box(f.from), box(f.to));
  }
  return r == Verdict::Yes || (strict && r == Verdict::Unknown);
}

}  // namespace

Box3 to_box(const Coord3& c) { return {c[0].interval(), c[1].interval(), c[2].interval()}; }

bool all_exact(const Coord3& c) { return c[0].exact && c[1].exact && c[2].exact; }

std::array<Poly, 3> tangent_cross(const RationalSurface& s2) {
  check_params(s2);
  std::array<Poly, 3> a, b;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& x = s2.coords[i];
    a[i] = x.numer.derivative("v") * x.denom - x.numer * x.denom.derivative("v");
    b[i] = x.numer.derivative("t") * x.denom - x.numer * x.denom.derivative("t");
  }
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

IrregularResult irregular_parameters(const RationalSurface& s2, const Poly& G, const Box& box) {
  auto N = tangent_cross(s2);
  IrregularResult out;
  Poly C = G;
  for (const auto& n : N) {
    if (!n.is_zero()) C = gcd(C, n);
  }
  out.special = C.is_constant() ? Poly(1) : normalize(C);
  Poly Gp = C.is_constant() ? G : exact_divide(G, C);
  if (Gp.is_constant()) return out;
  std::vector<Poly> R(N.begin(), N.end());
  bool all_zero = false;
  UPoly h = gcd_of_eliminants(Gp, R, &all_zero);
  if (all_zero) return out;  // S2 is degenerate everywhere; the whole curve is special
  std::vector<Poly> polys{Gp};
  for (const auto& n : N) {
    if (!n.is_zero()) polys.push_back(n);
  }
  for (auto& p : solve_in_box(h, polys, box)) {
    bool pole = false;
    for (const auto& x : s2.coords) pole = pole || sign_at(x.denom, p) == 0;
    if (!pole) out.points.push_back(p);
  }
  return out;
}

RealAlg coordinate_value(const RationalFunction& x, AlgPoint& p) {
  if (p.is_rational()) {
    return RealAlg::rational(x.evaluate({{"v", p.v()->value()}, {"t", p.t_lo()}}));
  }
  Poly w = Poly::variable("w");
  Poly R1 = resultant(x.numer - w * x.denom, fibre_poly(p), "t");
  Poly phi_p;
  if (p.v()->is_rational()) {
    phi_p = R1.substitute("v", p.v()->value());
  } else {
    // Drop factors of m(v) on which the top surviving w-coefficient vanishes, so that no
    // conjugate of alpha kills R1 identically.
    UPoly m = p.v()->poly();
    auto cs = R1.coefficients("w");
    for (std::size_t k = cs.size(); k-- > 0;) {
      UPoly c = UPoly::from_poly(cs[k], "v");
      if (p.v()->sign_at(c) == 0) continue;
      m = m / gcd(m, c);
      break;
    }
    phi_p = resultant(R1, m.to_poly("v"), "v");
  }
  if (phi_p.is_zero()) throw CertificationError("coordinate polynomial vanishes at " + p.to_string());
  UPoly phi = squarefree(UPoly::from_poly(phi_p, "w"));
  for (int round = 0; round < 400; ++round) {
    Interval I = enclose_rf(x, p);
    if (I.lo == I.hi) return RealAlg::rational(I.lo);
    try {
      if (phi(I.lo) != 0 && phi(I.hi) != 0) {
        auto roots = isolate_univariate(phi, I.lo, I.hi);
        if (roots.size() == 1) return roots[0];
      }
    } catch (const Error&) {
    }
    shrink(p);
  }
  throw CertificationError("cannot isolate image coordinate at " + p.to_string());
}

bool same_image(const RationalSurface& s2, AlgPoint& p, AlgPoint& q) {
  if (p.is_rational() && q.is_rational()) {
    return s2.evaluate(p.v()->value(), p.t_lo()) == s2.evaluate(q.v()->value(), q.t_lo());
  }
  for (int round = 0; round < 6; ++round) {
    for (const auto& x : s2.coords) {
      if (!enclose_rf(x, p).overlaps(enclose_rf(x, q))) return false;
    }
    shrink(p);
    shrink(q);
  }
  for (const auto& x : s2.coords) {
    RealAlg a = coordinate_value(x, p);
    RealAlg b = coordinate_value(x, q);
    if (compare(a, b) != 0) return false;
  }
  return true;
}

std::vector<SelfIntersection> self_intersections(const RationalSurface& s2, const Poly& G, const Box& box) {
  check_params(s2);
  if (G.is_constant()) return {};
  Poly Gus = G.rename(kToUS);
  Poly dv = Poly::variable("v") - Poly::variable("u");
  Poly dt = Poly::variable("t") - Poly::variable("s");
  std::array<Poly, 3> A, B;
  std::vector<Poly> system;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& x = s2.coords[i];
    Poly E = x.numer * x.denom.rename(kToUS) - x.numer.rename(kToUS) * x.denom;
    Poly Eu = E.substitute("v", Poly::variable("u"));
    A[i] = exact_divide(E - Eu, dv);
    B[i] = exact_divide(Eu, dt);
    system.push_back(E);
  }
  system.push_back(A[0] * B[1] - A[1] * B[0]);
  system.push_back(A[0] * B[2] - A[2] * B[0]);
  system.push_back(A[1] * B[2] - A[2] * B[1]);
  system.push_back(Gus);
  bool inconsistent = false;
  auto R = eliminate(system, {"u", "s"}, &inconsistent);
  if (inconsistent) return {};
  if (R.empty()) throw NonZeroDimensionalError("non-zero-dimensional self-intersection locus");
  bool all_zero = false;
  UPoly h = gcd_of_eliminants(G, R, &all_zero);
  if (all_zero) throw NonZeroDimensionalError("non-zero-dimensional self-intersection locus");
  std::vector<Poly> polys{G};
  polys.insert(polys.end(), R.begin(), R.end());
  auto cands = solve_in_box(h, polys, box);

  Dsu dsu(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (dsu.find(static_cast<int>(j)) == dsu.find(static_cast<int>(i))) continue;
      if (same_image(s2, cands[i], cands[j])) dsu.unite(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < cands.size(); ++i) classes[dsu.find(static_cast<int>(i))].push_back(i);
  std::vector<SelfIntersection> out;
  for (auto& [root, members] : classes) {
    if (members.size() < 2) continue;
    SelfIntersection si;
    for (std::size_t i : members) si.params.push_back(cands[i]);
    si.point = lift_point(s2, si.params[0]);
    out.push_back(std::move(si));
  }
  return out;
}

Coord3 lift_point(const RationalSurface& s2, AlgPoint& p, unsigned bits, bool recognise) {
  Coord3 out;
  for (const auto& x : s2.coords) {
    if (recognise && sign_at(x.denom, p) == 0) throw CertificationError("parameter pole on intersection curve at " + p.to_string());
  }
  if (p.is_rational()) {
    auto c = s2.evaluate(p.v()->value(), p.t_lo());
    for (std::size_t k = 0; k < 3; ++k) out[k] = {true, c[k], c[k]};
    return out;
  }
  Rational target(1, Integer(1) << bits);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& x = s2.coords[k];
    Interval I;
    for (int round = 0;; ++round) {
      I = enclose_rf(x, p);
      if (I.width() <= target) break;
      if (round > 2000) throw CertificationError("cannot tighten image coordinate at " + p.to_string());
      shrink(p);
    }
    Rational r = simplest_between(I.lo, I.hi);
    if (recognise && sign_at(x.numer - Poly(r) * x.denom, p) == 0) {
      out[k] = {true, r, r};
    } else {
      I = enclose_rf(x, p);
      out[k] = {false, I.lo, I.hi};
    }
  }
  return out;
}

std::array<int, 3> tangent_signs(const RationalSurface& s2, const Poly& G, AlgPoint& p) {
  Poly Gt = G.derivative("t"), Gv = G.derivative("v");
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& x = s2.coords[i];
    Poly a = x.numer.derivative("v") * x.denom - x.numer * x.denom.derivative("v");
    Poly b = x.numer.derivative("t") * x.denom - x.numer * x.denom.derivative("t");
    out[i] = sign_at(a * Gt - b * Gv, p);
  }
  return out;
}

SpaceGraph lift(TopologyGraph& g, const RationalSurface& s2, const std::vector<SelfIntersection>& groups,
                const Poly& special) {
  check_params(s2);
  const std::size_t n = g.vertices.size();
  std::vector<Coord3> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = lift_point(s2, g.vertices[i].point);

  Dsu dsu(n);
  std::vector<bool> in_group(n, false);
  for (const auto& si : groups) {
    int first = -1;
    for (auto p : si.params) {
      int id = find_vertex(g, p);
      if (id < 0) throw CertificationError("self-intersection parameter " + p.to_string() + " is not a graph vertex");
      in_group[static_cast<std::size_t>(id)] = true;
      if (first < 0) {
        first = id;
      } else {
        dsu.unite(first, id);
      }
    }
  }
  std::map<std::array<Rational, 3>, int> exact;
  for (std::size_t i = 0; i < n; ++i) {
    if (!all_exact(coords[i])) continue;
    std::array<Rational, 3> key{coords[i][0].lo, coords[i][1].lo, coords[i][2].lo};
    auto [it, fresh] = exact.emplace(key, static_cast<int>(i));
    if (!fresh) dsu.unite(it->second, static_cast<int>(i));
  }

  SpaceGraph sg;
  std::vector<int> space_id(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto root = static_cast<std::size_t>(dsu.find(static_cast<int>(i)));
    if (space_id[root] < 0) {
      space_id[root] = static_cast<int>(sg.vertices.size());
      sg.vertices.emplace_back();
      sg.vertices.back().x = coords[root];
    }
    int sid = space_id[root];
    space_id[i] = sid;
    SpaceVertex& sv = sg.vertices[static_cast<std::size_t>(sid)];
    PlaneVertex& pv = g.vertices[i];
    if (all_exact(coords[i]) && !all_exact(sv.x)) sv.x = coords[i];
    sv.preimages.push_back(static_cast<int>(i));
    sv.params.push_back(pv.point);
    sv.singular = sv.singular || pv.kind == VertexKind::Singular;
    sv.injected = sv.injected || pv.character;
    sv.boundary = sv.boundary || pv.boundary;
    sv.self_intersection = sv.self_intersection || in_group[i];
    if (pv.character && pv.kind != VertexKind::Singular) {
      auto w = tangent_signs(s2, g.G_full, pv.point);
      if (w == std::array<int, 3>{0, 0, 0}) sv.cusp = true;
    }
  }
  for (auto& sv : sg.vertices) {
    if (sv.preimages.size() > 1) sv.self_intersection = true;
  }

  for (const auto& e : g.edges) {
    auto& pa = g.vertices[static_cast<std::size_t>(e.from)];
    auto& pb = g.vertices[static_cast<std::size_t>(e.to)];
    int sa = space_id[static_cast<std::size_t>(e.from)];
    int sb = space_id[static_cast<std::size_t>(e.to)];
    if (sa == sb) {
      bool on_special = !special.is_constant() && sign_at(special, pa.point) == 0 && sign_at(special, pb.point) == 0;
      if (on_special) continue;
      throw CertificationError("edge from " + pa.point.to_string() + " to " + pb.point.to_string() +
                               " collapses to a point in space");
    }
    SpaceEdge se;
    se.from = sa;
    se.to = sb;
    se.p_from = pa.point;
    se.p_to = pb.point;
    se.vertical = e.vertical;
    if (e.vertical) {
      se.column = pa.column;
    } else {
      const PlaneVertex& sample = g.columns[static_cast<std::size_t>(pa.column)].sample ? pa : pb;
      se.column = sample.column;
      se.branch = sample.row;
    }
    sg.edges.push_back(std::move(se));
  }
  return sg;
}

AlgPoint branch_point(const SpaceEdge& e, const Rational& at, TopologyGraph& g, bool certify) {
  const PlaneColumn& col = g.columns[static_cast<std::size_t>(e.column)];
  if (e.vertical) {
    FibrePtr fib = make_fibre(col.alpha, Poly::variable("t") - Poly(at));
    return AlgPoint(col.alpha, fib, FibreRoot{true, at, at});
  }
  auto alpha = std::make_shared<RealAlg>(RealAlg::rational(at));
  auto pts = fibre_points(alpha, g.G, g.box.C, g.box.D, "v", "t", certify);
  if (pts.size() != col.vertices.size()) {
    throw CertificationError("branch count changes inside a slab at v = " + to_string(at));
  }
  return pts[static_cast<std::size_t>(e.branch)];
}

int split_edge(SpaceGraph& sg, int ei, TopologyGraph& g, const RationalSurface& s2) {
  SpaceEdge e = sg.edges[static_cast<std::size_t>(ei)];
  Rational at;
  if (e.vertical) {
    separate_t(e.p_from, e.p_to);
    at = simplest_inside(e.p_from.t_hi(), e.p_to.t_lo());
  } else {
    separate_v(*e.p_from.v(), *e.p_to.v());
    at = simplest_inside(e.p_from.v()->hi(), e.p_to.v()->lo());
  }
  AlgPoint m = branch_point(e, at, g);
  SpaceVertex sv;
  sv.x = lift_point(s2, m);
  sv.preimages.push_back(-1);
  sv.params.push_back(m);
  sv.subdivision = true;
  int id = static_cast<int>(sg.vertices.size());
  sg.vertices.push_back(std::move(sv));
  SpaceEdge right = e;
  right.from = id;
  right.p_from = m;
  SpaceEdge& left = sg.edges[static_cast<std::size_t>(ei)];
  left.to = id;
  left.p_to = m;
  sg.edges.push_back(right);
  ++sg.subdivisions;
  return id;
}

std::pair<int, int> find_crossing(const SpaceGraph& sg, bool strict) {
  for (std::size_t i = 0; i < sg.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < sg.edges.size(); ++j) {
      if (conflict(sg, sg.edges[i], sg.edges[j], strict)) return {static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {-1, -1};
}

void resolve_crossings(SpaceGraph& sg, TopologyGraph& g, const RationalSurface& s2, int max_rounds) {
  for (int round = 0; round < max_rounds; ++round) {
    std::set<int> bad;
    for (std::size_t i = 0; i < sg.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < sg.edges.size(); ++j) {
        if (conflict(sg, sg.edges[i], sg.edges[j], true)) {
          bad.insert(static_cast<int>(i));
          bad.insert(static_cast<int>(j));
        }
      }
    }
    if (bad.empty()) return;
    for (int e : bad) split_edge(sg, e, g, s2);
  }
  auto [i, j] = find_crossing(sg, true);
  throw CertificationError("crossing resolution hit the iteration cap; edges " + std::to_string(i) + " and " +
                           std::to_string(j) + " still meet");
}

void check_no_poles(const RationalSurface& s2, const Poly& G, const Box& box) {
  for (const auto& x : s2.coords) {
    if (x.denom.is_constant()) continue;
    bool all_zero = false;
    UPoly h = gcd_of_eliminants(G, {x.denom}, &all_zero);
    if (all_zero) throw CertificationError("parameter pole on intersection curve: a denominator vanishes on a component");
    auto poles = solve_in_box(h, {G, x.denom}, box);
    if (!poles.empty()) throw CertificationError("parameter pole on intersection curve at " + poles[0].to_string());
  }
}

SpaceResult space_topology(const TopologyGraph& plane, const RationalSurface& s2) {
  check_params(s2);
  check_no_poles(s2, plane.G_full, plane.box);
  SpaceResult res;
  res.character.irregular = irregular_parameters(s2, plane.G_full, plane.box);
  const Poly& special = res.character.irregular.special;
  Poly Gp = special.is_constant() ? plane.G_full : exact_divide(plane.G_full, special);
  res.character.self_intersections = self_intersections(s2, Gp, plane.box);
  std::vector<AlgPoint> points = res.character.irregular.points;
  for (const auto& si : res.character.self_intersections) {
    for (const auto& p : si.params) points.push_back(p);
  }
  res.refined = refine_graph(plane, points);
  res.graph = lift(res.refined, s2, res.character.self_intersections, special);
  resolve_crossings(res.graph, res.refined, s2);
  return res;
}

}  // namespace ssi
