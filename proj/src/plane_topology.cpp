#include "ssi/plane_topology.hpp"

#include <algorithm>

#include "ssi/algebra.hpp"

namespace ssi {
namespace {

constexpr int kShrinkCap = 4000;

UPoly at_v(const Poly& G, const Rational& a) { return UPoly::from_poly(G.substitute("v", a), "t"); }
UPoly at_t(const Poly& G, const Rational& c) { return UPoly::from_poly(G.substitute("t", c), "v"); }

void separate(RealAlg& x, RealAlg& y) {
  for (int i = 0; !(x.hi() < y.lo()); ++i) {
    if (i > 100000) throw CertificationError("cannot separate critical values " + x.to_string() + " and " + y.to_string());
    if (x.width() >= y.width()) {
      x.bisect();
    } else {
      y.bisect();
    }
  }
}

void separate(AlgPoint& p, AlgPoint& q) {
  for (int i = 0; !(p.t_hi() < q.t_lo()); ++i) {
    if (i > 100000) throw CertificationError("cannot separate fibre points " + p.to_string() + " and " + q.to_string());
    if (p.t_hi() - p.t_lo() >= q.t_hi() - q.t_lo()) {
      p.bisect_t();
    } else {
      q.bisect_t();
    }
  }
}

std::vector<RealAlg> roots_at(const Poly& G, const Rational& a, const Box& box) {
  UPoly u = at_v(G, a);
  if (u.is_zero()) throw CertificationError("vertical component at v = " + to_string(a) + " in a regular column");
  if (u.degree() <= 0) return {};
  return isolate_univariate(u, box.C, box.D);
}

// Index of the separator band holding x: the number of separators below it.
int band(RealAlg& x, const std::vector<Rational>& sig) {
  int j = 0;
  for (const auto& s : sig) {
    int c = x.compare(s);
    if (c == 0) throw CertificationError("branch meets a separator at " + to_string(s));
    if (c > 0) ++j;
  }
  return j;
}

bool separators_clear(const Poly& G, const std::vector<Rational>& sig, const Rational& a, const Rational& b) {
  for (const auto& s : sig) {
    UPoly gs = at_t(G, s);
    if (gs.degree() <= 0) continue;
    try {
      if (count_roots_in(gs, a, b) != 0) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

bool is_boundary_v(RealAlg& x, const Box& box) { return x.compare(box.A) == 0 || x.compare(box.B) == 0; }

struct CriticalWork {
  RealAlgPtr alpha;
  std::vector<AlgPoint> pts;
  std::vector<Rational> sig;
  Rational a, b;
  std::vector<int> left_owner, right_owner;  // per slab branch: index into pts
  bool vertical = false;
  bool injected = false;
};

}  // namespace

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Regular:
      return "regular";
    case VertexKind::Boundary:
      return "boundary";
    case VertexKind::Critical:
      return "critical";
    case VertexKind::Singular:
      return "singular";
    case VertexKind::Injected:
      return "injected";
  }
  return "?";
}

UPoly critical_polynomial(const Poly& G, const Poly& V, const Box& box) {
  UPoly v = UPoly::x();
  UPoly d = (v - UPoly(box.A)) * (v - UPoly(box.B));
  if (G.degree("t") >= 1) {
    for (const auto& c : {box.C, box.D}) {
      UPoly e = at_t(G, c);
      if (!e.is_zero()) d = d * squarefree(e);
    }
    Poly r = resultant(G, G.derivative("t"), "t");
    if (r.is_zero()) throw CertificationError("Res_t(G, G_t) vanishes identically; G is not squarefree");
    d = d * squarefree(UPoly::from_poly(r, "v"));
  }
  if (!V.is_constant()) d = d * squarefree(UPoly::from_poly(V, "v"));
  return squarefree(d);
}

TopologyGraph build_graph(const Poly& G_in, const Box& box, const std::vector<UPoly>& extra) {
  if (!(box.A < box.B) || !(box.C < box.D)) throw Error("box must satisfy A < B and C < D");
  for (const auto& name : G_in.vars()) {
    if (name != "v" && name != "t") throw Error("plane curve has unexpected variable '" + name + "'");
  }
  if (G_in.is_zero()) throw Error("plane curve is identically zero");
  TopologyGraph g;
  g.box = box;
  g.G_full = squarefree_part(G_in);
  auto [V, G] = content_primitive(g.G_full, {"t"});
  g.V = normalize(V);
  g.G = normalize(G);
  const bool curve = g.G.degree("t") >= 1;
  const UPoly Vu = UPoly::from_poly(g.V, "v");
  const Poly Gt = g.G_full.derivative("t");
  const Poly Gv = g.G_full.derivative("v");

  UPoly base = critical_polynomial(g.G, g.V, box);
  g.d = base;
  for (const auto& e : extra) {
    if (e.degree() >= 1) g.d = g.d * e;
  }
  g.d = squarefree(g.d);

  std::vector<CriticalWork> cols;
  for (auto& r : isolate_univariate(g.d, box.A, box.B)) {
    CriticalWork w;
    w.alpha = std::make_shared<RealAlg>(r);
    cols.push_back(std::move(w));
  }
  const std::size_t m = cols.size();
  std::vector<Rational> mids;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    separate(*cols[i].alpha, *cols[i + 1].alpha);
    mids.push_back(simplest_inside(cols[i].alpha->hi(), cols[i + 1].alpha->lo()));
  }

  for (std::size_t i = 0; i < m; ++i) {
    CriticalWork& w = cols[i];
    RealAlg& alpha = *w.alpha;
    w.vertical = alpha.sign_at(Vu) == 0;
    w.injected = alpha.sign_at(base) != 0;
    if (curve) w.pts = fibre_points(w.alpha, g.G, box.C, box.D);
    for (std::size_t j = 0; j + 1 < w.pts.size(); ++j) {
      separate(w.pts[j], w.pts[j + 1]);
      w.sig.push_back(simplest_inside(w.pts[j].t_hi(), w.pts[j + 1].t_lo()));
    }
    w.a = i == 0 ? box.A : mids[i - 1];
    w.b = i + 1 == m ? box.B : mids[i];
    int round = 0;
    while (!separators_clear(g.G, w.sig, w.a, w.b)) {
      if (++round > kShrinkCap) {
        throw CertificationError("cannot certify segregating box at v = " + alpha.to_string());
      }
      if (alpha.is_rational()) {
        if (w.a < alpha.value()) w.a = (w.a + alpha.value()) / 2;
        if (w.b > alpha.value()) w.b = (w.b + alpha.value()) / 2;
      } else {
        alpha.bisect();
        w.a = std::max(w.a, alpha.lo());
        w.b = std::min(w.b, alpha.hi());
      }
    }
    if (curve && i > 0) {
      for (auto& r : roots_at(g.G, w.a, box)) w.left_owner.push_back(band(r, w.sig));
    }
    if (curve && i + 1 < m) {
      for (auto& r : roots_at(g.G, w.b, box)) w.right_owner.push_back(band(r, w.sig));
    }
    if (w.pts.empty() && (!w.left_owner.empty() || !w.right_owner.empty())) {
      throw CertificationError("branches end at a column without curve points at v = " + alpha.to_string());
    }
  }

  auto add_vertex = [&](PlaneVertex v) {
    g.vertices.push_back(std::move(v));
    return static_cast<int>(g.vertices.size()) - 1;
  };

  std::vector<std::vector<int>> crit_ids(m);  // vertex id per fibre point
  std::vector<int> prev_sample;               // vertex ids of the previous sample column
  for (std::size_t i = 0; i < m; ++i) {
    CriticalWork& w = cols[i];
    PlaneColumn col;
    col.alpha = w.alpha;
    col.vertical_line = w.vertical;
    col.injected = w.injected;
    col.a = w.a;
    col.b = w.b;
    const int col_idx = static_cast<int>(g.columns.size());
    const bool edge_v = is_boundary_v(*w.alpha, box);

    std::vector<int> left(w.pts.size(), 0), right(w.pts.size(), 0);
    for (int o : w.left_owner) ++left[static_cast<std::size_t>(o)];
    for (int o : w.right_owner) ++right[static_cast<std::size_t>(o)];

    struct Item {
      AlgPoint p;
      int fibre_index;  // -1 for vertical line ends
    };
    std::vector<Item> items;
    for (std::size_t j = 0; j < w.pts.size(); ++j) items.push_back({w.pts[j], static_cast<int>(j)});
    if (w.vertical) {
      for (const Rational& end : {box.C, box.D}) {
        bool present = false;
        for (auto& it : items) present = present || it.p.compare_t(end) == 0;
        if (present) continue;
        FibrePtr fib = make_fibre(w.alpha, Poly::variable("t") - Poly(end));
        AlgPoint p(w.alpha, fib, FibreRoot{true, end, end});
        if (end == box.C) {
          items.insert(items.begin(), {p, -1});
        } else {
          items.push_back({p, -1});
        }
      }
    }
    crit_ids[i].assign(w.pts.size(), -1);
    for (std::size_t r = 0; r < items.size(); ++r) {
      PlaneVertex v;
      v.column = col_idx;
      v.row = static_cast<int>(r);
      v.point = items[r].p;
      v.on_vertical_line = w.vertical;
      bool edge_t = v.point.compare_t(box.C) == 0 || v.point.compare_t(box.D) == 0;
      v.boundary = edge_v || edge_t;
      int st = sign_at(Gt, v.point);
      int sv = sign_at(Gv, v.point);
      if (st == 0 && sv == 0) {
        v.kind = VertexKind::Singular;
      } else if (v.boundary) {
        v.kind = VertexKind::Boundary;
      } else if (st == 0) {
        v.kind = VertexKind::Critical;
      } else {
        v.kind = VertexKind::Regular;
      }
      v.a = w.a;
      v.b = w.b;
      int j = items[r].fibre_index;
      if (j >= 0) {
        auto J = static_cast<std::size_t>(j);
        v.c = J == 0 ? box.C : w.sig[J - 1];
        v.d = J + 1 == w.pts.size() ? box.D : w.sig[J];
        v.left = left[J];
        v.right = right[J];
      } else {
        v.c = v.d = v.point.t_lo();
      }
      int id = add_vertex(std::move(v));
      col.vertices.push_back(id);
      if (j >= 0) crit_ids[i][static_cast<std::size_t>(j)] = id;
    }
    if (w.vertical) {
      for (std::size_t r = 0; r + 1 < col.vertices.size(); ++r) {
        g.edges.push_back({col.vertices[r], col.vertices[r + 1], true});
      }
    }
    g.columns.push_back(col);

    // Close the slab on the left of this column.
    if (i > 0) {
      if (w.left_owner.size() != prev_sample.size()) {
        throw CertificationError("branch-count mismatch left of v = " + w.alpha->to_string());
      }
      for (std::size_t r = 0; r < prev_sample.size(); ++r) {
        g.edges.push_back({prev_sample[r], crit_ids[i][static_cast<std::size_t>(w.left_owner[r])], false});
      }
    }
    if (i + 1 == m) break;

    // Sample column of the slab to the right.
    PlaneColumn sc;
    sc.alpha = std::make_shared<RealAlg>(RealAlg::rational(mids[i]));
    sc.sample = true;
    sc.a = sc.b = mids[i];
    const int sc_idx = static_cast<int>(g.columns.size());
    std::vector<AlgPoint> spts;
    if (curve) spts = fibre_points(sc.alpha, g.G, box.C, box.D);
    if (spts.size() != w.right_owner.size()) {
      throw CertificationError("branch-count mismatch right of v = " + w.alpha->to_string());
    }
    prev_sample.clear();
    for (std::size_t r = 0; r < spts.size(); ++r) {
      PlaneVertex v;
      v.column = sc_idx;
      v.row = static_cast<int>(r);
      v.point = spts[r];
      v.boundary = v.point.compare_t(box.C) == 0 || v.point.compare_t(box.D) == 0;
      v.kind = v.boundary ? VertexKind::Boundary : VertexKind::Regular;
      v.left = v.right = 1;
      v.a = v.b = mids[i];
      v.c = v.point.t_lo();
      v.d = v.point.t_hi();
      int id = add_vertex(std::move(v));
      sc.vertices.push_back(id);
      prev_sample.push_back(id);
      g.edges.push_back({crit_ids[i][static_cast<std::size_t>(w.right_owner[r])], id, false});
    }
    g.columns.push_back(sc);
  }
  check_graph(g);
  return g;
}

int find_vertex(TopologyGraph& g, AlgPoint& p) {
  for (auto& col : g.columns) {
    if (col.sample && !p.v()->is_rational()) continue;
    if (compare(*col.alpha, *p.v()) != 0) continue;
    for (int id : col.vertices) {
      if (compare_t(g.vertices[static_cast<std::size_t>(id)].point, p) == 0) return id;
    }
    return -1;
  }
  return -1;
}

TopologyGraph refine_graph(const TopologyGraph& g0, std::vector<AlgPoint> points) {
  std::vector<UPoly> extra;
  for (auto& col : g0.columns) {
    if (col.injected) extra.push_back(col.alpha->poly());
  }
  for (auto& p : points) extra.push_back(p.v()->poly());
  TopologyGraph g = build_graph(g0.G_full, g0.box, extra);
  for (auto& p : points) {
    int id = find_vertex(g, p);
    if (id < 0) throw CertificationError("refine_graph: point " + p.to_string() + " is not on the curve in the box");
    auto& v = g.vertices[static_cast<std::size_t>(id)];
    v.character = true;
    if (v.kind == VertexKind::Regular) v.kind = VertexKind::Injected;
  }
  for (const auto& v0 : g0.vertices) {
    if (!v0.character) continue;
    AlgPoint p = v0.point;
    int id = find_vertex(g, p);
    if (id < 0) throw CertificationError("refine_graph: lost character vertex " + p.to_string());
    auto& v = g.vertices[static_cast<std::size_t>(id)];
    v.character = true;
    if (v.kind == VertexKind::Regular) v.kind = VertexKind::Injected;
  }
  return g;
}

bool verify_segregating_box(TopologyGraph& g, int i) {
  PlaneVertex& v = g.vertices[static_cast<std::size_t>(i)];
  const PlaneColumn& col = g.columns[static_cast<std::size_t>(v.column)];
  const Box& box = g.box;
  if (col.sample || !(v.c < v.d)) return sign_at(g.G_full, v.point) == 0;
  // (1) alpha is the only root of d in [a, b]
  auto droots = isolate_univariate(g.d, v.a, v.b);
  if (droots.size() != 1 || compare(droots[0], *col.alpha) != 0) return false;
  // (2) the triangular solve in the box returns only the owner
  auto sol = isolate_triangular(g.d, g.G, v.a, v.b, v.c, v.d);
  if (sol.size() != 1) return false;
  if (compare(*sol[0].v(), *col.alpha) != 0 || compare_t(sol[0], v.point) != 0) return false;
  // (3) top and bottom miss the curve
  for (const Rational& e : {v.c, v.d}) {
    if (e == box.C || e == box.D) continue;
    UPoly ge = at_t(g.G_full, e);
    if (ge.is_zero()) return false;
    if (ge.degree() <= 0) continue;
    try {
      if (count_roots_in(ge, v.a, v.b) != 0) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

void check_graph(const TopologyGraph& g) {
  std::vector<int> lcount(g.vertices.size(), 0), rcount(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    const auto& a = g.vertices[static_cast<std::size_t>(e.from)];
    const auto& b = g.vertices[static_cast<std::size_t>(e.to)];
    if (e.vertical) {
      if (a.column != b.column || b.row != a.row + 1) throw CertificationError("vertical edge joins non-adjacent vertices");
      continue;
    }
    if (b.column != a.column + 1) throw CertificationError("edge joins non-consecutive columns");
    ++rcount[static_cast<std::size_t>(e.from)];
    ++lcount[static_cast<std::size_t>(e.to)];
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    if (v.left != lcount[i] || v.right != rcount[i]) {
      throw CertificationError("branch counts disagree with edges at " + v.point.to_string());
    }
  }
  for (std::size_t c = 0; c < g.columns.size(); ++c) {
    const auto& col = g.columns[c];
    if (!col.sample) continue;
    int from_left = 0, from_right = 0;
    for (int id : g.columns[c - 1].vertices) from_left += g.vertices[static_cast<std::size_t>(id)].right;
    for (int id : g.columns[c + 1].vertices) from_right += g.vertices[static_cast<std::size_t>(id)].left;
    auto n = static_cast<int>(col.vertices.size());
    if (from_left != n || from_right != n) throw CertificationError("edge conservation fails in a slab");
  }
}

}  // namespace ssi
