#include "ssi/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace ssi {
namespace {

constexpr double kUnset = -1;

struct Chain {
  SpaceEdge edge;
  std::vector<PolylinePoint> pts;
  std::vector<double> est;
  std::vector<int> m;
  std::vector<int> depth;
};

Interval s_interval(const SpaceEdge& e, const AlgPoint& p) { return e.vertical ? p.t_interval() : p.v_interval(); }

std::array<Rational, 3> representative(const Coord3& c) {
  std::array<Rational, 3> r;
  for (std::size_t k = 0; k < 3; ++k) r[k] = c[k].exact ? c[k].lo : round_dyadic((c[k].lo + c[k].hi) / 2, 64);
  return r;
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool collinear_between(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
                       const std::array<Rational, 3>& c) {
  std::array<Rational, 3> u, w;
  for (std::size_t k = 0; k < 3; ++k) {
    u[k] = b[k] - a[k];
    w[k] = c[k] - b[k];
  }
  if (u[1] * w[2] - u[2] * w[1] != 0 || u[2] * w[0] - u[0] * w[2] != 0 || u[0] * w[1] - u[1] * w[0] != 0) return false;
  return u[0] * w[0] + u[1] * w[1] + u[2] * w[2] > 0;
}

double eval(const Poly& p, double v, double t) {
  int iv = p.var_index("v"), it = p.var_index("t");
  double sum = 0;
  for (const auto& [e, c] : p.terms()) {
    double term = c.get_d();
    if (iv >= 0) term *= std::pow(v, e[static_cast<std::size_t>(iv)]);
    if (it >= 0) term *= std::pow(t, e[static_cast<std::size_t>(it)]);
    sum += term;
  }
  return sum;
}

Box3 point_box(const std::array<Rational, 3>& r) {
  return {Interval::point(r[0]), Interval::point(r[1]), Interval::point(r[2])};
}

class Approximator {
 public:
  Approximator(TopologyGraph& g, const SpaceGraph& sg, const RationalSurface& s2, const Rational& eps,
               const ApproxOptions& opt)
      : g_(g), sg_(sg), s2_(s2), eps_(eps), epsd_(eps.get_d()), opt_(opt) {}

  Approximation run() {
    out_.epsilon = eps_;
    for (const auto& e : sg_.edges) {
      chains_.push_back(build(e));
      settle(chains_.back());
    }
    resolve();
    assemble();
    return out_;
  }

 private:
  TopologyGraph& g_;
  const SpaceGraph& sg_;
  const RationalSurface& s2_;
  Rational eps_;
  double epsd_;
  ApproxOptions opt_;
  std::vector<Chain> chains_;
  Approximation out_;

  PolylinePoint sample(const SpaceEdge& e, const Rational& s) {
    PolylinePoint p;
    p.param = branch_point(e, s, g_, false);
    p.x = lift_point(s2_, p.param, 64, false);
    p.rep = representative(p.x);
    return p;
  }

  PolylinePoint endpoint(const AlgPoint& param, int vertex) {
    PolylinePoint p;
    p.param = param;
    p.vertex = vertex;
    p.x = sg_.vertices[static_cast<std::size_t>(vertex)].x;
    p.rep = representative(p.x);
    return p;
  }

  Chain build(const SpaceEdge& e) {
    Chain c;
    c.edge = e;
    AlgPoint a = e.p_from, b = e.p_to;
    Rational L;
    int N = 2;
    for (int round = 0;; ++round) {
      if (round > 4000) throw CertificationError("cannot separate the ends of an edge");
      Interval ia = s_interval(e, a), ib = s_interval(e, b);
      if (ia.hi < ib.lo) {
        L = ib.mid() - ia.mid();
        N = slab_count(L, eps_);
        Rational w = std::min(L / (4 * N), eps_ / 4);
        if (ia.width() <= w && ib.width() <= w) break;
      }
      if (ia.width() > 0) a.refine(ia.width() / 2);
      if (ib.width() > 0) b.refine(ib.width() / 2);
    }
    out_.slab_counts.push_back(N);
    Interval ia = s_interval(e, a), ib = s_interval(e, b);
    c.pts.push_back(endpoint(a, e.from));
    if (e.vertical) {
      for (Rational s = ia.mid() + eps_; s < ib.mid() - eps_ / 2; s += eps_) c.pts.push_back(sample(e, s));
    } else {
      for (int k = 1; k < N; ++k) c.pts.push_back(sample(e, ia.mid() + L * k / N));
    }
    c.pts.push_back(endpoint(b, e.to));
    c.est.assign(c.pts.size() - 1, kUnset);
    c.m.assign(c.pts.size() - 1, opt_.m);
    c.depth.assign(c.pts.size() - 1, 0);
    return c;
  }

  // Open parameter range strictly between points k and k+1.
  std::pair<Rational, Rational> gap(const Chain& c, std::size_t k) {
    return {s_interval(c.edge, c.pts[k].param).hi, s_interval(c.edge, c.pts[k + 1].param).lo};
  }

  // Curve point of edge e at parameter s, in doubles; only used for the sampled estimate.
  Vec3 sample_vec(const SpaceEdge& e, const Rational& s) {
    double v, t;
    if (e.vertical) {
      auto& alpha = *g_.columns[static_cast<std::size_t>(e.column)].alpha;
      alpha.refine(Rational(1, Integer(1) << 50));
      v = alpha.approx();
      t = s.get_d();
    } else {
      UPoly f = UPoly::from_poly(g_.G.substitute("v", s), "t");
      auto roots = isolate_univariate(f, g_.box.C, g_.box.D, false);
      const auto& col = g_.columns[static_cast<std::size_t>(e.column)];
      if (roots.size() != col.vertices.size()) {
        throw CertificationError("branch count changes inside a slab at v = " + to_string(s));
      }
      auto& r = roots[static_cast<std::size_t>(e.branch)];
      v = s.get_d();
      if (r.is_rational()) {
        t = r.value().get_d();
      } else {
        // Newton in doubles from a coarse isolating interval; the root is simple inside a slab.
        r.refine(Rational(1, 1 << 16));
        double a = r.lo().get_d(), b = r.hi().get_d();
        std::vector<double> c;
        for (const auto& x : f.coeffs()) c.push_back(x.get_d());
        t = r.approx();
        for (int it = 0; it < 6; ++it) {
          double y = 0, dy = 0;
          for (std::size_t i = c.size(); i-- > 0;) {
            dy = dy * t + y;
            y = y * t + c[i];
          }
          if (dy == 0) break;
          t = std::clamp(t - y / dy, a, b);
        }
      }
    }
    Vec3 out;
    for (std::size_t d = 0; d < 3; ++d) out[d] = eval(s2_.coords[d].numer, v, t) / eval(s2_.coords[d].denom, v, t);
    return out;
  }

  double estimate(Chain& c, std::size_t k) {
    auto [lo, hi] = gap(c, k);
    const SpaceEdge& e = c.edge;
    auto sampler = [&](int m) {
      std::vector<Vec3> pts;
      for (int j = 1; j <= m; ++j) pts.push_back(sample_vec(e, lo + (hi - lo) * j / m));  // nested when m doubles
      return pts;
    };
    out_.max_m = std::max(out_.max_m, c.m[k]);
    return hausdorff_estimate(to_vec(c.pts[k].rep), to_vec(c.pts[k + 1].rep), sampler, c.m[k]);
  }

  void split(Chain& c, std::size_t k, int m, int depth) {
    if (depth > opt_.max_depth) throw CertificationError("approximation: subdivision depth limit reached");
    auto [lo, hi] = gap(c, k);
    c.pts.insert(c.pts.begin() + static_cast<long>(k) + 1, sample(c.edge, (lo + hi) / 2));
    c.est[k] = kUnset;
    c.est.insert(c.est.begin() + static_cast<long>(k) + 1, kUnset);
    c.m[k] = m;
    c.m.insert(c.m.begin() + static_cast<long>(k) + 1, m);
    c.depth[k] = depth;
    c.depth.insert(c.depth.begin() + static_cast<long>(k) + 1, depth);
    ++out_.subdivisions;
  }

  void settle(Chain& c) {
    for (std::size_t k = 0; k + 1 < c.pts.size();) {
      if (c.est[k] == kUnset) c.est[k] = estimate(c, k);
      if (c.est[k] < epsd_) {
        ++k;
        continue;
      }
      split(c, k, std::min(2 * c.m[k], opt_.m_cap), c.depth[k] + 1);
    }
  }

  struct Seg {
    std::size_t chain, k;
    int a, b;
    Vec3 lo, hi;
  };

  std::vector<Seg> segments() {
    std::vector<Seg> segs;
    int next = static_cast<int>(sg_.vertices.size());
    for (std::size_t ci = 0; ci < chains_.size(); ++ci) {
      const auto& c = chains_[ci];
      std::vector<int> ids;
      for (const auto& p : c.pts) ids.push_back(p.vertex >= 0 ? p.vertex : next++);
      for (std::size_t k = 0; k + 1 < c.pts.size(); ++k) {
        Vec3 p = to_vec(c.pts[k].rep), q = to_vec(c.pts[k + 1].rep);
        Seg s{ci, k, ids[k], ids[k + 1], {}, {}};
        for (std::size_t d = 0; d < 3; ++d) {
          double pad = 1e-9 * (1 + std::max(std::abs(p[d]), std::abs(q[d])));
          s.lo[d] = std::min(p[d], q[d]) - pad;
          s.hi[d] = std::max(p[d], q[d]) + pad;
        }
        segs.push_back(s);
      }
    }
    return segs;
  }

  const std::array<Rational, 3>& rep(std::size_t chain, std::size_t k) const { return chains_[chain].pts[k].rep; }

  bool meets(const Seg& s, const Seg& t) const {
    const auto& a0 = rep(s.chain, s.k);
    const auto& a1 = rep(s.chain, s.k + 1);
    const auto& b0 = rep(t.chain, t.k);
    const auto& b1 = rep(t.chain, t.k + 1);
    int shared = (s.a == t.a) + (s.a == t.b) + (s.b == t.a) + (s.b == t.b);
    if (shared >= 2) return true;
    Verdict r;
    if (shared == 1) {
      bool sa = s.a == t.a || s.a == t.b;
      const auto& common = sa ? a0 : a1;
      const auto& x = sa ? a1 : a0;
      const auto& y = (t.a == (sa ? s.a : s.b)) ? b1 : b0;
      r = overlap_beyond_shared(point_box(common), point_box(x), point_box(y));
    } else {
      r = segments_intersect(point_box(a0), point_box(a1), point_box(b0), point_box(b1));
    }
    return r != Verdict::No;
  }

  std::vector<std::pair<std::size_t, std::size_t>> crossings() {
    auto segs = segments();
    std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) { return x.lo[0] < y.lo[0]; });
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size() && segs[j].lo[0] <= segs[i].hi[0]; ++j) {
        const Seg& s = segs[i];
        const Seg& t = segs[j];
        if (s.lo[1] > t.hi[1] || t.lo[1] > s.hi[1] || s.lo[2] > t.hi[2] || t.lo[2] > s.hi[2]) continue;
        if (meets(s, t)) {
          bad.push_back({s.chain, s.k});
          bad.push_back({t.chain, t.k});
        }
      }
    }
    return bad;
  }

  void resolve() {
    for (int round = 0;; ++round) {
      auto bad = crossings();
      if (bad.empty()) return;
      if (round >= opt_.max_crossing_rounds) {
        throw CertificationError("approximation: output segments still cross after " + std::to_string(round) +
                                 " rounds");
      }
      std::sort(bad.begin(), bad.end());
      bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
      // Split from the back so earlier indices stay valid.
      for (auto it = bad.rbegin(); it != bad.rend(); ++it) {
        Chain& c = chains_[it->first];
        split(c, it->second, c.m[it->second], c.depth[it->second] + 1);
        ++out_.crossing_splits;
      }
      for (auto& c : chains_) settle(c);
    }
  }

  bool mergeable(int v, const std::vector<int>& deg) const {
    const auto& sv = sg_.vertices[static_cast<std::size_t>(v)];
    return deg[static_cast<std::size_t>(v)] == 2 && !sv.singular && !sv.cusp && !sv.self_intersection &&
           !sv.injected && !sv.boundary;
  }

  void append(Polyline3D& pl, const Chain& c, bool forward) {
    std::vector<PolylinePoint> pts = c.pts;
    std::vector<double> est = c.est;
    if (!forward) {
      std::reverse(pts.begin(), pts.end());
      std::reverse(est.begin(), est.end());
    }
    std::size_t start = pl.points.empty() ? 0 : 1;
    for (std::size_t i = start; i < pts.size(); ++i) pl.points.push_back(pts[i]);
    pl.estimates.insert(pl.estimates.end(), est.begin(), est.end());
  }

  void simplify(Polyline3D& pl, const std::vector<int>& deg) {
    for (std::size_t i = 1; i + 1 < pl.points.size();) {
      int v = pl.points[i].vertex;
      bool droppable = v < 0 || mergeable(v, deg);
      if (droppable && collinear_between(pl.points[i - 1].rep, pl.points[i].rep, pl.points[i + 1].rep)) {
        pl.estimates[i - 1] = std::max(pl.estimates[i - 1], pl.estimates[i]);
        pl.estimates.erase(pl.estimates.begin() + static_cast<long>(i));
        pl.points.erase(pl.points.begin() + static_cast<long>(i));
        continue;
      }
      ++i;
    }
  }

  void assemble() {
    const std::size_t V = sg_.vertices.size();
    std::vector<int> deg(V, 0);
    std::vector<std::vector<std::pair<std::size_t, bool>>> inc(V);  // (chain, starts here)
    for (std::size_t ci = 0; ci < chains_.size(); ++ci) {
      const auto& e = chains_[ci].edge;
      ++deg[static_cast<std::size_t>(e.from)];
      ++deg[static_cast<std::size_t>(e.to)];
      inc[static_cast<std::size_t>(e.from)].push_back({ci, true});
      inc[static_cast<std::size_t>(e.to)].push_back({ci, false});
    }
    std::vector<bool> used(chains_.size(), false);
    auto walk = [&](std::size_t ci, bool forward) {
      Polyline3D pl;
      int start = forward ? chains_[ci].edge.from : chains_[ci].edge.to;
      for (;;) {
        used[ci] = true;
        append(pl, chains_[ci], forward);
        int end = forward ? chains_[ci].edge.to : chains_[ci].edge.from;
        if (!mergeable(end, deg)) break;
        std::pair<std::size_t, bool> next{chains_.size(), false};
        for (const auto& in : inc[static_cast<std::size_t>(end)]) {
          if (!(in.first == ci && in.second == !forward)) next = in;
        }
        if (next.first == chains_.size() || used[next.first]) break;
        ci = next.first;
        forward = next.second;
      }
      pl.closed = pl.points.back().vertex == start && pl.points.size() > 1;
      simplify(pl, deg);
      out_.polylines.push_back(std::move(pl));
    };
    for (std::size_t v = 0; v < V; ++v) {
      if (deg[v] == 0) {
        Polyline3D pl;
        PolylinePoint p;
        p.param = sg_.vertices[v].params.front();
        p.vertex = static_cast<int>(v);
        p.x = sg_.vertices[v].x;
        p.rep = representative(p.x);
        pl.points.push_back(p);
        out_.polylines.push_back(std::move(pl));
        continue;
      }
      if (mergeable(static_cast<int>(v), deg)) continue;
      for (const auto& [ci, starts] : inc[v]) {
        if (!used[ci]) walk(ci, starts);
      }
    }
    for (std::size_t ci = 0; ci < chains_.size(); ++ci) {
      if (!used[ci]) walk(ci, true);
    }
    for (const auto& pl : out_.polylines) {
      out_.segments += static_cast<int>(pl.estimates.size());
      for (double e : pl.estimates) out_.max_estimate = std::max(out_.max_estimate, e);
    }
  }
};

}  // namespace

int slab_count(const Rational& L, const Rational& eps) {
  if (eps <= 0) throw Error("epsilon must be positive");
  Integer n = floor(L / eps) + 1;
  return std::max(2, static_cast<int>(n.get_si()));
}

Vec3 to_vec(const std::array<Rational, 3>& r) { return {r[0].get_d(), r[1].get_d(), r[2].get_d()}; }

double point_segment_distance(const Vec3& q, const Vec3& a, const Vec3& b) {
  Vec3 d = sub(b, a), w = sub(q, a);
  double len2 = dot(d, d);
  double s = len2 > 0 ? std::clamp(dot(w, d) / len2, 0.0, 1.0) : 0.0;
  Vec3 r{w[0] - s * d[0], w[1] - s * d[1], w[2] - s * d[2]};
  return std::sqrt(dot(r, r));
}

double hausdorff_estimate(const Vec3& p1, const Vec3& p2, const std::function<std::vector<Vec3>(int)>& sampler, int m) {
  double best = 0;
  for (const auto& q : sampler(m)) best = std::max(best, point_segment_distance(q, p1, p2));
  return best;
}

Approximation approximate(TopologyGraph& g, const SpaceGraph& sg, const RationalSurface& s2, const Rational& eps,
                          const ApproxOptions& opt) {
  if (eps <= 0) throw Error("epsilon must be positive");
  return Approximator(g, sg, s2, eps, opt).run();
}

namespace {

struct Counter {
  std::vector<int> p;
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  int add() {
    p.push_back(static_cast<int>(p.size()));
    return p.back();
  }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
  int roots() {
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) n += find(static_cast<int>(i)) == static_cast<int>(i);
    return n;
  }
};

}  // namespace

GraphShape shape(const SpaceGraph& sg) {
  Counter c;
  for (std::size_t i = 0; i < sg.vertices.size(); ++i) c.add();
  for (const auto& e : sg.edges) c.unite(e.from, e.to);
  GraphShape s;
  s.components = c.roots();
  s.cycle_rank = static_cast<int>(sg.edges.size()) - static_cast<int>(sg.vertices.size()) + s.components;
  return s;
}

GraphShape shape(const Approximation& a) {
  Counter c;
  std::map<int, int> vertex_ids;
  auto id = [&](const PolylinePoint& p) {
    if (p.vertex < 0) return c.add();
    auto it = vertex_ids.find(p.vertex);
    if (it != vertex_ids.end()) return it->second;
    int n = c.add();
    vertex_ids[p.vertex] = n;
    return n;
  };
  int edges = 0;
  for (const auto& pl : a.polylines) {
    int prev = -1;
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
      int cur = id(pl.points[i]);
      if (prev >= 0) {
        c.unite(prev, cur);
        ++edges;
      }
      prev = cur;
    }
  }
  GraphShape s;
  s.components = c.roots();
  s.cycle_rank = edges - static_cast<int>(c.p.size()) + s.components;
  return s;
}

std::pair<int, int> find_segment_crossing(const Approximation& a) {
  struct S {
    const std::array<Rational, 3>* p;
    const std::array<Rational, 3>* q;
    int ip, iq;
  };
  std::vector<S> segs;
  int next = 1 << 30;
  for (const auto& pl : a.polylines) {
    std::vector<int> ids;
    for (const auto& p : pl.points) ids.push_back(p.vertex >= 0 ? p.vertex : next++);
    for (std::size_t k = 0; k + 1 < pl.points.size(); ++k) {
      segs.push_back({&pl.points[k].rep, &pl.points[k + 1].rep, ids[k], ids[k + 1]});
    }
  }
  // Padded double boxes only discard pairs that are far apart; every other pair gets the exact test.
  std::vector<std::array<double, 6>> box;
  for (const auto& s : segs) {
    Vec3 p = to_vec(*s.p), q = to_vec(*s.q);
    std::array<double, 6> b{};
    for (std::size_t d = 0; d < 3; ++d) {
      double pad = 1e-9 * (1 + std::max(std::abs(p[d]), std::abs(q[d])));
      b[d] = std::min(p[d], q[d]) - pad;
      b[d + 3] = std::max(p[d], q[d]) + pad;
    }
    box.push_back(b);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      bool apart = false;
      for (std::size_t d = 0; d < 3; ++d) apart = apart || box[i][d] > box[j][d + 3] || box[j][d] > box[i][d + 3];
      if (apart) continue;
      const S& s = segs[i];
      const S& t = segs[j];
      int shared = (s.ip == t.ip) + (s.ip == t.iq) + (s.iq == t.ip) + (s.iq == t.iq);
      Verdict r;
      if (shared >= 2) {
        r = Verdict::Yes;
      } else if (shared == 1) {
        bool sp = s.ip == t.ip || s.ip == t.iq;
        const auto* common = sp ? s.p : s.q;
        const auto* x = sp ? s.q : s.p;
        const auto* y = (t.ip == (sp ? s.ip : s.iq)) ? t.q : t.p;
        r = overlap_beyond_shared(point_box(*common), point_box(*x), point_box(*y));
      } else {
        r = segments_intersect(point_box(*s.p), point_box(*s.q), point_box(*t.p), point_box(*t.q));
      }
      if (r != Verdict::No) return {static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {-1, -1};
}

}  // namespace ssi
