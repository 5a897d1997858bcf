#include "ssi/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "ssi/surface_io.hpp"

namespace ssi {
namespace {

const char* kXYZ[3] = {"x", "y", "z"};

std::string dec(double x) { return fmt::format("{:.12g}", x); }

Json interval_json(const Rational& lo, const Rational& hi) { return Json::array({to_string(lo), to_string(hi)}); }

const char* kind_colour(VertexKind k) {
  switch (k) {
    case VertexKind::Singular:
      return "#d62728";
    case VertexKind::Critical:
      return "#ff7f0e";
    case VertexKind::Boundary:
      return "#7f7f7f";
    case VertexKind::Injected:
      return "#9467bd";
    default:
      return "#1f77b4";
  }
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RealAlg& a) {
  if (a.is_rational()) return to_string(a.value());
  Json j;
  j["poly"] = a.poly().to_string("v");
  j["interval"] = interval_json(a.lo(), a.hi());
  return j;
}

Json to_json(const AlgPoint& p) {
  Json j;
  j["v"] = to_json(*p.v());
  if (p.t_exact()) {
    j["t"] = to_string(p.t_lo());
  } else {
    j["t"] = {{"interval", interval_json(p.t_lo(), p.t_hi())}};
  }
  j["approx"] = Json::array({dec(p.v_approx()), dec(p.t_approx())});
  return j;
}

Json to_json(const Coord3& c, int digits) {
  Json j = Json::array();
  for (const auto& x : c) {
    if (x.exact) {
      j.push_back(to_string(x.lo));
    } else {
      j.push_back({{"interval", interval_json(x.lo, x.hi)}, {"approx", to_decimal((x.lo + x.hi) / 2, digits)}});
    }
  }
  return j;
}

Json to_json(const RationalSurface& s) {
  Json j;
  j["params"] = Json::array({s.params[0], s.params[1]});
  for (std::size_t i = 0; i < 3; ++i) {
    j[kXYZ[i]] = {{"numer", s.coords[i].numer.to_string()}, {"denom", s.coords[i].denom.to_string()}};
  }
  return j;
}

Json to_json(const Box& b) { return Json::array({to_string(b.A), to_string(b.B), to_string(b.C), to_string(b.D)}); }

Box parse_box(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error("box must be four rationals");
  Box b{parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
        parse_rational(j[2].get<std::string>()), parse_rational(j[3].get<std::string>())};
  if (!(b.A < b.B) || !(b.C < b.D)) throw Error("box must satisfy A < B and C < D");
  return b;
}

RationalSurface parse_surface_json(const Json& j) { return parse_surface(j.dump()).surface; }

Json plane_graph_json(const TopologyGraph& g, const RationalSurface& s2) {
  Json j;
  j["box"] = to_json(g.box);
  j["G"] = g.G_full.to_string();
  j["G_primitive"] = g.G.to_string();
  j["V"] = g.V.to_string();
  j["critical_polynomial"] = g.d.to_string("v");
  j["s2"] = to_json(s2);
  Json cols = Json::array();
  for (const auto& c : g.columns) {
    Json jc;
    jc["v"] = to_json(*c.alpha);
    jc["sample"] = c.sample;
    jc["vertical_line"] = c.vertical_line;
    jc["injected"] = c.injected;
    if (!c.sample) jc["segregating"] = interval_json(c.a, c.b);
    jc["vertices"] = c.vertices;
    cols.push_back(jc);
  }
  j["columns"] = cols;
  Json vs = Json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    Json jv;
    jv["id"] = i;
    jv["column"] = v.column;
    jv["row"] = v.row;
    jv["kind"] = to_string(v.kind);
    jv["boundary"] = v.boundary;
    jv["character"] = v.character;
    jv["branches"] = Json::array({v.left, v.right});
    jv["point"] = to_json(v.point);
    jv["box"] = Json::array({to_string(v.a), to_string(v.b), to_string(v.c), to_string(v.d)});
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"vertical", e.vertical}});
  j["edges"] = es;
  return j;
}

PlaneArtifact load_plane_graph(const Json& j) {
  PlaneArtifact a;
  try {
    a.s2 = parse_surface_json(j.at("s2"));
    Box box = parse_box(j.at("box"));
    Poly G = Poly::parse(j.at("G").get<std::string>());
    a.graph = build_graph(G, box);  // deterministic; checked against the stored graph below
  } catch (const Json::exception& e) {
    throw Error(std::string("plane graph file: ") + e.what());
  }
  const auto& g = a.graph;
  if (g.vertices.size() != j["vertices"].size() || g.edges.size() != j["edges"].size()) {
    throw Error("plane graph file: stored graph does not match the recomputed one");
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = j["edges"][i];
    if (e["from"].get<int>() != g.edges[i].from || e["to"].get<int>() != g.edges[i].to) {
      throw Error("plane graph file: stored edges do not match the recomputed ones");
    }
  }
  return a;
}

Json space_graph_json(const SpaceResult& r, int digits) {
  Json j;
  const auto& ch = r.character;
  j["special_component"] = ch.irregular.special.to_string();
  Json irr = Json::array();
  for (const auto& p : ch.irregular.points) irr.push_back(to_json(p));
  j["irregular"] = irr;
  Json si = Json::array();
  for (const auto& s : ch.self_intersections) {
    Json js;
    js["point"] = to_json(s.point, digits);
    Json ps = Json::array();
    for (const auto& p : s.params) ps.push_back(to_json(p));
    js["params"] = ps;
    si.push_back(js);
  }
  j["self_intersections"] = si;
  Json vs = Json::array();
  for (std::size_t i = 0; i < r.graph.vertices.size(); ++i) {
    const auto& v = r.graph.vertices[i];
    Json jv;
    jv["id"] = i;
    jv["x"] = to_json(v.x, digits);
    Json tags = Json::array();
    if (v.singular) tags.push_back("singular");
    if (v.cusp) tags.push_back("cusp");
    if (v.self_intersection) tags.push_back("self-intersection");
    if (v.injected) tags.push_back("character");
    if (v.boundary) tags.push_back("boundary");
    if (v.subdivision) tags.push_back("subdivision");
    jv["tags"] = tags;
    jv["preimages"] = v.preimages;
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : r.graph.edges) {
    es.push_back({{"from", e.from}, {"to", e.to}, {"vertical", e.vertical}, {"column", e.column}, {"branch", e.branch}});
  }
  j["edges"] = es;
  j["subdivisions"] = r.graph.subdivisions;
  return j;
}

Json curve_json(const Approximation& a, int digits) {
  Json j;
  j["epsilon"] = to_string(a.epsilon);
  Json pls = Json::array();
  for (const auto& pl : a.polylines) {
    Json jp;
    jp["closed"] = pl.closed;
    Json pts = Json::array();
    for (const auto& p : pl.points) {
      Json q;
      q["x"] = Json::array({to_decimal(p.rep[0], digits), to_decimal(p.rep[1], digits), to_decimal(p.rep[2], digits)});
      q["exact"] = all_exact(p.x);
      q["param"] = Json::array({dec(p.param.v_approx()), dec(p.param.t_approx())});
      if (p.vertex >= 0) q["vertex"] = p.vertex;
      pts.push_back(q);
    }
    jp["points"] = pts;
    Json est = Json::array();
    for (double e : pl.estimates) est.push_back(fmt::format("{:.6e}", e));
    jp["hausdorff_estimates"] = est;
    pls.push_back(jp);
  }
  j["polylines"] = pls;
  return j;
}

std::string plane_graph_svg(const TopologyGraph& g) {
  const double W = 640, H = 640, pad = 20;
  double A = g.box.A.get_d(), B = g.box.B.get_d(), C = g.box.C.get_d(), D = g.box.D.get_d();
  auto X = [&](double v) { return pad + (v - A) / (B - A) * (W - 2 * pad); };
  auto Y = [&](double t) { return H - pad - (t - C) / (D - C) * (H - 2 * pad); };
  std::vector<std::pair<double, double>> pos;
  for (const auto& v : g.vertices) pos.push_back({X(v.point.v_approx()), Y(v.point.t_approx())});
  std::string s = fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">)"
                              "\n",
                              W, H, W, H);
  s += fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="white" stroke="#cccccc"/>)"
                   "\n",
                   pad, pad, W - 2 * pad, H - 2 * pad);
  for (const auto& c : g.columns) {
    if (c.sample) continue;
    double x = X(c.alpha->approx());
    s += fmt::format(R"(<line x1="{:.3f}" y1="{}" x2="{:.3f}" y2="{}" stroke="#eeeeee"/>)"
                     "\n",
                     x, pad, x, H - pad);
  }
  for (const auto& e : g.edges) {
    auto [x1, y1] = pos[static_cast<std::size_t>(e.from)];
    auto [x2, y2] = pos[static_cast<std::size_t>(e.to)];
    s += fmt::format(R"(<line x1="{:.3f}" y1="{:.3f}" x2="{:.3f}" y2="{:.3f}" stroke="black" stroke-width="1.5"/>)"
                     "\n",
                     x1, y1, x2, y2);
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    s += fmt::format(R"(<circle cx="{:.3f}" cy="{:.3f}" r="{}" fill="{}"><title>{} {}</title></circle>)"
                     "\n",
                     pos[i].first, pos[i].second, v.kind == VertexKind::Regular ? 2 : 4, kind_colour(v.kind), i,
                     to_string(v.kind));
  }
  s += "</svg>\n";
  return s;
}

std::string curve_obj(const Approximation& a, int digits) {
  std::string s = "# polyline approximation, epsilon " + to_string(a.epsilon) + "\n";
  std::map<int, int> shared;
  int next = 1;
  std::string lines;
  auto emit = [&](const PolylinePoint& p) {
    s += "v " + to_decimal(p.rep[0], digits) + " " + to_decimal(p.rep[1], digits) + " " + to_decimal(p.rep[2], digits) +
         "\n";
    return next++;
  };
  for (const auto& pl : a.polylines) {
    std::string l = "l";
    for (const auto& p : pl.points) {
      int id;
      if (p.vertex >= 0) {
        auto it = shared.find(p.vertex);
        id = it != shared.end() ? it->second : (shared[p.vertex] = emit(p));
      } else {
        id = emit(p);
      }
      l += " " + std::to_string(id);
    }
    if (pl.points.size() > 1) lines += l + "\n";
  }
  return s + lines;
}

}  // namespace ssi
