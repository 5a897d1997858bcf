#include <cmath>
#include <random>

#include "doctest.h"
#include "ssi/space_topology.hpp"
#include "ssi/surface_io.hpp"

using namespace ssi;

namespace {

Poly P(const char* s) { return Poly::parse(s); }
Rational Q(const char* s) { return parse_rational(s); }

RationalSurface fixture(const std::string& name) { return load_surface(std::string(SSI_FIXTURE_DIR) + "/" + name).surface; }

RationalSurface surface(const char* x, const char* y, const char* z) {
  RationalSurface s;
  s.params = {"v", "t"};
  s.coords = {RationalFunction(P(x), Poly(1)), RationalFunction(P(y), Poly(1)), RationalFunction(P(z), Poly(1))};
  return s;
}

const Box kBoxCubic{Q("-4"), Q("36"), Q("-2"), Q("5/2")};
const Box kBoxCone{Q("-2"), Q("2"), Q("-2"), Q("2")};

Poly cubic_curve() { return plane_curve(implicitize(fixture("paraboloid_s1.json")).F, fixture("cubic_s2.json")).G_full; }
Poly cone_curve() { return plane_curve(P("y^2+z^2-2*x+z"), fixture("cone_s2.json")).G_full; }

bool is_exact_point(const Coord3& c, int x, int y, int z) {
  return all_exact(c) && c[0].lo == x && c[1].lo == y && c[2].lo == z;
}

int space_degree(const SpaceGraph& sg, int v) {
  int d = 0;
  for (const auto& e : sg.edges) d += (e.from == v) + (e.to == v);
  return d;
}

int plane_degree(const TopologyGraph& g, int v) {
  int d = 0;
  for (const auto& e : g.edges) d += (e.from == v) + (e.to == v);
  return d;
}

double eval(const Poly& p, double v, double t) {
  double s = 0;
  int iv = p.var_index("v"), it = p.var_index("t");
  for (const auto& [e, c] : p.terms()) {
    s += c.get_d() * std::pow(v, iv >= 0 ? e[static_cast<std::size_t>(iv)] : 0) *
         std::pow(t, it >= 0 ? e[static_cast<std::size_t>(it)] : 0);
  }
  return s;
}

double eval(const RationalFunction& f, double v, double t) { return eval(f.numer, v, t) / eval(f.denom, v, t); }

}  // namespace

TEST_CASE("tangent cross product of a plane") {
  auto N = tangent_cross(surface("v", "t", "0"));
  CHECK(N[0].is_zero());
  CHECK(N[1].is_zero());
  CHECK(N[2] == Poly(1));
}

TEST_CASE("no irregular points on the cubic surface") {
  auto r = irregular_parameters(fixture("cubic_s2.json"), cubic_curve(), kBoxCubic);
  CHECK(r.special == Poly(1));
  CHECK(r.points.empty());
  auto plane = irregular_parameters(surface("v", "t", "0"), P("v^2+t^2-1"), kBoxCone);
  CHECK(plane.points.empty());
}

TEST_CASE("cone apex: special component and irregular points") {
  auto r = irregular_parameters(fixture("cone_s2.json"), cone_curve(), kBoxCone);
  CHECK(equal_up_to_constant(r.special, P("t")));
  REQUIRE(r.points.size() == 2);
  double root = std::sqrt(3.0) / 3;
  for (std::size_t i = 0; i < 2; ++i) {
    auto& p = r.points[i];
    p.refine(Rational(1, 1000000));
    CHECK(p.v_interval().width() <= Rational(1, 1000000));
    CHECK(p.t_interval().width() <= Rational(1, 1000000));
    CHECK(std::abs(p.v_approx() - (i == 0 ? -root : root)) < 1e-6);
    CHECK(p.t_exact());
    CHECK(p.t_lo() == 0);
    CHECK(is_exact_point(lift_point(fixture("cone_s2.json"), p), 0, 0, 0));
  }
}

TEST_CASE("self-intersections on the cubic surface") {
  auto s2 = fixture("cubic_s2.json");
  auto groups = self_intersections(s2, cubic_curve(), kBoxCubic);
  REQUIRE(groups.size() == 2);
  CHECK(is_exact_point(groups[0].point, 0, 0, 0));
  CHECK(is_exact_point(groups[1].point, 32, -8, 0));
  int expect_v[2] = {0, 32};
  for (std::size_t k = 0; k < 2; ++k) {
    REQUIRE(groups[k].params.size() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
      auto& p = groups[k].params[j];
      REQUIRE(p.is_rational());
      CHECK(p.v()->value() == expect_v[k]);
      CHECK(p.t_lo() == static_cast<int>(j));
    }
  }
}

TEST_CASE("an injective curve image has no self-intersections") {
  auto none = self_intersections(surface("v", "t", "v+t"), P("t-v"), kBoxCone);
  CHECK(none.empty());
  auto circle = self_intersections(surface("v", "t", "0"), P("v^2+t^2-1"), kBoxCone);
  CHECK(circle.empty());
}

TEST_CASE("a surface folding a line onto itself is rejected") {
  // (v, t) -> (v^2, t, 0) identifies (v, t) and (-v, t) along the whole curve t = 0.
  CHECK_THROWS_AS(self_intersections(surface("v^2", "t", "0"), P("t"), Box{Q("-1"), Q("1"), Q("-1"), Q("1")}),
                  NonZeroDimensionalError);
}

TEST_CASE("same_image decides equality exactly") {
  auto s2 = surface("v^2", "t", "0");
  auto a = std::make_shared<RealAlg>(UPoly({Rational(-2), 0, 1}), Q("1"), Q("2"));
  auto b = std::make_shared<RealAlg>(UPoly({Rational(-2), 0, 1}), Q("-2"), Q("-1"));
  auto fa = make_fibre(a, P("t-1"));
  auto fb = make_fibre(b, P("t-1"));
  AlgPoint p(a, fa, FibreRoot{true, 1, 1});
  AlgPoint q(b, fb, FibreRoot{true, 1, 1});
  CHECK(same_image(s2, p, q));
  auto other = std::make_shared<RealAlg>(UPoly({Rational(-3), 0, 1}), Q("1"), Q("2"));
  AlgPoint r(other, make_fibre(other, P("t-1")), FibreRoot{true, 1, 1});
  CHECK_FALSE(same_image(s2, p, r));
  RealAlg x = coordinate_value(s2.coords[0], p);
  CHECK(x.is_rational());
  CHECK(x.value() == 2);
}

TEST_CASE("lift maps the vertical line join to an exact point") {
  auto s2 = fixture("oblique_cylinder_s2.json");
  auto pc = plane_curve(implicitize(fixture("circular_cone_s1.json")).F, s2);
  auto plane = build_graph(pc.G_full, Box{Q("-3"), Q("3"), Q("-3"), Q("3")});
  auto res = space_topology(plane, s2);
  bool found = false;
  for (const auto& v : res.graph.vertices) {
    if (is_exact_point(v.x, 0, 1, 1)) {
      found = true;
      CHECK(space_degree(res.graph, static_cast<int>(&v - res.graph.vertices.data())) == 4);
    }
  }
  CHECK(found);
  CHECK(find_crossing(res.graph, true) == std::pair{-1, -1});
}

TEST_CASE("space graph on the cubic surface") {
  auto s2 = fixture("cubic_s2.json");
  auto plane = build_graph(cubic_curve(), kBoxCubic);
  auto res = space_topology(plane, s2);
  CHECK(res.character.irregular.points.empty());
  REQUIRE(res.character.self_intersections.size() == 2);

  int fused = 0;
  for (std::size_t i = 0; i < res.graph.vertices.size(); ++i) {
    const auto& v = res.graph.vertices[i];
    int sum = 0;
    for (int p : v.preimages) {
      if (p >= 0) sum += plane_degree(res.refined, p);
    }
    if (v.subdivision) sum = 2;
    CHECK(space_degree(res.graph, static_cast<int>(i)) == sum);
    if (v.preimages.size() == 2) {
      ++fused;
      CHECK(v.self_intersection);
      CHECK(space_degree(res.graph, static_cast<int>(i)) == 4);
    }
  }
  CHECK(fused == 2);
  CHECK(find_crossing(res.graph, true) == std::pair{-1, -1});
}

TEST_CASE("cone curve collapses the special component") {
  auto s2 = fixture("cone_s2.json");
  auto plane = build_graph(cone_curve(), kBoxCone);
  auto res = space_topology(plane, s2);
  int apex = -1;
  for (std::size_t i = 0; i < res.graph.vertices.size(); ++i) {
    if (is_exact_point(res.graph.vertices[i].x, 0, 0, 0)) {
      CHECK(apex < 0);
      apex = static_cast<int>(i);
    }
  }
  REQUIRE(apex >= 0);
  CHECK(res.graph.vertices[static_cast<std::size_t>(apex)].injected);
  for (const auto& e : res.graph.edges) CHECK(e.from != e.to);
  CHECK(find_crossing(res.graph, true) == std::pair{-1, -1});
}

TEST_CASE("space tangent lies in the first surface's tangent plane") {
  auto s1F = implicitize(fixture("paraboloid_s1.json")).F;
  auto s2 = fixture("cubic_s2.json");
  Poly G = cubic_curve();
  std::array<Poly, 3> dF{s1F.derivative("x"), s1F.derivative("y"), s1F.derivative("z")};
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-400, 3600);
  int checked = 0;
  while (checked < 100) {
    Rational v(pick(rng), 100);
    v.canonicalize();
    auto alpha = std::make_shared<RealAlg>(RealAlg::rational(v));
    for (auto& p : fibre_points(alpha, G, kBoxCubic.C, kBoxCubic.D)) {
      if (checked >= 100) break;
      p.refine(Rational(1, Integer(1) << 60));
      double vv = p.v_approx(), tt = p.t_approx();
      double Gv = eval(G.derivative("v"), vv, tt), Gt = eval(G.derivative("t"), vv, tt);
      std::array<double, 3> x{}, w{};
      for (std::size_t i = 0; i < 3; ++i) {
        x[i] = eval(s2.coords[i], vv, tt);
        w[i] = eval(s2.coords[i].derivative("v"), vv, tt) * Gt - eval(s2.coords[i].derivative("t"), vv, tt) * Gv;
      }
      double dot = 0, scale = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        std::map<std::string, double> at{{"x", x[0]}, {"y", x[1]}, {"z", x[2]}};
        double g = 0;
        for (const auto& [e, c] : dF[i].terms()) {
          double m = c.get_d();
          for (std::size_t k = 0; k < dF[i].vars().size(); ++k) m *= std::pow(at[dF[i].vars()[k]], e[k]);
          g += m;
        }
        dot += g * w[i];
        scale += std::abs(g * w[i]);
      }
      CHECK(std::abs(dot) <= 1e-9 * std::max(1.0, scale));
      ++checked;
    }
  }
}
