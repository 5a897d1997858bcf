#include <random>

#include "doctest.h"
#include "ssi/surface.hpp"
#include "ssi/surface_io.hpp"

using namespace ssi;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

RationalSurface fixture(const std::string& name) { return load_surface(std::string(SSI_FIXTURE_DIR) + "/" + name).surface; }

const char* kTubeF =
    "-1+256*y*z^4+16*y+384*x^2*z^2*y-768*x*z*y^3-52*y^2+832*z^2*x^2+208*z^4+192*y^4*z^2+192*x*z*y+64*x*z"
    "+64*z^6+512*y^3*z^2-768*y^2*x*z-128*y^3*x^2-52*z^2-128*y*z^2-384*x^3*z+256*y^5-96*y*x^2+320*y^2*x^2"
    "-128*y^3-768*y*x*z^3-16*x^2+64*x^4+64*y^6+192*y^2*z^4-768*z^3*x+208*y^4+416*y^2*z^2";

void check_on_surface(const Poly& F, const RationalSurface& s) { CHECK(s.substitute_into(F).is_zero()); }

}  // namespace

TEST_CASE("projectability reports coordinate and parameter") {
  auto s = fixture("hyperboloid_s1.json");
  auto p = is_projectable(s);
  REQUIRE(p);
  CHECK(p->coordinate == 2);
  CHECK(p->parameter == 1);

  auto s2 = fixture("cubic_s2.json");
  auto q = is_projectable(s2);
  REQUIRE(q);
  CHECK(q->coordinate == 2);
  CHECK(q->parameter == 1);  // z depends on t alone; x = v

  auto tube = fixture("tube_s1.json");
  auto r = is_projectable(tube);
  REQUIRE(r);
  CHECK(r->coordinate == 0);

  RationalSurface sphere_like;
  sphere_like.coords = {RationalFunction(P("u*s"), Poly(1)), RationalFunction(P("u+s"), Poly(1)),
                        RationalFunction(P("u^2+s"), Poly(1))};
  CHECK_FALSE(is_projectable(sphere_like));
  CHECK_THROWS_AS(implicitize(sphere_like), NotProjectableError);
}

TEST_CASE("implicitization of the hyperboloid") {
  auto res = implicitize(fixture("hyperboloid_s1.json"));
  CHECK(equal_up_to_constant(res.F, P("-z^2+y^2-1+x^2")));
  CHECK(equal_up_to_constant(res.resultant, P("4*y^2+4*s^2*x^2+4*s^2*y^2-8*s^2-4*s^4+4*x^2-4")));
  CHECK(equal_up_to_constant(res.content, P("s^2+1")));
  CHECK(equal_up_to_constant(res.L, P("-s^2+y^2-1+x^2")));
  CHECK_FALSE(res.cylindrical);
}

TEST_CASE("implicitization of the paraboloid and a ruled cubic") {
  auto res = implicitize(fixture("paraboloid_s1.json"));
  CHECK(equal_up_to_constant(res.F, P("y^2+z^2-2*x+z")));
  auto cubic = implicitize(fixture("ruled_cubic_s1.json"));
  CHECK(equal_up_to_constant(cubic.F, P("z^2*y-2*z*x+z+y")));
}

TEST_CASE("implicitization of the tube surface") {
  auto s = fixture("tube_s1.json");
  auto res = implicitize(s);
  Poly expected = P(kTubeF);
  CHECK(expected.size() == 30);
  CHECK(expected.total_degree() == 6);
  CHECK(equal_up_to_constant(res.F, expected));
  check_on_surface(res.F, s);
}

TEST_CASE("cylindrical case") {
  auto res = implicitize(fixture("cylinder_s1.json"));
  CHECK(res.cylindrical);
  CHECK(equal_up_to_constant(res.F, P("x^2+y^2-1")));
}

TEST_CASE("implicit form vanishes on the parametrization") {
  for (const char* name : {"hyperboloid_s1.json", "paraboloid_s1.json", "circular_cone_s1.json", "cylinder_s1.json", "cubic_s2.json"}) {
    auto s = fixture(name);
    auto res = implicitize(s);
    check_on_surface(res.F, s);
  }
}

TEST_CASE("plane curves of the fixture pairs") {
  auto line_case = plane_curve(implicitize(fixture("circular_cone_s1.json")).F, fixture("oblique_cylinder_s2.json"));
  CHECK(equal_up_to_constant(line_case.G_full, P("t*(1+v^2)*(v-1)")));
  CHECK(equal_up_to_constant(line_case.V, P("(1+v^2)*(v-1)")));
  CHECK(equal_up_to_constant(line_case.G, P("t")));

  auto cone_case = plane_curve(P("y^2+z^2-2*x+z"), fixture("cone_s2.json"));
  CHECK(equal_up_to_constant(cone_case.G_full, P("t*(t*v^4+3*v^4+6*t*v^2+t+2*v^2-1)")));
  CHECK(equal_up_to_constant(cone_case.V, Poly(1)));

  auto cubic_case = plane_curve(implicitize(fixture("paraboloid_s1.json")).F, fixture("cubic_s2.json"));
  Poly sextic = P("2*v+t^4+t^3+t^2*v/2-2*t^2-t*v/2-v^2/16-t^6+t");
  CHECK(equal_up_to_constant(cubic_case.G_full, sextic));
  for (auto [v, t] : {std::pair{0, 0}, {0, 1}, {32, 0}, {32, 1}}) {
    CHECK(sextic.evaluate({{"v", Rational(v)}, {"t", Rational(t)}}) == 0);
  }
}

TEST_CASE("shared component is detected") {
  RationalSurface same = fixture("paraboloid_s1.json").with_params("v", "t");
  CHECK_THROWS_AS(plane_curve(P("y^2+z^2-2*x+z"), same), SharedComponentError);
}

TEST_CASE("two planes meet in a line") {
  auto c = plane_curve(implicitize(fixture("plane_z0_s1.json")).F, fixture("plane_x0_s2.json"));
  CHECK(equal_up_to_constant(c.G_full, P("t")));
}

TEST_CASE("ruled reparametrization") {
  auto in = load_surface(std::string(SSI_FIXTURE_DIR) + "/ruled_s1.json");
  REQUIRE(in.ruled);
  auto [s, map] = reparametrize_ruled(in.ruling);
  CHECK(map.coordinate == 2);
  CHECK(map.forward_s.numer == P("2*s"));
  CHECK(s.coords[2].numer == P("s"));
  CHECK(is_projectable(s));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int i = 0; i < 50; ++i) {
    Rational u(d(rng), 7), sv(d(rng), 5);
    u.canonicalize();
    sv.canonicalize();
    auto orig = in.surface.evaluate(u, sv);
    Rational sbar = map.forward_s.evaluate({{"u", u}, {"s", sv}});
    auto back = s.evaluate(u, sbar);
    CHECK(orig == back);
    CHECK(map.inverse_s.evaluate({{"u", u}, {"s", sbar}}) == sv);
  }
  auto res = implicitize(s);
  check_on_surface(res.F, in.surface);

  RuledSurface curve;
  curve.a0 = P("u");
  curve.b0 = P("u^2");
  curve.c0 = P("1");
  CHECK_THROWS_WITH(reparametrize_ruled(curve), "degenerate ruled surface (a curve)");
}

TEST_CASE("singular locus of a cone") {
  auto rep = singular_locus(P("x^2+y^2-z^2"), fixture("hyperboloid_s1.json"));
  CHECK(rep.status == "zero-dimensional");
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0][0] == doctest::Approx(0));
  auto smooth = singular_locus(P("x^2+y^2-1-z^2"), fixture("hyperboloid_s1.json"));
  CHECK(smooth.status == "empty");
}

TEST_CASE("surface file errors") {
  CHECK_THROWS_AS(parse_surface("{\"x\": \"u\", \"y\": \"s\"}"), Error);
  CHECK_THROWS_AS(parse_surface("{\"x\": \"u\", \"y\": \"s\", \"z\": \"w\"}"), Error);
  CHECK_THROWS_AS(parse_surface("{\"x\": {\"numer\": \"u\", \"denom\": \"0\"}, \"y\": \"s\", \"z\": \"s\"}"), Error);
  CHECK_THROWS_AS(parse_surface("not json"), Error);
}
