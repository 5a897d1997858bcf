#include <cmath>

#include "doctest.h"
#include "ssi/approx.hpp"
#include "ssi/surface_io.hpp"

using namespace ssi;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

RationalSurface fixture(const std::string& name) { return load_surface(std::string(SSI_FIXTURE_DIR) + "/" + name).surface; }

struct Run {
  RationalSurface s2;
  SpaceResult space;
  Approximation approx;
};

Run run(const char* s1, const char* s2, const Box& box, const Rational& eps) {
  Run r;
  r.s2 = fixture(s2);
  auto pc = plane_curve(implicitize(fixture(s1)).F, r.s2);
  auto plane = build_graph(pc.G_full, box);
  r.space = space_topology(plane, r.s2);
  r.approx = approximate(r.space.refined, r.space.graph, r.s2, eps);
  return r;
}

std::function<std::vector<Vec3>(int)> arc(double a0, double a1) {
  return [=](int m) {
    std::vector<Vec3> out;
    for (int j = 1; j <= m; ++j) {
      double a = a0 + (a1 - a0) * j / m;
      out.push_back({std::cos(a), std::sin(a), 0});
    }
    return out;
  };
}

void check_run(Run& r, double eps) {
  CHECK(r.approx.max_estimate < eps);
  for (auto& pl : r.approx.polylines) {
    for (double e : pl.estimates) CHECK(e < eps);
    for (std::size_t i = 0; i + 1 < pl.points.size(); ++i) CHECK(pl.points[i].rep != pl.points[i + 1].rep);
    for (auto& p : pl.points) CHECK(sign_at(r.space.refined.G_full, p.param) == 0);
    if (pl.points.size() > 1) {
      CHECK(pl.points.front().vertex >= 0);
      CHECK(pl.points.back().vertex >= 0);
    }
  }
  auto a = shape(r.approx), s = shape(r.space.graph);
  CHECK(a.components == s.components);
  CHECK(a.cycle_rank == s.cycle_rank);
  CHECK(find_segment_crossing(r.approx) == std::pair{-1, -1});
}

bool has_point(const Approximation& a, int x, int y, int z) {
  for (const auto& pl : a.polylines) {
    for (const auto& p : pl.points) {
      if (all_exact(p.x) && p.rep == std::array<Rational, 3>{Rational(x), Rational(y), Rational(z)}) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("slab count is the least integer above L / eps") {
  CHECK(slab_count(Q("1"), Q("1/20")) == 21);
  CHECK(slab_count(Q("0.99"), Q("1/20")) == 20);
  CHECK(slab_count(Q("1/100"), Q("1/20")) == 2);
  CHECK_THROWS(slab_count(Q("1"), Q("0")));
}

TEST_CASE("hausdorff estimate of a segment and a quarter circle") {
  Vec3 a{0, 0, 0}, b{1, 2, 3};
  auto on_segment = [&](int m) {
    std::vector<Vec3> out;
    for (int j = 1; j <= m; ++j) out.push_back({1.0 * j / m, 2.0 * j / m, 3.0 * j / m});
    return out;
  };
  CHECK(hausdorff_estimate(a, b, on_segment, 16) == doctest::Approx(0).epsilon(1e-15));
  double sag = 1 - std::cos(M_PI / 4);
  CHECK(std::abs(hausdorff_estimate({1, 0, 0}, {0, 1, 0}, arc(0, M_PI / 2), 99) - sag) < 1e-3);
}

TEST_CASE("doubling the sample count never lowers the estimate on a convex arc") {
  for (double span : {0.3, 1.0, 2.0, 3.0}) {
    Vec3 p{1, 0, 0}, q{std::cos(span), std::sin(span), 0};
    double prev = 0;
    for (int m = 3; m <= 384; m *= 2) {
      double e = hausdorff_estimate(p, q, arc(0, span), m);
      CHECK(e >= prev - 1e-15);
      prev = e;
    }
  }
}

TEST_CASE("two planes give a two-point polyline") {
  for (const char* eps : {"1/20", "1/1000", "3"}) {
    auto r = run("plane_z0_s1.json", "plane_x0_s2.json", Box{Q("-1"), Q("1"), Q("-1"), Q("1")}, Q(eps));
    REQUIRE(r.approx.polylines.size() == 1);
    const auto& pl = r.approx.polylines[0];
    REQUIRE(pl.points.size() == 2);
    CHECK(pl.estimates[0] < 1e-12);
    check_run(r, Q(eps).get_d());
  }
}

TEST_CASE("approximation of the circle and line") {
  Box box{Q("-3"), Q("3"), Q("-3"), Q("3")};
  auto r = run("circular_cone_s1.json", "oblique_cylinder_s2.json", box, Q("1/20"));
  check_run(r, 0.05);
  CHECK(has_point(r.approx, 0, 1, 1));
  auto half = run("circular_cone_s1.json", "oblique_cylinder_s2.json", box, Q("1/40"));
  check_run(half, 0.025);
  CHECK(shape(half.approx).components == shape(r.approx).components);
  CHECK(shape(half.approx).cycle_rank == shape(r.approx).cycle_rank);
}

TEST_CASE("approximation keeps the fused self-intersection points") {
  Box box{Q("-4"), Q("36"), Q("-2"), Q("5/2")};
  auto r = run("paraboloid_s1.json", "cubic_s2.json", box, Q("1/20"));
  check_run(r, 0.05);
  CHECK(has_point(r.approx, 0, 0, 0));
  CHECK(has_point(r.approx, 32, -8, 0));
  auto half = run("paraboloid_s1.json", "cubic_s2.json", box, Q("1/40"));
  check_run(half, 0.025);
  CHECK(shape(half.approx).components == shape(r.approx).components);
  CHECK(shape(half.approx).cycle_rank == shape(r.approx).cycle_rank);
}
