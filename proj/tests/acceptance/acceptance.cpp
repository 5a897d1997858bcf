// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "battery.hpp"
#include "oracles.hpp"
#include "ssi/algebra.hpp"
#include "ssi/approx.hpp"
#include "ssi/pipeline.hpp"
#include "ssi/surface_io.hpp"
#include "ssi/upoly.hpp"

using namespace ssi;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kImplicitSeconds = 5;
constexpr double kPlaneCurveSeconds = 5;
constexpr double kCharacterSeconds = 30;
constexpr double kBatterySeconds = 60;
constexpr double kPropertySeconds = 60;
constexpr double kApproxSeconds = 60;
constexpr double kCrossingSeconds = 30;
constexpr int kGrid = 512;
constexpr int kPropertyCases = 100;
const Rational kParamWidth(1, 1000000);

using Failures = std::vector<std::string>;
using Clock = std::chrono::steady_clock;

Poly P(const char* s) { return Poly::parse(s); }
Rational Q(const char* s) { return parse_rational(s); }

std::string fixture_path(const std::string& name) { return std::string(SSI_FIXTURE_DIR) + "/" + name; }
RationalSurface fixture(const std::string& name) { return load_surface(fixture_path(name)).surface; }

const Box kBoxLine{Q("-3"), Q("3"), Q("-3"), Q("3")};
const Box kBoxCubic{Q("-4"), Q("36"), Q("-2"), Q("5/2")};
const Box kBoxCone{Q("-2"), Q("2"), Q("-2"), Q("2")};

const char* kTubeF =
    "-1+256*y*z^4+16*y+384*x^2*z^2*y-768*x*z*y^3-52*y^2+832*z^2*x^2+208*z^4+192*y^4*z^2+192*x*z*y+64*x*z"
    "+64*z^6+512*y^3*z^2-768*y^2*x*z-128*y^3*x^2-52*z^2-128*y*z^2-384*x^3*z+256*y^5-96*y*x^2+320*y^2*x^2"
    "-128*y^3-768*y*x*z^3-16*x^2+64*x^4+64*y^6+192*y^2*z^4-768*z^3*x+208*y^4+416*y^2*z^2";

// Runs `body` under a time limit; `limit` applies to each timed block reported through `lap`.
struct Timer {
  double limit;
  Failures& out;
  void lap(const std::string& what, const std::function<void()>& body) {
    auto t0 = Clock::now();
    body();
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s > limit) out.push_back(fmt::format("{} took {:.2f} s (limit {} s)", what, s, limit));
  }
};

void expect(Failures& out, bool ok, const std::string& what) {
  if (!ok) out.push_back(what);
}

bool exact_point(const Coord3& c, int x, int y, int z) {
  return all_exact(c) && c[0].lo == x && c[1].lo == y && c[2].lo == z;
}

// 1
Failures implicitization() {
  Failures f;
  Timer tm{kImplicitSeconds, f};
  const std::pair<const char*, std::string> cases[] = {
      {"hyperboloid_s1.json", "x^2+y^2-z^2-1"},
      {"paraboloid_s1.json", "y^2+z^2-2*x+z"},
      {"tube_s1.json", kTubeF},
  };
  for (const auto& [name, expected] : cases) {
    tm.lap(name, [&, name = name, expected = expected] {
      auto s = fixture(name);
      auto r = implicitize(s);
      expect(f, equal_up_to_constant(r.F, P(expected.c_str())), std::string(name) + ": F = " + r.F.to_string());
      expect(f, s.substitute_into(r.F).is_zero(), std::string(name) + ": F does not vanish on the surface");
    });
  }
  return f;
}

// 2
Failures plane_curves() {
  Failures f;
  Timer tm{kPlaneCurveSeconds, f};
  struct Case {
    const char* s1;
    const char* s2;
    const char* G;
  };
  const Case cases[] = {
      {"circular_cone_s1.json", "oblique_cylinder_s2.json", "t*(1+v^2)*(v-1)"},
      {"paraboloid_s1.json", "cone_s2.json", "t*(t*v^4+3*v^4+6*t*v^2+t+2*v^2-1)"},
      {"paraboloid_s1.json", "cubic_s2.json", "2*v+t^4+t^3+t^2*v/2-2*t^2-t*v/2-v^2/16-t^6+t"},
  };
  for (const auto& c : cases) {
    tm.lap(c.s2, [&] {
      auto pc = plane_curve(implicitize(fixture(c.s1)).F, fixture(c.s2).with_params("v", "t"));
      expect(f, equal_up_to_constant(pc.G_full, P(c.G)), std::string(c.s2) + ": G = " + pc.G_full.to_string());
    });
  }
  return f;
}

SpaceResult space_of(const char* s1, const char* s2, const Box& box) {
  auto surf = fixture(s2).with_params("v", "t");
  auto pc = plane_curve(implicitize(fixture(s1)).F, surf);
  return space_topology(build_graph(pc.G_full, box), surf);
}

// 3
Failures character_points() {
  Failures f;
  Timer tm{kCharacterSeconds, f};
  tm.lap("self-intersections on the paraboloid", [&] {
    auto r = space_of("paraboloid_s1.json", "cubic_s2.json", kBoxCubic);
    auto& groups = r.character.self_intersections;
    expect(f, groups.size() == 2, fmt::format("{} self-intersection groups, expected 2", groups.size()));
    if (groups.size() != 2) return;
    const int want[2][3] = {{0, 0, 0}, {32, -8, 0}};
    for (std::size_t k = 0; k < 2; ++k) {
      auto& g = groups[k];
      expect(f, exact_point(g.point, want[k][0], want[k][1], want[k][2]),
             fmt::format("group {} point is not ({}, {}, {})", k, want[k][0], want[k][1], want[k][2]));
      std::set<std::pair<Rational, Rational>> params;
      for (auto& p : g.params) {
        if (p.is_rational()) params.insert({p.v()->value(), p.t_lo()});
      }
      Rational v(want[k][0] == 0 ? 0 : 32);
      expect(f, params == std::set<std::pair<Rational, Rational>>{{v, Rational(0)}, {v, Rational(1)}},
             fmt::format("group {} parameters differ", k));
    }
  });
  tm.lap("cone apex", [&] {
    auto r = space_of("paraboloid_s1.json", "cone_s2.json", kBoxCone);
    auto pts = r.character.irregular.points;
    expect(f, pts.size() == 2, fmt::format("{} apex parameters, expected 2", pts.size()));
    UPoly m({Rational(-1), Rational(0), Rational(3)});  // 3v^2 - 1
    int negative = 0, positive = 0;
    for (auto& p : pts) {
      p.refine(kParamWidth);
      Interval iv = p.v_interval();
      expect(f, iv.width() <= kParamWidth, "apex parameter box wider than 1e-6");
      expect(f, p.t_exact() && p.t_lo() == 0, "apex parameter t is not 0");
      expect(f, sign(m(iv.lo)) * sign(m(iv.hi)) <= 0, "apex box misses a root of 3v^2-1");
      (iv.hi < 0 ? negative : positive) += 1;
      auto s2 = fixture("cone_s2.json").with_params("v", "t");
      expect(f, exact_point(lift_point(s2, p), 0, 0, 0), "apex parameter does not lift to the origin");
    }
    expect(f, negative == 1 && positive == 1, "apex parameters are not +-sqrt(3)/3");
    int apex = 0;
    for (const auto& v : r.graph.vertices) apex += exact_point(v.x, 0, 0, 0);
    expect(f, apex == 1, fmt::format("{} space vertices at the origin, expected 1", apex));
  });
  tm.lap("circle and line", [&] {
    auto r = space_of("circular_cone_s1.json", "oblique_cylinder_s2.json", kBoxLine);
    bool singular = false;
    for (auto& v : r.refined.vertices) {
      if (v.kind == VertexKind::Singular && v.point.is_rational() && v.point.v()->value() == 1 && v.point.t_lo() == 0) {
        singular = true;
      }
    }
    expect(f, singular, "no singular plane vertex at (1, 0)");
    bool join = false;
    for (const auto& v : r.graph.vertices) join = join || exact_point(v.x, 0, 1, 1);
    expect(f, join, "no exact space vertex at (0, 1, 1)");
  });
  return f;
}

// 4
Failures battery() {
  Failures f;
  Timer tm{kBatterySeconds, f};
  const auto& cases = oracle::plane_battery();
  expect(f, cases.size() >= 10, "battery has fewer than 10 curves");
  tm.lap("battery", [&] {
    for (const auto& c : cases) {
      auto r = oracle::check_against_marching(c, kGrid);
      for (const auto& m : r.failures) f.push_back(std::string(c.name) + ": " + m);
    }
  });
  return f;
}

Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> dexp(0, max_deg);
  Poly p;
  for (int i = 0; i < terms; ++i) {
    Exponent e(vars.size());
    int total = 0;
    for (auto& x : e) {
      x = dexp(rng);
      total += x;
    }
    if (total > max_deg) continue;
    p += Poly::monomial(Rational(coeff(rng)), vars, e);
  }
  return p;
}

// 5
Failures properties() {
  Failures f;
  Timer tm{kPropertySeconds, f};
  tm.lap("property suites", [&] {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> pick(-9, 9);

    int resultants = 0;
    while (resultants < kPropertyCases) {
      Poly p = random_poly(rng, {"x", "y"}, 3, 10);
      Poly q = random_poly(rng, {"x", "y"}, 3, 10);
      if (p.degree("x") < 1 || q.degree("x") < 1) continue;
      Rational a(pick(rng), 1 + resultants % 4);
      a.canonicalize();
      UPoly pa = UPoly::from_poly(p.substitute("y", a), "x");
      UPoly qa = UPoly::from_poly(q.substitute("y", a), "x");
      if (pa.degree() != p.degree("x") || qa.degree() != q.degree("x")) continue;
      Poly r = resultant(p, q, "x");
      if (r.substitute("y", a).constant_value() != oracle::sylvester_resultant(pa, qa)) {
        f.push_back("resultant differs from Sylvester determinant for " + p.to_string() + ", " + q.to_string());
      }
      ++resultants;
    }

    // Certificate: sq has no repeated factor (gcd with all partials is constant), divides the
    // input, and every factor of the input divides sq (repeated division by gcd exhausts it).
    int squarefree = 0;
    while (squarefree < kPropertyCases) {
      Poly p = random_poly(rng, {"v", "t"}, 2, 4) + P("v");
      Poly q = random_poly(rng, {"v", "t"}, 2, 4) + P("t^2");
      if (p.is_constant() || q.is_constant()) continue;
      Poly in = p * p * q;
      Poly sq = squarefree_part(in);
      Poly g = sq;
      for (const auto& v : sq.vars()) g = gcd(g, sq.derivative(v));
      bool ok = g.is_constant();
      try {
        exact_divide(in, sq);
        Poly r = in;
        for (int k = 0; ok && !r.is_constant(); ++k) {
          Poly h = gcd(r, sq);
          ok = !h.is_constant() && k < 64;
          if (ok) r = exact_divide(r, h);
        }
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) f.push_back("squarefree certificate fails for " + in.to_string());
      ++squarefree;
    }

    for (int i = 0; i < kPropertyCases; ++i) {
      Poly c = random_poly(rng, {"s"}, 2, 3) + Poly(Rational(1 + i % 3));
      Poly p = random_poly(rng, {"x", "y", "s"}, 3, 6) + P("x");
      Poly in = c * p;
      if (in.is_zero()) continue;
      auto [cont, prim] = content_primitive(in, {"x", "y"});
      bool ok = cont * prim == in;
      auto [c2, p2] = content_primitive(prim, {"x", "y"});
      ok = ok && c2 == Poly(1) && p2 == prim;
      if (!ok) f.push_back("content-primitive roundtrip fails for " + in.to_string());
    }

    int surfaces = 0;
    while (surfaces < kPropertyCases) {
      RationalSurface s;
      s.params = {"u", "s"};
      Poly a = random_poly(rng, {"s", "u"}, 2, 4) + Poly::monomial(Rational(1 + surfaces % 3), {"s"}, {1 + surfaces % 2});
      Poly b = random_poly(rng, {"s", "u"}, 2, 4);
      if (a.degree("s") < 1 && b.degree("s") < 1) continue;  // a curve, not a surface
      Poly d = surfaces % 4 == 0 ? P("s^2+1") : Poly(1);
      s.coords = {RationalFunction(a, d), RationalFunction(b, Poly(1)), RationalFunction(P("u"), Poly(1))};
      ++surfaces;
      try {
        auto r = implicitize(s);
        if (!s.substitute_into(r.F).is_zero()) f.push_back("F o S is not zero for x = " + a.to_string() + ", y = " + b.to_string());
      } catch (const std::exception& e) {
        f.push_back("implicitization failed for x = " + a.to_string() + ", y = " + b.to_string() + ": " + e.what());
      }
    }
  });
  return f;
}

struct ApproxRun {
  std::string name;
  double eps;
  SpaceResult space;
  Approximation approx;
};
std::vector<ApproxRun> g_runs;

Failures check_approx(ApproxRun& r) {
  Failures f;
  auto tag = fmt::format("{} eps {}", r.name, r.eps);
  expect(f, r.approx.max_estimate < r.eps, tag + fmt::format(": estimate {:.3e}", r.approx.max_estimate));
  std::size_t off = 0, repeated = 0, loose = 0;
  for (auto& pl : r.approx.polylines) {
    for (double e : pl.estimates) loose += !(e < r.eps);
    for (std::size_t i = 0; i + 1 < pl.points.size(); ++i) repeated += pl.points[i].rep == pl.points[i + 1].rep;
    for (auto& p : pl.points) off += sign_at(r.space.refined.G_full, p.param) != 0;
  }
  expect(f, loose == 0, tag + fmt::format(": {} segments at or above eps", loose));
  expect(f, off == 0, tag + fmt::format(": {} polyline vertices off the curve", off));
  expect(f, repeated == 0, tag + fmt::format(": {} repeated consecutive points", repeated));
  auto a = shape(r.approx), s = shape(r.space.graph);
  expect(f, a.components == s.components && a.cycle_rank == s.cycle_rank,
         tag + fmt::format(": polylines ({}, {}) vs space graph ({}, {})", a.components, a.cycle_rank, s.components,
                           s.cycle_rank));
  return f;
}

// 6
Failures approximation() {
  Failures f;
  Timer tm{kApproxSeconds, f};
  struct Case {
    const char* name;
    const char* s1;
    const char* s2;
    Box box;
  };
  const Case cases[] = {
      {"circle and line", "circular_cone_s1.json", "oblique_cylinder_s2.json", kBoxLine},
      {"paraboloid and surface", "paraboloid_s1.json", "cubic_s2.json", kBoxCubic},
  };
  for (const auto& c : cases) {
    tm.lap(c.name, [&] {
      std::vector<GraphShape> shapes;
      for (const char* eps : {"1/20", "1/40"}) {
        ApproxRun r{c.name, Q(eps).get_d(), space_of(c.s1, c.s2, c.box), {}};
        auto s2 = fixture(c.s2).with_params("v", "t");
        r.approx = approximate(r.space.refined, r.space.graph, s2, Q(eps));
        for (auto& m : check_approx(r)) f.push_back(m);
        shapes.push_back(shape(r.approx));
        g_runs.push_back(std::move(r));
      }
      expect(f, shapes[0].components == shapes[1].components && shapes[0].cycle_rank == shapes[1].cycle_rank,
             std::string(c.name) + ": halving eps changed the shape");
    });
  }
  return f;
}

// 7
Failures crossings() {
  Failures f;
  Timer tm{kCrossingSeconds, f};
  expect(f, g_runs.size() == 4, "approximation runs missing");
  tm.lap("crossing test", [&] {
    for (const auto& r : g_runs) {
      auto c = find_segment_crossing(r.approx);
      expect(f, c == std::pair{-1, -1}, fmt::format("{} eps {}: segments {} and {} cross", r.name, r.eps, c.first, c.second));
    }
  });
  return f;
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    files[fs::relative(e.path(), dir).string()] = ss.str();
  }
  return files;
}

// 8
Failures determinism() {
  Failures f;
  fs::path root = fs::temp_directory_path() / fmt::format("ssi_acceptance_{}", ::getpid());
  std::map<std::string, std::string> trees[2];
  for (int i = 0; i < 2; ++i) {
    JobConfig cfg;
    cfg.s1 = fixture_path("circular_cone_s1.json");
    cfg.s2 = fixture_path("oblique_cylinder_s2.json");
    cfg.box = kBoxLine;
    cfg.out = (root / std::to_string(i)).string();
    std::ostringstream err;
    int code = run(cfg, err);
    expect(f, code == exit_code::ok, fmt::format("run {} exited with {}: {}", i, code, err.str()));
    trees[i] = read_tree(cfg.out);
  }
  fs::remove_all(root);
  expect(f, trees[0].size() >= 8, fmt::format("only {} artifacts written", trees[0].size()));
  for (const auto& [name, bytes] : trees[0]) {
    auto it = trees[1].find(name);
    expect(f, it != trees[1].end() && it->second == bytes, name + " differs between runs");
  }
  expect(f, trees[0].size() == trees[1].size(), "runs wrote different file sets");
  return f;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Failures()>> criteria[] = {
      {"implicitization", implicitization},
      {"plane curves", plane_curves},
      {"character points", character_points},
      {"topology vs marching squares", battery},
      {"algebra property suites", properties},
      {"epsilon approximation", approximation},
      {"crossing freedom", crossings},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const auto& [name, fn] = criteria[i];
    auto t0 = Clock::now();
    Failures f;
    try {
      f = fn();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << fmt::format("criterion {}: {} {} ({:.1f} s)", i + 1, f.empty() ? "PASS" : "FAIL", name, s) << std::endl;
    for (const auto& m : f) std::cout << "    " << m << "\n";
    failed += !f.empty();
  }
  std::cout << fmt::format("{} of {} criteria passed", std::size(criteria) - static_cast<std::size_t>(failed),
                           std::size(criteria))
            << std::endl;
  return failed == 0 ? 0 : 1;
}
