#include "ssi/surface_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ssi {
namespace {

using nlohmann::json;

Poly poly_field(const json& j, const std::string& key, const char* fallback) {
  if (!j.contains(key)) {
    if (fallback) return Poly::parse(fallback);
    throw Error("surface file: missing field '" + key + "'");
  }
  if (!j[key].is_string()) throw Error("surface file: field '" + key + "' must be a string");
  return Poly::parse(j[key].get<std::string>());
}

RationalFunction coordinate(const json& j, const std::string& key) {
  if (!j.contains(key)) throw Error("surface file: missing coordinate '" + key + "'");
  const json& c = j[key];
  if (c.is_string()) return RationalFunction(Poly::parse(c.get<std::string>()), Poly(1)).reduced();
  if (!c.is_object()) throw Error("surface file: coordinate '" + key + "' must be a string or {numer, denom}");
  Poly n = poly_field(c, "numer", nullptr);
  Poly d = poly_field(c, "denom", "1");
  if (d.is_zero()) throw Error("surface file: coordinate '" + key + "' has a zero denominator");
  return RationalFunction(n, d).reduced();
}

void check_vars(const Poly& p, const std::array<std::string, 2>& params) {
  for (const auto& v : p.vars()) {
    if (v != params[0] && v != params[1]) throw Error("surface file: undeclared variable '" + v + "'");
  }
}

}  // namespace

SurfaceInput parse_surface(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("surface file: ") + e.what());
  }
  SurfaceInput in;
  std::array<std::string, 2> params{"u", "s"};
  if (j.contains("params")) {
    const auto& p = j["params"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw Error("surface file: 'params' must be two names");
    }
    params = {p[0].get<std::string>(), p[1].get<std::string>()};
    if (params[0] == params[1]) throw Error("surface file: parameter names must differ");
  }
  if (j.value("kind", std::string("rational")) == "ruled") {
    RuledSurface& r = in.ruling;
    r.params = params;
    r.a0 = poly_field(j, "a0", "0");
    r.a1 = poly_field(j, "a1", "0");
    r.b0 = poly_field(j, "b0", "0");
    r.b1 = poly_field(j, "b1", "0");
    r.c0 = poly_field(j, "c0", "0");
    r.c1 = poly_field(j, "c1", "0");
    r.d1 = poly_field(j, "d1", "1");
    r.d2 = poly_field(j, "d2", "1");
    r.d3 = poly_field(j, "d3", "1");
    for (const Poly* p : {&r.a0, &r.a1, &r.b0, &r.b1, &r.c0, &r.c1, &r.d1, &r.d2, &r.d3}) {
      if (p->has_var(params[1])) throw Error("surface file: ruled coefficients must not contain '" + params[1] + "'");
      check_vars(*p, params);
    }
    for (const Poly* p : {&r.d1, &r.d2, &r.d3}) {
      if (p->is_zero()) throw Error("surface file: zero denominator");
    }
    in.ruled = true;
    in.surface = r.to_surface();
    return in;
  }
  in.surface.params = params;
  in.surface.coords = {coordinate(j, "x"), coordinate(j, "y"), coordinate(j, "z")};
  for (const auto& c : in.surface.coords) {
    check_vars(c.numer, params);
    check_vars(c.denom, params);
  }
  return in;
}

SurfaceInput load_surface(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open surface file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_surface(ss.str());
}

}  // namespace ssi
