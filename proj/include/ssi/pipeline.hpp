#pragma once

#include <ostream>
#include <set>
#include <string>

#include "ssi/io.hpp"
#include "ssi/surface_io.hpp"

namespace ssi {

enum class Stage { Implicitize = 1, PlaneTopology = 2, SpaceTopology = 3, Approximate = 4 };
Stage parse_stage(const std::string& name);

struct JobConfig {
  std::string s1, s2;
  Box box{Rational(-1), Rational(1), Rational(-1), Rational(1)};
  Rational epsilon{1, 20};
  std::string out = "out";
  Stage stage = Stage::Approximate;
  std::set<std::string> formats{"json", "svg", "obj"};
  std::string resume;  // plane_graph.json to continue from
  bool timing = false;
  int digits = 12;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int not_projectable = 2;
constexpr int shared_component = 3;
constexpr int certification = 4;
}  // namespace exit_code

/// Runs the stages up to cfg.stage and writes the artifacts into cfg.out. Diagnostics go to
/// `err`. Returns one of the exit codes above.
int run(const JobConfig& cfg, std::ostream& err);

/// The first surface in implicitizable form: ruled inputs are reparametrized first.
RationalSurface prepare_s1(const SurfaceInput& in);

}  // namespace ssi
