#pragma once

#include <string>
#include <vector>

#include "ssi/plane_topology.hpp"

namespace oracle {

struct BatteryCase {
  const char* name;
  const char* G;
  const char* A;
  const char* B;
  const char* C;
  const char* D;
  int disk_cells;  // contraction radius around singular points
  int isolated;    // expected isolated points (invisible to the grid)
};

// Plane curves of total degree <= 6 with known shapes.
const std::vector<BatteryCase>& plane_battery();

struct BatteryCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Compares build_graph against marching squares on an n x n grid: component count, cycle
// rank, branch degree at every singular and critical vertex, and planarity of the
// straight-line drawing.
BatteryCheck check_against_marching(const BatteryCase& c, int n = 512);

}  // namespace oracle
