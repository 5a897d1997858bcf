#pragma once

#include <functional>
#include <vector>

namespace oracle {

using Field = std::function<double(double, double)>;

// Neighbourhood that is contracted to a single node (a known singular point).
struct Disk {
  double x = 0, y = 0;
  int radius_cells = 4;
};

struct MarchingResult {
  int components = 0;
  int cycle_rank = 0;
  std::vector<int> disk_degrees;  // branches leaving each disk
};

// Marching squares on an n x n grid over [x0,x1] x [y0,y1]. Grid nodes are offset by a
// fraction of a cell so that axis-aligned components never lie on grid lines. Saddle cells
// are resolved by the centre value.
MarchingResult marching_squares(const Field& f, double x0, double x1, double y0, double y1, int n,
                                const std::vector<Disk>& disks);

// Sign changes of f along the boundary of the rectangle [x-rx, x+rx] x [y-ry, y+ry].
int local_degree(const Field& f, double x, double y, double rx, double ry, int samples_per_side = 512);

}  // namespace oracle
