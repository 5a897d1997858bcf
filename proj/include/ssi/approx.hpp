#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ssi/space_topology.hpp"

namespace ssi {

using Vec3 = std::array<double, 3>;

struct PolylinePoint {
  AlgPoint param;                // plane parameter, certified on the curve
  Coord3 x;                      // image enclosure
  std::array<Rational, 3> rep;   // exact representative used for output and predicates
  int vertex = -1;               // space-graph vertex, or -1 for a sample point
};

/// Closed polylines repeat their first point at the end.
struct Polyline3D {
  std::vector<PolylinePoint> points;
  std::vector<double> estimates;  // sampled Hausdorff estimate per segment
  bool closed = false;
};

struct ApproxOptions {
  int m = 16;
  int m_cap = 256;
  int max_depth = 48;
  int max_crossing_rounds = 16;
};

struct Approximation {
  Rational epsilon;
  std::vector<Polyline3D> polylines;
  std::vector<int> slab_counts;  // N per space edge
  int segments = 0;
  int subdivisions = 0;
  int crossing_splits = 0;
  int max_m = 0;
  double max_estimate = 0;
};

/// N = max(2, floor(L / eps) + 1), the least integer above L / eps.
int slab_count(const Rational& L, const Rational& eps);

/// Largest distance from the sampler's m points to the segment [p1, p2].
double hausdorff_estimate(const Vec3& p1, const Vec3& p2, const std::function<std::vector<Vec3>(int)>& sampler, int m);

/// Distance from q to the segment [a, b].
double point_segment_distance(const Vec3& q, const Vec3& a, const Vec3& b);

/// Polyline approximation of the space graph: slab sampling of every edge, recursive midpoint
/// subdivision until each segment's estimate is below eps, and a final exact crossing pass.
Approximation approximate(TopologyGraph& g, const SpaceGraph& sg, const RationalSurface& s2, const Rational& eps,
                          const ApproxOptions& opt = {});

struct GraphShape {
  int components = 0;
  int cycle_rank = 0;
};
GraphShape shape(const SpaceGraph& sg);
GraphShape shape(const Approximation& a);

/// First pair of output segments meeting other than at a shared endpoint, by the exact
/// predicate on the representatives; {-1, -1} if none. Segments are numbered in polyline order.
std::pair<int, int> find_segment_crossing(const Approximation& a);

Vec3 to_vec(const std::array<Rational, 3>& r);

}  // namespace ssi
