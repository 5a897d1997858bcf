#pragma once

#include <array>
#include <vector>

#include "ssi/geometry.hpp"
#include "ssi/plane_topology.hpp"
#include "ssi/surface.hpp"

namespace ssi {

/// Raised when the self-intersection system has a positive-dimensional solution set.
struct NonZeroDimensionalError : CertificationError {
  using CertificationError::CertificationError;
};

/// Cross-product numerators of dS/dv x dS/dt with the coordinate denominators cleared.
std::array<Poly, 3> tangent_cross(const RationalSurface& s2);

struct IrregularResult {
  Poly special;  // factor of G along which S2 is singular; 1 when absent
  std::vector<AlgPoint> points;
};

/// Solutions of {dS/dv x dS/dt = 0, G = 0} in the box. A common factor of G and all three
/// cross-product numerators is split off as a special component.
IrregularResult irregular_parameters(const RationalSurface& s2, const Poly& G, const Box& box);

/// One space coordinate: exact, or an enclosing interval.
struct Coord {
  bool exact = false;
  Rational lo, hi;
  Interval interval() const { return {lo, hi}; }
};
using Coord3 = std::array<Coord, 3>;

Box3 to_box(const Coord3& c);
bool all_exact(const Coord3& c);

struct SelfIntersection {
  std::vector<AlgPoint> params;
  Coord3 point;
};

/// Parameter groups in the box sharing one image point. G must not contain a special
/// component (a factor mapped to a point).
std::vector<SelfIntersection> self_intersections(const RationalSurface& s2, const Poly& G, const Box& box);

/// S2 at a curve point: exact when recognised as rational (skipped unless `recognise`), else an
/// enclosure of width at most 2^-bits. Throws "parameter pole on intersection curve".
Coord3 lift_point(const RationalSurface& s2, AlgPoint& p, unsigned bits = 64, bool recognise = true);

/// Image coordinate as a real algebraic number (root of a resultant polynomial).
RealAlg coordinate_value(const RationalFunction& x, AlgPoint& p);

/// Decides S2(p) == S2(q) exactly.
bool same_image(const RationalSurface& s2, AlgPoint& p, AlgPoint& q);

struct SpaceVertex {
  Coord3 x;
  std::vector<int> preimages;  // plane vertex ids; -1 for subdivision vertices
  std::vector<AlgPoint> params;
  bool singular = false;
  bool cusp = false;
  bool self_intersection = false;
  bool injected = false;
  bool boundary = false;
  bool subdivision = false;
};

/// An edge follows one branch of the plane curve between two parameter points. Non-vertical
/// edges lie in the slab of sample column `column` on branch `branch`; vertical edges lie on
/// the vertical line of column `column`.
struct SpaceEdge {
  int from = 0;
  int to = 0;
  AlgPoint p_from, p_to;
  bool vertical = false;
  int column = 0;
  int branch = 0;
};

struct SpaceGraph {
  std::vector<SpaceVertex> vertices;
  std::vector<SpaceEdge> edges;
  int subdivisions = 0;
};

/// Maps the refined plane graph through S2, fusing self-intersection groups and vertices with
/// equal exact images. Edges on the special component collapse and are dropped.
SpaceGraph lift(TopologyGraph& g, const RationalSurface& s2, const std::vector<SelfIntersection>& groups,
                const Poly& special);

/// Subdivides edges until no two straight edges meet except at a shared endpoint.
void resolve_crossings(SpaceGraph& sg, TopologyGraph& g, const RationalSurface& s2, int max_rounds = 64);

/// Index pair of the first two edges that meet improperly, or {-1, -1}. Undecided pairs count
/// as meeting when `strict` is set.
std::pair<int, int> find_crossing(const SpaceGraph& sg, bool strict);

/// Splits edge e at an interior parameter point on its branch; returns the new vertex.
int split_edge(SpaceGraph& sg, int e, TopologyGraph& g, const RationalSurface& s2);

/// Point of edge e's branch at the rational v (non-vertical edges) or t (vertical edges).
/// Without `certify`, rational t-values are not recognised (cheaper sampling).
AlgPoint branch_point(const SpaceEdge& e, const Rational& at, TopologyGraph& g, bool certify = true);

/// Tangent w = S_v G_t - S_t G_v numerators at a point; all zero at a cusp of the space curve.
std::array<int, 3> tangent_signs(const RationalSurface& s2, const Poly& G, AlgPoint& p);

struct Character {
  IrregularResult irregular;
  std::vector<SelfIntersection> self_intersections;
};

/// Throws CertificationError when a coordinate denominator of S2 vanishes on the curve in the box.
void check_no_poles(const RationalSurface& s2, const Poly& G, const Box& box);

/// Full space stage: character points, refinement, lift and crossing resolution.
struct SpaceResult {
  Character character;
  TopologyGraph refined;
  SpaceGraph graph;
};
SpaceResult space_topology(const TopologyGraph& plane, const RationalSurface& s2);

}  // namespace ssi
