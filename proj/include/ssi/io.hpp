#pragma once

#include <string>

#include "json.hpp"
#include "ssi/approx.hpp"

namespace ssi {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RealAlg& a);
Json to_json(const AlgPoint& p);
Json to_json(const Coord3& c, int digits = 12);
Json to_json(const RationalSurface& s);
Json to_json(const Box& b);

/// Plane graph with everything needed to resume: box, G and the second surface.
Json plane_graph_json(const TopologyGraph& g, const RationalSurface& s2);
Json space_graph_json(const SpaceResult& r, int digits = 12);
Json curve_json(const Approximation& a, int digits = 12);

/// Rebuilds the plane graph from a plane_graph.json and checks it against the stored
/// vertices and edges. Throws Error on mismatch.
struct PlaneArtifact {
  RationalSurface s2;
  TopologyGraph graph;
};
PlaneArtifact load_plane_graph(const Json& j);

std::string plane_graph_svg(const TopologyGraph& g);
/// `v x y z` lines (shared vertices once) and one `l` record per polyline.
std::string curve_obj(const Approximation& a, int digits = 12);

Box parse_box(const Json& j);
RationalSurface parse_surface_json(const Json& j);

}  // namespace ssi
