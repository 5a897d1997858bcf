#pragma once

#include <string>
#include <vector>

#include "ssi/triangular.hpp"

namespace ssi {

/// Closed parameter box [A,B] x [C,D] in the (v, t) plane.
struct Box {
  Rational A, B, C, D;
};

enum class VertexKind { Regular, Boundary, Critical, Singular, Injected };
const char* to_string(VertexKind k);

/// A vertex of the plane graph. Vertices on critical columns own a segregating box
/// [a,b] x [c,d]; vertices on sample columns have a = b = v.
struct PlaneVertex {
  int column = 0;
  int row = 0;
  AlgPoint point;
  VertexKind kind = VertexKind::Regular;
  bool boundary = false;
  bool on_vertical_line = false;
  bool character = false;
  int left = 0;
  int right = 0;
  Rational a, b, c, d;
};

struct PlaneEdge {
  int from = 0;
  int to = 0;
  bool vertical = false;
};

struct PlaneColumn {
  RealAlgPtr alpha;
  bool sample = false;
  bool vertical_line = false;
  bool injected = false;
  Rational a, b;
  std::vector<int> vertices;  // bottom to top
};

struct TopologyGraph {
  Box box;
  Poly G_full;  // squarefree curve
  Poly G;       // part without v-content
  Poly V;       // v-content
  UPoly d;      // critical polynomial
  std::vector<PlaneColumn> columns;
  std::vector<PlaneVertex> vertices;
  std::vector<PlaneEdge> edges;
};

/// Squarefree part of (v-A)(v-B) G(v,C) G(v,D) Res_t(G, G_t) V(v). Vanishing factors
/// G(v,C) or G(v,D) (a horizontal line on the box edge) are left out.
UPoly critical_polynomial(const Poly& G, const Poly& V, const Box& box);

/// Topology graph of G_full = 0 in the box. Roots of the `extra` polynomials become
/// additional columns.
TopologyGraph build_graph(const Poly& G_full, const Box& box, const std::vector<UPoly>& extra = {});

/// Rebuilds the graph with columns through the given points and marks them as character
/// vertices. The points must lie on the curve inside the box. Applying it twice with the
/// same points gives the same graph.
TopologyGraph refine_graph(const TopologyGraph& g, std::vector<AlgPoint> points);

/// Index of the vertex at the given point, or -1.
int find_vertex(TopologyGraph& g, AlgPoint& p);

/// Recertifies the segregating box of vertex i: alpha is the only root of d in [a,b], the
/// triangular solve in the box returns only the owner, and t = c, t = d miss the curve over
/// [a,b] (edges on the domain boundary excepted).
bool verify_segregating_box(TopologyGraph& g, int i);

/// Throws CertificationError when an internal invariant fails: edge conservation per slab,
/// branch counts matching edges, vertical edges joining neighbours on one column.
void check_graph(const TopologyGraph& g);

}  // namespace ssi
