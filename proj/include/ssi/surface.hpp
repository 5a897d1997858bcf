#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ssi/algebra.hpp"

namespace ssi {

/// (x, y, z) = (X(p0, p1), Y(p0, p1), Z(p0, p1)) with reduced rational coordinates.
struct RationalSurface {
  std::array<std::string, 2> params{"u", "s"};
  std::array<RationalFunction, 3> coords;

  /// Same surface with parameters renamed to (a, b).
  RationalSurface with_params(const std::string& a, const std::string& b) const;
  /// Coordinates at a parameter point; throws at a pole.
  std::array<Rational, 3> evaluate(const Rational& p0, const Rational& p1) const;
  /// F(S) with every coordinate substituted, combined over the lcm of the term denominators.
  Poly substitute_into(const Poly& F) const;
};

/// Ruled surface x = (a0 + a1 s)/d1, y = (b0 + b1 s)/d2, z = (c0 + c1 s)/d3, coefficients in u.
struct RuledSurface {
  std::array<std::string, 2> params{"u", "s"};
  Poly a0, a1, b0, b1, c0, c1;
  Poly d1{Rational(1)}, d2{Rational(1)}, d3{Rational(1)};

  RationalSurface to_surface() const;
};

/// (u, s) -> (u, s') and back; rational in both directions.
struct BirationalMap {
  std::array<std::string, 2> params{"u", "s"};
  RationalFunction forward_s;  // s' as a function of (u, s)
  RationalFunction inverse_s;  // s as a function of (u, s')
  int coordinate = 2;          // coordinate that became s'
};

/// Which coordinate depends on one parameter only, and which parameter that is.
struct Projectability {
  int coordinate = 2;
  int parameter = 1;
};

/// Any coordinate free of one parameter makes the surface projectable; z is tried first,
/// then x, then y. The coordinate must depend on the other parameter or be constant, and the
/// remaining two coordinates must not both be free of the eliminated parameter.
std::optional<Projectability> is_projectable(const RationalSurface& s);

/// Ruled-surface reparametrization: the coordinate with a nonzero ruling coefficient (z preferred)
/// becomes the new second parameter.
std::pair<RationalSurface, BirationalMap> reparametrize_ruled(const RuledSurface& r);

struct Implicitization {
  Poly F;          // normalized squarefree implicit polynomial in x, y, z
  Poly resultant;  // Res over the eliminated parameter, before content removal
  Poly content;    // l(s)
  Poly L;          // primitive part
  bool cylindrical = false;
  Projectability proj;
};

/// Two successive resultants; throws NotProjectableError when no coordinate qualifies.
Implicitization implicitize(const RationalSurface& s);

struct PlaneCurve {
  Poly numerator;  // numer(F o S2)
  Poly G_full;     // squarefree part of the numerator
  Poly G;          // G_full without its v-content
  Poly V;          // v-content (vertical lines), 1 when absent
};

/// Substitutes S2 (parameters v, t) into F. Throws SharedComponentError when the result is
/// identically zero.
PlaneCurve plane_curve(const Poly& F, const RationalSurface& s2);

/// Singular locus of F = 0 (F = Fx = Fy = Fz = 0), reported for extraneous-component review.
struct SingularLocusReport {
  std::string status;  // "zero-dimensional", "positive-dimensional", "empty", "skipped"
  std::vector<std::array<double, 3>> points;  // candidate real points (interval midpoints)
  std::vector<bool> preimage_found;           // sampled preimage search result per point
};
SingularLocusReport singular_locus(const Poly& F, const RationalSurface& s1, int degree_budget = 4);

}  // namespace ssi
