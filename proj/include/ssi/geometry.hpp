#pragma once

#include <array>

#include "ssi/interval.hpp"

namespace ssi {

using Point3 = std::array<Rational, 3>;
using Box3 = std::array<Interval, 3>;

enum class Verdict { No, Yes, Unknown };

/// Sign of det[b-a, c-a, d-a].
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
Interval orient3d(const Box3& a, const Box3& b, const Box3& c, const Box3& d);

/// Closed segments ab and cd share a point.
bool segments_intersect(const Point3& a, const Point3& b, const Point3& c, const Point3& d);
/// Segments ab and ad (common endpoint a) share a point other than a.
bool overlap_beyond_shared(const Point3& a, const Point3& b, const Point3& d);

/// Interval-certified versions. Degenerate boxes fall back to the exact predicates.
Verdict segments_intersect(const Box3& a, const Box3& b, const Box3& c, const Box3& d);
Verdict overlap_beyond_shared(const Box3& a, const Box3& b, const Box3& d);

Box3 to_box(const Point3& p);
bool is_point(const Box3& b);
Point3 lower_corner(const Box3& b);

}  // namespace ssi
