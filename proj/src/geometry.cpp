#include "ssi/geometry.hpp"

namespace ssi {
namespace {

template <class T>
std::array<T, 3> sub(const std::array<T, 3>& a, const std::array<T, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class T>
std::array<T, 3> cross(const std::array<T, 3>& a, const std::array<T, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
T dot(const std::array<T, 3>& a, const std::array<T, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

int orient2d(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by, const Rational& cx,
             const Rational& cy) {
  return sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

bool between(const Rational& a, const Rational& b, const Rational& x) { return std::min(a, b) <= x && x <= std::max(a, b); }

bool bbox_disjoint(const Box3& a, const Box3& b, const Box3& c, const Box3& d) {
  for (std::size_t k = 0; k < 3; ++k) {
    Interval s = hull(a[k], b[k]);
    Interval t = hull(c[k], d[k]);
    if (!s.overlaps(t)) return true;
  }
  return false;
}

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign(dot(sub(b, a), cross(sub(c, a), sub(d, a))));
}

Interval orient3d(const Box3& a, const Box3& b, const Box3& c, const Box3& d) {
  return dot(sub(b, a), cross(sub(c, a), sub(d, a)));
}

bool segments_intersect(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::max(a[k], b[k]) < std::min(c[k], d[k]) || std::max(c[k], d[k]) < std::min(a[k], b[k])) return false;
  }
  if (orient3d(a, b, c, d) != 0) return false;
  // Coplanar: project along a coordinate where the plane normal is nonzero.
  Point3 n = cross(sub(b, a), sub(c, a));
  if (n == Point3{0, 0, 0}) n = cross(sub(b, a), sub(d, a));
  if (n == Point3{0, 0, 0}) n = cross(sub(d, c), sub(a, c));
  if (n == Point3{0, 0, 0}) {
    // All four points collinear (or segments degenerate): overlap of projections on one axis.
    std::size_t k = 0;
    Point3 dir = a != b ? sub(b, a) : sub(d, c);
    for (std::size_t i = 0; i < 3; ++i) {
      if (abs(dir[i]) > abs(dir[k])) k = i;
    }
    if (dir[k] == 0) return a == c;
    return std::max(std::min(a[k], b[k]), std::min(c[k], d[k])) <= std::min(std::max(a[k], b[k]), std::max(c[k], d[k]));
  }
  std::size_t drop = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (abs(n[i]) > abs(n[drop])) drop = i;
  }
  std::size_t i = drop == 0 ? 1 : 0;
  std::size_t j = drop == 2 ? 1 : 2;
  int o1 = orient2d(a[i], a[j], b[i], b[j], c[i], c[j]);
  int o2 = orient2d(a[i], a[j], b[i], b[j], d[i], d[j]);
  int o3 = orient2d(c[i], c[j], d[i], d[j], a[i], a[j]);
  int o4 = orient2d(c[i], c[j], d[i], d[j], b[i], b[j]);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && between(a[i], b[i], c[i]) && between(a[j], b[j], c[j])) return true;
  if (o2 == 0 && between(a[i], b[i], d[i]) && between(a[j], b[j], d[j])) return true;
  if (o3 == 0 && between(c[i], d[i], a[i]) && between(c[j], d[j], a[j])) return true;
  if (o4 == 0 && between(c[i], d[i], b[i]) && between(c[j], d[j], b[j])) return true;
  return false;
}

bool overlap_beyond_shared(const Point3& a, const Point3& b, const Point3& d) {
  Point3 u = sub(b, a), w = sub(d, a);
  return cross(u, w) == Point3{0, 0, 0} && dot(u, w) > 0;
}

Box3 to_box(const Point3& p) { return {Interval::point(p[0]), Interval::point(p[1]), Interval::point(p[2])}; }

bool is_point(const Box3& b) { return b[0].lo == b[0].hi && b[1].lo == b[1].hi && b[2].lo == b[2].hi; }

Point3 lower_corner(const Box3& b) { return {b[0].lo, b[1].lo, b[2].lo}; }

Verdict segments_intersect(const Box3& a, const Box3& b, const Box3& c, const Box3& d) {
  if (bbox_disjoint(a, b, c, d)) return Verdict::No;
  if (is_point(a) && is_point(b) && is_point(c) && is_point(d)) {
    return segments_intersect(lower_corner(a), lower_corner(b), lower_corner(c), lower_corner(d)) ? Verdict::Yes : Verdict::No;
  }
  if (orient3d(a, b, c, d).sign() != 0) return Verdict::No;
  // Possibly coplanar: decide in a projection where the normal is certainly nonzero.
  auto n = cross(sub(b, a), sub(c, a));
  std::size_t drop = 3;
  for (std::size_t k = 0; k < 3; ++k) {
    if (n[k].sign() != 0) drop = k;
  }
  if (drop == 3) return Verdict::Unknown;
  std::size_t i = drop == 0 ? 1 : 0;
  std::size_t j = drop == 2 ? 1 : 2;
  auto o2d = [&](const Box3& p, const Box3& q, const Box3& r) {
    return ((q[i] - p[i]) * (r[j] - p[j]) - (q[j] - p[j]) * (r[i] - p[i])).sign();
  };
  int o1 = o2d(a, b, c), o2 = o2d(a, b, d), o3 = o2d(c, d, a), o4 = o2d(c, d, b);
  if ((o1 != 0 && o1 == o2) || (o3 != 0 && o3 == o4)) return Verdict::No;
  if (o1 * o2 < 0 && o3 * o4 < 0) return Verdict::Yes;
  return Verdict::Unknown;
}

Verdict overlap_beyond_shared(const Box3& a, const Box3& b, const Box3& d) {
  if (is_point(a) && is_point(b) && is_point(d)) {
    return overlap_beyond_shared(lower_corner(a), lower_corner(b), lower_corner(d)) ? Verdict::Yes : Verdict::No;
  }
  auto u = sub(b, a), w = sub(d, a);
  auto c = cross(u, w);
  for (const auto& x : c) {
    if (x.sign() != 0) return Verdict::No;
  }
  if (dot(u, w).sign() < 0) return Verdict::No;
  return Verdict::Unknown;
}

}  // namespace ssi
