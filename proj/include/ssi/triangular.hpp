#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ssi/alg_field.hpp"

namespace ssi {

/// Squarefree polynomial F(alpha, t) over Q(alpha).
struct Fibre {
  AlgField field;
  AlgUPoly f;
};
using FibrePtr = std::shared_ptr<Fibre>;

/// Builds the squarefree fibre of g(v, t) at v = alpha. Throws when g(alpha, t) vanishes
/// identically (a vertical component the caller should have split off).
FibrePtr make_fibre(const RealAlgPtr& alpha, const Poly& g, const std::string& v = "v", const std::string& t = "t");

/// A point (alpha, beta) of the plane: alpha a real algebraic number, beta the unique root of
/// a fibre in an isolating interval (or an exact rational). Its isolating box is
/// interval(alpha) x [c, d].
class AlgPoint {
 public:
  AlgPoint() = default;
  AlgPoint(RealAlgPtr v, FibrePtr fibre, const FibreRoot& root);
  static AlgPoint rational(const Rational& v, const Rational& t);

  const RealAlgPtr& v() const { return v_; }
  const FibrePtr& fibre() const { return fibre_; }
  bool t_exact() const { return t_exact_; }
  const Rational& t_lo() const { return c_; }
  const Rational& t_hi() const { return d_; }
  Interval t_interval() const { return {c_, d_}; }
  Interval v_interval() const { return v_->interval(); }
  bool is_rational() const { return v_->is_rational() && t_exact_; }
  /// Midpoint approximations.
  double v_approx() const { return v_->approx(); }
  double t_approx() const;

  void bisect_t();
  /// Shrinks both box sides to width <= w.
  void refine(const Rational& w);
  /// Sign of (t - r), deciding equality exactly.
  int compare_t(const Rational& r);
  /// Tries to recognise beta as a rational by an exact check on the current interval.
  bool try_rational_t();

  std::string to_string() const;

 private:
  RealAlgPtr v_;
  FibrePtr fibre_;
  bool t_exact_ = false;
  Rational c_, d_;
  int sign_c_ = 0;
};

/// Sign of P at the point, certified; P involves only v and t.
int sign_at(const Poly& p, AlgPoint& pt, const std::string& v = "v", const std::string& t = "t");
/// Interval enclosure of P over the point's current box.
Interval enclose(const Poly& p, const AlgPoint& pt, const std::string& v = "v", const std::string& t = "t");
/// Compares the t-coordinates of two points on the same column (same alpha object).
int compare_t(AlgPoint& a, AlgPoint& b);

/// Points of {g(alpha, t) = 0} with t in [lo, hi], sorted by t.
std::vector<AlgPoint> fibre_points(const RealAlgPtr& alpha, const Poly& g, const Rational& lo, const Rational& hi,
                                   const std::string& v = "v", const std::string& t = "t", bool certify = true);

/// Real solutions of the triangular system {h(v) = 0, g(v, t) = 0} in [A,B] x [C,D], sorted
/// by v then t.
std::vector<AlgPoint> isolate_triangular(const UPoly& h, const Poly& g, const Rational& A, const Rational& B,
                                         const Rational& C, const Rational& D, const std::string& v = "v",
                                         const std::string& t = "t");

}  // namespace ssi
