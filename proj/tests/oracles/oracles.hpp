#pragma once

#include <vector>

#include "ssi/upoly.hpp"

namespace oracle {

using ssi::Rational;
using ssi::UPoly;

// Determinant of the Sylvester matrix of a and b by Gaussian elimination over Q.
Rational sylvester_resultant(const UPoly& a, const UPoly& b);

// Number of distinct real roots of p in the half-open interval (lo, hi], by Sturm's theorem.
int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi);

}  // namespace oracle
