#pragma once

#include <string>

#include "ssi/surface.hpp"

namespace ssi {

/// Parsed surface input. Ruled inputs keep the coefficient form as well.
struct SurfaceInput {
  RationalSurface surface;
  bool ruled = false;
  RuledSurface ruling;
};

/// JSON text: {"params": [p0, p1], "x": {"numer": ..., "denom": ...}, "y": ..., "z": ...}.
/// A coordinate may also be a bare polynomial string. With "kind": "ruled" the fields
/// a0 a1 b0 b1 c0 c1 d1 d2 d3 are read instead.
SurfaceInput parse_surface(const std::string& text);
SurfaceInput load_surface(const std::string& path);

}  // namespace ssi
