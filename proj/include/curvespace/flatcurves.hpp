#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "curvespace/stbundle.hpp"

namespace curvespace {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A closed polygonal curve. The closing edge runs from the last vertex back
/// to the first; a trailing copy of the first vertex is dropped.
struct Polyline {
  std::vector<Point> vertices;
};

enum class CurveModel : std::uint8_t { Plane, Torus, Klein };

std::string_view to_string(CurveModel m);

/// A curve drawn in the universal-cover chart of a flat model. Torus and
/// Klein cells are unit squares [i, i+1] x [j, j+1]; the Klein bottle glues
/// (0, y) to (1, 1 - y) and (x, 0) to (x, 1).
///
/// For torus and Klein curves the last vertex may be the image of the first
/// under a deck transformation; the curve then closes up on the surface
/// through that transformation instead of through a closing edge.
struct CurveOnSurface {
  CurveModel model = CurveModel::Plane;
  Polyline polyline;
};

/// Crossing of a cell boundary: which edge (0-based, along the curve), which
/// kind of grid line, and the direction (+1 = towards increasing coordinate).
struct Crossing {
  enum class Line : std::uint8_t { Vertical, Horizontal };
  std::size_t edge = 0;
  Line line = Line::Vertical;
  int direction = 1;
};

/// Sum of signed exterior angles over 2 pi. Throws InvalidInput on a zero
/// edge, a reversal (exterior angle of +-pi) or fewer than three vertices.
long turning_number(const Polyline& p);

/// Cell-boundary crossings after moving the first vertex into the base cell.
std::vector<Crossing> crossing_log(const CurveOnSurface& c);

/// The lift of the curve to the tangent bundle of `surface`. Plane curves
/// sit in an embedded disk and lift to f^turning_number.
STWord lift(const CurveOnSurface& c, const SurfaceSpec& surface);

}  // namespace curvespace
