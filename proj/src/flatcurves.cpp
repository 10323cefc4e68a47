#include "curvespace/flatcurves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "curvespace/error.hpp"

namespace curvespace {

std::string_view to_string(CurveModel m) {
  switch (m) {
    case CurveModel::Plane: return "plane";
    case CurveModel::Torus: return "torus";
    case CurveModel::Klein: return "klein";
  }
  return "?";
}

namespace {

constexpr double kEps = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Deck transformation carrying the base cell [0,1]^2 onto cell (i, j). On
// the torus this is translation by (i, j); on the Klein bottle it is
// t^j s^i with s(x, y) = (x + 1, 1 - y) and t(x, y) = (x, y + 1).
struct Deck {
  long i = 0;
  long j = 0;
};

bool reflects(CurveModel m, const Deck& d) { return m == CurveModel::Klein && d.i % 2 != 0; }

Point apply(CurveModel m, const Deck& d, const Point& p) {
  const double y = reflects(m, d) ? 1.0 - p.y : p.y;
  return {p.x + static_cast<double>(d.i), y + static_cast<double>(d.j)};
}

Point apply_inverse(CurveModel m, const Deck& d, const Point& p) {
  const double y = p.y - static_cast<double>(d.j);
  return {p.x - static_cast<double>(d.i), reflects(m, d) ? 1.0 - y : y};
}

Point apply_linear(CurveModel m, const Deck& d, const Point& v) {
  return {v.x, reflects(m, d) ? -v.y : v.y};
}

Deck cell_of(const Point& p) {
  return {static_cast<long>(std::floor(p.x)), static_cast<long>(std::floor(p.y))};
}

bool near(const Point& a, const Point& b) {
  return std::abs(a.x - b.x) < kEps && std::abs(a.y - b.y) < kEps;
}

bool on_grid(double v) { return std::abs(v - std::round(v)) < kEps; }

Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// Vertices v_0 .. v_n in the chart, with v_n = closing(v_0).
struct Prepared {
  CurveModel model = CurveModel::Plane;
  std::vector<Point> path;
  Deck closing;
};

Prepared prepare(CurveModel model, const Polyline& poly) {
  Prepared out;
  out.model = model;
  std::vector<Point> v = poly.vertices;
  if (v.empty()) throw InvalidInput("a curve needs at least three vertices");

  if (model != CurveModel::Plane) {
    const Deck start = cell_of(v.front());
    for (Point& p : v) p = apply_inverse(model, start, p);
    for (const Point& p : v) {
      if (on_grid(p.x) || on_grid(p.y))
        throw InvalidInput("vertex lies on a fundamental-domain side; perturb and resubmit");
    }
  }

  if (v.size() > 1 && near(v.back(), v.front())) {
    v.pop_back();
  } else if (model != CurveModel::Plane && v.size() > 1) {
    const Deck end = cell_of(v.back());
    if (near(apply(model, end, v.front()), v.back())) {
      out.closing = end;
      v.pop_back();
    }
  }
  if (v.size() < 3) throw InvalidInput("a curve needs at least three vertices");

  out.path = v;
  out.path.push_back(apply(model, out.closing, v.front()));
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
    if (near(out.path[i], out.path[i + 1]))
      throw InvalidInput("zero-length edge at vertex " + std::to_string(i));
  }
  return out;
}

double exterior_angle(const Point& a, const Point& b, std::size_t vertex) {
  const double cross = a.x * b.y - a.y * b.x;
  const double dot = a.x * b.x + a.y * b.y;
  const double scale = std::hypot(a.x, a.y) * std::hypot(b.x, b.y);
  if (std::abs(cross) <= kEps * scale && dot < 0.0)
    throw InvalidInput("curve reverses direction at vertex " + std::to_string(vertex));
  return std::atan2(cross, dot);
}

// Total turning of the tangent from the first edge to its image under the
// closing deck transformation, in radians.
double total_turning(const Prepared& p) {
  const std::size_t n = p.path.size() - 1;
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    total += exterior_angle(sub(p.path[i], p.path[i - 1]), sub(p.path[i + 1], p.path[i]), i);
  const Point first = apply_linear(p.model, p.closing, sub(p.path[1], p.path[0]));
  total += exterior_angle(sub(p.path[n], p.path[n - 1]), first, 0);
  return total;
}

long to_integer_turns(double radians) {
  const double turns = radians / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6)
    throw Error("internal: turning is not a whole number of turns");
  return static_cast<long>(rounded);
}

std::vector<Crossing> crossings(const Prepared& p) {
  std::vector<Crossing> out;
  for (std::size_t e = 0; e + 1 < p.path.size(); ++e) {
    const Point a = p.path[e];
    const Point b = p.path[e + 1];
    std::vector<std::pair<double, Crossing>> hits;
    auto scan = [&](double from, double to, Crossing::Line line) {
      const long lo = static_cast<long>(std::floor(std::min(from, to)));
      const long hi = static_cast<long>(std::floor(std::max(from, to)));
      for (long k = lo + 1; k <= hi; ++k) {
        const double t = (static_cast<double>(k) - from) / (to - from);
        hits.push_back({t, Crossing{e, line, to > from ? 1 : -1}});
      }
    };
    scan(a.x, b.x, Crossing::Line::Vertical);
    scan(a.y, b.y, Crossing::Line::Horizontal);
    std::sort(hits.begin(), hits.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t i = 1; i < hits.size(); ++i) {
      if (std::abs(hits[i].first - hits[i - 1].first) < kEps)
        throw InvalidInput("edge " + std::to_string(e) +
                           " passes through a corner of the fundamental domain");
    }
    for (const auto& h : hits) out.push_back(h.second);
  }
  return out;
}

}  // namespace

long turning_number(const Polyline& p) {
  return to_integer_turns(total_turning(prepare(CurveModel::Plane, p)));
}

std::vector<Crossing> crossing_log(const CurveOnSurface& c) {
  if (c.model == CurveModel::Plane) return {};
  return crossings(prepare(c.model, c.polyline));
}

STWord lift(const CurveOnSurface& c, const SurfaceSpec& surface) {
  const Regime r = regime(surface);
  if (c.model == CurveModel::Plane)
    return STWord::fiber_power(surface, turning_number(c.polyline));
  if (c.model == CurveModel::Torus && r != Regime::Torus)
    throw InvalidInput("torus-model curves need the torus surface orientable:1:0");
  if (c.model == CurveModel::Klein && r != Regime::Klein)
    throw InvalidInput("klein-model curves need the Klein bottle nonorientable:2:0");

  const Prepared p = prepare(c.model, c.polyline);
  const std::vector<Crossing> log = crossings(p);
  const double turning = total_turning(p);

  if (c.model == CurveModel::Torus) {
    LetterString letters;
    for (const Crossing& x : log)
      letters.push_back({x.line == Crossing::Line::Vertical ? 0 : 1, x.direction});
    return STWord(surface, std::move(letters), to_integer_turns(turning));
  }

  // Klein: crossing a vertical side applies s^(+-1) = h^(+-1); crossing a
  // horizontal side in column i applies t^(+-(-1)^i) = g^(+-(-1)^i).
  detail::KleinTriple deck;
  long column = 0;
  for (const Crossing& x : log) {
    if (x.line == Crossing::Line::Vertical) {
      deck = detail::klein_multiply(deck, {0, x.direction, 0});
      column += x.direction;
    } else {
      const long sign = column % 2 == 0 ? 1 : -1;
      deck = detail::klein_multiply(deck, {sign * x.direction, 0, 0});
    }
  }
  if (deck.k != p.closing.j || deck.l != p.closing.i)
    throw Error("internal: crossing log disagrees with the closing transformation");

  // The loop starts at direction theta0 and ends at the image direction.
  // Joining both ends to direction 0 through the fiber gives the exponent.
  long fiber = 0;
  if (deck.l % 2 == 0) {
    fiber = to_integer_turns(turning);
  } else {
    const Point e0 = sub(p.path[1], p.path[0]);
    const double theta0 = std::atan2(e0.y, e0.x);
    fiber = -to_integer_turns(2.0 * theta0 + turning);
  }
  deck.m = fiber;
  return klein_element(deck);
}

}  // namespace curvespace
