#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wil {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

struct CircleItem {
  int id = 0;
  double radius = 0.0;
  double mass = 0.0;
};

struct RectItem {
  int id = 0;
  double edge_a = 0.0;
  double edge_b = 0.0;
  double mass = 0.0;

  // Radius of the circle circumscribing the rectangle.
  double envelope_radius() const;
};

// Deg0 keeps edge_a horizontal, Deg90 puts edge_a vertical.
enum class Orientation : std::uint8_t { Deg0, Deg90 };

struct RectPlacement {
  Point center;
  Orientation orientation = Orientation::Deg0;

  friend bool operator==(const RectPlacement&, const RectPlacement&) = default;
};

struct Bounds {
  double xmin, ymin, xmax, ymax;
};

// Footprint width/height of a rectangle under an orientation.
inline double footprint_width(const RectItem& item, Orientation o) {
  return o == Orientation::Deg0 ? item.edge_a : item.edge_b;
}
inline double footprint_height(const RectItem& item, Orientation o) {
  return o == Orientation::Deg0 ? item.edge_b : item.edge_a;
}

inline Bounds rect_bounds(const RectItem& item, const RectPlacement& placement) {
  const double hw = 0.5 * footprint_width(item, placement.orientation);
  const double hh = 0.5 * footprint_height(item, placement.orientation);
  return {placement.center.x - hw, placement.center.y - hh, placement.center.x + hw,
          placement.center.y + hh};
}

struct MassPoint {
  double mass = 0.0;
  Point position;
};

struct PlacedCircle {
  CircleItem item;
  Point center;
};

struct PlacedRect {
  RectItem item;
  RectPlacement placement;
};

// Absolute comparison tolerance for an instance whose largest item
// dimension (radius or edge) is `length_scale`.
double tolerance_for_scale(double length_scale);
double tolerance_for(std::span<const CircleItem> items);
double tolerance_for(std::span<const RectItem> items);

// Tangency counts as non-overlapping.
bool circles_overlap(Point p1, double r1, Point p2, double r2, double eps);

// Axis-aligned test; shared edges count as non-overlapping.
bool rects_overlap(const RectItem& item1, const RectPlacement& pl1, const RectItem& item2,
                   const RectPlacement& pl2, double eps);
inline bool bounds_overlap(const Bounds& a, const Bounds& b, double eps) {
  const bool separated = a.xmin >= b.xmax - eps || a.xmax <= b.xmin + eps ||
                         a.ymin >= b.ymax - eps || a.ymax <= b.ymin + eps;
  return !separated;
}

Point mass_center(std::span<const MassPoint> items);
double imbalance(std::span<const MassPoint> items);

// max_i (r_i + |p_i - center|)
double envelope_radius_circles(std::span<const PlacedCircle> layout, Point center);
// max over every rectangle corner of |v - center|
double envelope_radius_rects(std::span<const PlacedRect> layout, Point center);

// Distance from `center` to the farthest corner of an axis-aligned box.
inline double farthest_corner_distance(const Bounds& b, Point center) {
  const double dx = std::max(std::abs(b.xmin - center.x), std::abs(b.xmax - center.x));
  const double dy = std::max(std::abs(b.ymin - center.y), std::abs(b.ymax - center.y));
  return std::sqrt(dx * dx + dy * dy);
}

// Up to two points, in the order produced by the intersection formula.
struct TangentPoints {
  std::array<Point, 2> points{};
  int count = 0;

  const Point* begin() const { return points.data(); }
  const Point* end() const { return points.data() + count; }
  std::size_t size() const { return static_cast<std::size_t>(count); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

// Centers where a circle of radius r_i touches both circle (p, r_p) and
// circle (q, r_q) from outside. Throws on coincident p and q.
TangentPoints tangent_positions(Point p, double r_p, Point q, double r_q, double r_i,
                                double eps);

// Convenience overloads with the default instance-free tolerance.
TangentPoints tangent_positions(Point p, double r_p, Point q, double r_q, double r_i);

}  // namespace wil
