#include "wil/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace wil {

double RectItem::envelope_radius() const { return 0.5 * std::sqrt(edge_a * edge_a + edge_b * edge_b); }

double tolerance_for_scale(double length_scale) { return 1e-9 * std::max(1.0, length_scale); }

double tolerance_for(std::span<const CircleItem> items) {
  double scale = 0.0;
  for (const auto& it : items) scale = std::max(scale, it.radius);
  return tolerance_for_scale(scale);
}

double tolerance_for(std::span<const RectItem> items) {
  double scale = 0.0;
  for (const auto& it : items) scale = std::max({scale, it.edge_a, it.edge_b});
  return tolerance_for_scale(scale);
}

bool circles_overlap(Point p1, double r1, Point p2, double r2, double eps) {
  return distance(p1, p2) < r1 + r2 - eps;
}

bool rects_overlap(const RectItem& item1, const RectPlacement& pl1, const RectItem& item2,
                   const RectPlacement& pl2, double eps) {
  return bounds_overlap(rect_bounds(item1, pl1), rect_bounds(item2, pl2), eps);
}

namespace {

struct Moments {
  double mass = 0.0;
  double mx = 0.0;
  double my = 0.0;
};

Moments moments(std::span<const MassPoint> items) {
  if (items.empty()) throw Error("empty layout");
  Moments m;
  for (const auto& it : items) {
    m.mass += it.mass;
    m.mx += it.mass * it.position.x;
    m.my += it.mass * it.position.y;
  }
  return m;
}

}  // namespace

Point mass_center(std::span<const MassPoint> items) {
  const Moments m = moments(items);
  return {m.mx / m.mass, m.my / m.mass};
}

double imbalance(std::span<const MassPoint> items) {
  const Moments m = moments(items);
  return std::hypot(m.mx, m.my);
}

double envelope_radius_circles(std::span<const PlacedCircle> layout, Point center) {
  if (layout.empty()) throw Error("empty layout");
  double r = 0.0;
  for (const auto& pc : layout) r = std::max(r, pc.item.radius + distance(pc.center, center));
  return r;
}

double envelope_radius_rects(std::span<const PlacedRect> layout, Point center) {
  if (layout.empty()) throw Error("empty layout");
  double r = 0.0;
  for (const auto& pr : layout) {
    const Bounds b = rect_bounds(pr.item, pr.placement);
    const std::array<Point, 4> corners{
        Point{b.xmin, b.ymin}, Point{b.xmax, b.ymin}, Point{b.xmax, b.ymax}, Point{b.xmin, b.ymax}};
    for (const Point& v : corners) r = std::max(r, distance(v, center));
  }
  return r;
}

TangentPoints tangent_positions(Point p, double r_p, Point q, double r_q, double r_i,
                                double eps) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double d = std::sqrt(dx * dx + dy * dy);
  if (d <= eps) throw Error("degenerate pair");

  TangentPoints out;
  const double big_p = r_p + r_i;
  const double big_q = r_q + r_i;
  if (d > big_p + big_q + eps || d < std::abs(big_p - big_q) - eps) return out;

  // Distance from p along p->q to the chord midpoint, and squared half-chord.
  const double a = (big_p * big_p - big_q * big_q + d * d) / (2.0 * d);
  const double disc = big_p * big_p - a * a;
  const double ux = dx / d;
  const double uy = dy / d;
  const Point mid{p.x + a * ux, p.y + a * uy};

  // disc ~ 2 * big_p * (big_p - |a|), so this compares the radial gap to eps.
  if (disc <= 2.0 * eps * big_p) {
    if (disc < -2.0 * eps * big_p) return out;
    out.points[0] = mid;
    out.count = 1;
    return out;
  }
  const double h = std::sqrt(disc);
  out.points[0] = {mid.x - h * uy, mid.y + h * ux};
  out.points[1] = {mid.x + h * uy, mid.y - h * ux};
  out.count = 2;
  return out;
}

TangentPoints tangent_positions(Point p, double r_p, Point q, double r_q, double r_i) {
  return tangent_positions(p, r_p, q, r_q, r_i,
                           tolerance_for_scale(std::max({r_p, r_q, r_i})));
}

}  // namespace wil
