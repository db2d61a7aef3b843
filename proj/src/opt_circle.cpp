#include "wil/opt_circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wil {

void PartialCircleLayout::add(const CircleItem& item, Point center) {
  placed_.push_back({item, center});
  mass_ += item.mass;
  mx_ += item.mass * center.x;
  my_ += item.mass * center.y;
  envelope_ = envelope_radius_circles(placed_, mass_center());
}

Point PartialCircleLayout::mass_center_with(double mass, Point at) const {
  const double total = mass_ + mass;
  return {(mx_ + mass * at.x) / total, (my_ + mass * at.y) / total};
}

double PartialCircleLayout::envelope_with(const CircleItem& item, Point at) const {
  const Point c = mass_center_with(item.mass, at);
  double r = item.radius + distance(at, c);
  for (const auto& pc : placed_) r = std::max(r, pc.item.radius + distance(pc.center, c));
  return r;
}

bool PartialCircleLayout::overlaps_any(Point at, double radius) const {
  for (const auto& pc : placed_) {
    const double lim = pc.item.radius + radius - eps_;
    const double dx = pc.center.x - at.x;
    const double dy = pc.center.y - at.y;
    if (lim > 0.0 && dx * dx + dy * dy < lim * lim) return true;
  }
  return false;
}

namespace {

// Tangent points of a pair ordered by (y, x).
TangentPoints sorted_tangents(const PlacedCircle& p, const PlacedCircle& q, double r_i,
                              double eps) {
  TangentPoints t = tangent_positions(p.center, p.item.radius, q.center, q.item.radius, r_i, eps);
  if (t.count == 2) {
    const Point& a = t.points[0];
    const Point& b = t.points[1];
    if (b.y < a.y || (b.y == a.y && b.x < a.x)) std::swap(t.points[0], t.points[1]);
  }
  return t;
}

bool pair_can_touch(const PlacedCircle& p, const PlacedCircle& q, double r_i, double eps) {
  const double reach = p.item.radius + q.item.radius + 2.0 * r_i + eps;
  const double dx = p.center.x - q.center.x;
  const double dy = p.center.y - q.center.y;
  return dx * dx + dy * dy <= reach * reach;
}

}  // namespace

std::vector<CircleCandidate> candidate_positions_circle(const PartialCircleLayout& partial,
                                                        double r_i) {
  if (partial.size() < 2) throw Error("candidate positions need at least two placed circles");
  const auto placed = partial.placed();
  std::vector<CircleCandidate> out;
  for (std::size_t p = 0; p < placed.size(); ++p) {
    for (std::size_t q = p + 1; q < placed.size(); ++q) {
      for (const Point& pt : sorted_tangents(placed[p], placed[q], r_i, partial.eps())) {
        if (!partial.overlaps_any(pt, r_i))
          out.push_back({pt, {static_cast<int>(p), static_cast<int>(q)}});
      }
    }
  }
  return out;
}

namespace {

// Scans all tangent slots for `item` and returns the greedy choice. The scan
// runs in tie-break order (pair, then y, then x), so a later candidate only
// wins when it is better by more than eps.
struct CircleChoice {
  bool found = false;
  Point position;
  double envelope = std::numeric_limits<double>::infinity();
};

CircleChoice choose_circle_position(const PartialCircleLayout& partial, const CircleItem& item,
                                    std::uint64_t& slots) {
  const auto placed = partial.placed();
  const double eps = partial.eps();
  const Point c_old = partial.mass_center();
  const double env_old = partial.envelope();
  CircleChoice best;

  // Placed circles by reach about the current mass center, farthest first.
  thread_local std::vector<std::pair<double, const PlacedCircle*>> by_reach;
  by_reach.clear();
  for (const auto& pc : placed) by_reach.emplace_back(pc.item.radius + distance(pc.center, c_old), &pc);
  std::sort(by_reach.begin(), by_reach.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  // Circles that can reach a candidate touching circle p. Any circle that
  // overlaps such a candidate lies within r_p + r_j + 2 r_i of p, which is
  // also the condition for the pair (p, j) to have tangent positions.
  thread_local std::vector<std::vector<int>> near;
  if (near.size() < placed.size()) near.resize(placed.size());
  for (std::size_t p = 0; p < placed.size(); ++p) near[p].clear();
  for (std::size_t p = 0; p < placed.size(); ++p) {
    near[p].push_back(static_cast<int>(p));
    for (std::size_t q = p + 1; q < placed.size(); ++q) {
      if (pair_can_touch(placed[p], placed[q], item.radius, eps)) {
        near[p].push_back(static_cast<int>(q));
        near[q].push_back(static_cast<int>(p));
      }
    }
  }
  slots += placed.size() * (placed.size() - 1);

  auto overlaps_near = [&](std::size_t p, Point pt) {
    for (int j : near[p]) {
      const auto& pc = placed[j];
      const double lim = pc.item.radius + item.radius - eps;
      const double dx = pc.center.x - pt.x;
      const double dy = pc.center.y - pt.y;
      if (lim > 0.0 && dx * dx + dy * dy < lim * lim) return true;
    }
    return false;
  };

  auto consider = [&](std::size_t p, Point pt) {
    const Point c = partial.mass_center_with(item.mass, pt);
    const double limit = best.envelope - eps;
    // Moving the center by `shift` changes every existing reach by at most that much.
    const double shift = distance(c, c_old);
    double env = item.radius + distance(pt, c);
    if (env >= limit || env_old - shift >= limit) return;
    for (const auto& [reach, pc] : by_reach) {
      if (reach + shift + eps < env) break;
      env = std::max(env, pc->item.radius + distance(pc->center, c));
      if (env >= limit) return;
    }
    if (overlaps_near(p, pt)) return;
    best = {true, pt, env};
  };

  for (std::size_t p = 0; p < placed.size(); ++p) {
    for (int q : near[p]) {
      if (q <= static_cast<int>(p)) continue;
      for (const Point& pt : sorted_tangents(placed[p], placed[q], item.radius, eps)) consider(p, pt);
    }
  }
  return best;
}

// Outward placement next to the circle that defines the current envelope.
Point fallback_position(const PartialCircleLayout& partial, const CircleItem& item) {
  const Point c = partial.mass_center();
  const PlacedCircle* far = nullptr;
  double far_reach = -1.0;
  for (const auto& pc : partial.placed()) {
    const double reach = pc.item.radius + distance(pc.center, c);
    if (reach > far_reach) {
      far_reach = reach;
      far = &pc;
    }
  }
  const double d = distance(far->center, c);
  Point u{1.0, 0.0};
  if (d > partial.eps()) u = {(far->center.x - c.x) / d, (far->center.y - c.y) / d};
  const double step = far->item.radius + item.radius;
  return {far->center.x + step * u.x, far->center.y + step * u.y};
}

}  // namespace

CircleLayout place_circles(std::span<const int> order, std::span<const CircleItem> items) {
  if (items.empty()) throw Error("empty item list");
  validate_order(order, items.size());
  const double eps = tolerance_for(items);

  PartialCircleLayout partial(eps);
  CircleLayout layout;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const CircleItem& item = items[order[k] - 1];
    Point at;
    if (k == 0) {
      at = {-item.radius, 0.0};
    } else if (k == 1) {
      at = {item.radius, 0.0};
    } else {
      const CircleChoice choice = choose_circle_position(partial, item, layout.candidate_evaluations);
      if (choice.found) {
        at = choice.position;
      } else {
        at = fallback_position(partial, item);
        layout.fallback_used = true;
      }
    }
    partial.add(item, at);
  }

  layout.placed.assign(partial.placed().begin(), partial.placed().end());
  refresh_derived(layout);
  return layout;
}

}  // namespace wil
