#include "wil/opt_rect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wil {

void PartialRectLayout::add(const RectItem& item, const RectPlacement& placement) {
  placed_.push_back({item, placement});
  bounds_.push_back(rect_bounds(item, placement));
  mass_ += item.mass;
  mx_ += item.mass * placement.center.x;
  my_ += item.mass * placement.center.y;
  const Point c = mass_center();
  envelope_ = 0.0;
  for (const auto& b : bounds_) envelope_ = std::max(envelope_, farthest_corner_distance(b, c));
}

Point PartialRectLayout::mass_center_with(double mass, Point at) const {
  const double total = mass_ + mass;
  return {(mx_ + mass * at.x) / total, (my_ + mass * at.y) / total};
}

double PartialRectLayout::envelope_with(const RectItem& item,
                                        const RectPlacement& placement) const {
  const Point c = mass_center_with(item.mass, placement.center);
  double r = farthest_corner_distance(rect_bounds(item, placement), c);
  for (const auto& b : bounds_) r = std::max(r, farthest_corner_distance(b, c));
  return r;
}

bool PartialRectLayout::overlaps_any(const Bounds& b) const {
  for (const auto& other : bounds_)
    if (bounds_overlap(b, other, eps_)) return true;
  return false;
}

Bounds PartialRectLayout::extent() const {
  Bounds e = bounds_.front();
  for (const auto& b : bounds_) {
    e.xmin = std::min(e.xmin, b.xmin);
    e.ymin = std::min(e.ymin, b.ymin);
    e.xmax = std::max(e.xmax, b.xmax);
    e.ymax = std::max(e.ymax, b.ymax);
  }
  return e;
}

std::array<RectCandidate, 16> candidate_positions_rect(const PartialRectLayout& partial,
                                                       const RectItem& item, std::size_t anchor) {
  if (anchor >= partial.size()) throw Error("anchor is not a placed rectangle");
  const Bounds& b = partial.bounds()[anchor];
  std::array<RectCandidate, 16> out{};
  std::size_t k = 0;
  for (Side side : {Side::Right, Side::Top, Side::Left, Side::Bottom}) {
    for (Orientation o : {Orientation::Deg0, Orientation::Deg90}) {
      const double w = footprint_width(item, o);
      const double h = footprint_height(item, o);
      for (Alignment al : {Alignment::A, Alignment::B}) {
        const bool a = al == Alignment::A;
        Point c;
        switch (side) {
          case Side::Right:
            c = {b.xmax + 0.5 * w, a ? b.ymin + 0.5 * h : b.ymax - 0.5 * h};
            break;
          case Side::Top:
            c = {a ? b.xmin + 0.5 * w : b.xmax - 0.5 * w, b.ymax + 0.5 * h};
            break;
          case Side::Left:
            c = {b.xmin - 0.5 * w, a ? b.ymin + 0.5 * h : b.ymax - 0.5 * h};
            break;
          case Side::Bottom:
            c = {a ? b.xmin + 0.5 * w : b.xmax - 0.5 * w, b.ymin - 0.5 * h};
            break;
        }
        out[k++] = {{c, o}, side, al};
      }
    }
  }
  return out;
}

namespace {

struct RectChoice {
  bool found = false;
  RectPlacement placement;
  double envelope = std::numeric_limits<double>::infinity();
};

// Candidates are scanned in tie-break order (anchor, side, orientation,
// alignment); a later one only wins when better by more than eps.
RectChoice choose_rect_position(const PartialRectLayout& partial, const RectItem& item,
                                std::uint64_t& generated) {
  const double eps = partial.eps();
  const Point c_old = partial.mass_center();
  const double env_old = partial.envelope();
  const auto bounds = partial.bounds();
  RectChoice best;

  // Placed rectangles by farthest-corner distance from the current mass center.
  thread_local std::vector<std::pair<double, const Bounds*>> by_reach;
  by_reach.clear();
  for (const auto& b : bounds) by_reach.emplace_back(farthest_corner_distance(b, c_old), &b);
  std::sort(by_reach.begin(), by_reach.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  // Every candidate around anchor j lies inside j's box grown by the item's
  // longest edge, so only rectangles meeting that box can overlap it.
  const double reach = std::max(item.edge_a, item.edge_b);
  thread_local std::vector<int> near;
  bool near_ready = false;
  std::size_t anchor = 0;
  auto overlaps_near = [&](const Bounds& nb) {
    if (!near_ready) {
      const Bounds& a = bounds[anchor];
      const Bounds grown{a.xmin - reach, a.ymin - reach, a.xmax + reach, a.ymax + reach};
      near.clear();
      for (std::size_t k = 0; k < bounds.size(); ++k)
        if (bounds_overlap(grown, bounds[k], 0.0)) near.push_back(static_cast<int>(k));
      near_ready = true;
    }
    for (int k : near)
      if (bounds_overlap(nb, bounds[k], eps)) return true;
    return false;
  };

  for (std::size_t j = 0; j < partial.size(); ++j) {
    anchor = j;
    near_ready = false;

    const auto candidates = candidate_positions_rect(partial, item, j);
    generated += candidates.size();
    for (const auto& cand : candidates) {
      const Bounds nb = rect_bounds(item, cand.placement);
      const Point c = partial.mass_center_with(item.mass, cand.placement.center);
      const double limit = best.envelope - eps;
      const double shift = distance(c, c_old);
      double env = farthest_corner_distance(nb, c);
      if (env >= limit || env_old - shift >= limit) continue;
      bool rejected = false;
      for (const auto& [far, b] : by_reach) {
        if (far + shift + eps < env) break;
        env = std::max(env, farthest_corner_distance(*b, c));
        if (env >= limit) {
          rejected = true;
          break;
        }
      }
      if (rejected || overlaps_near(nb)) continue;
      best = {true, cand.placement, env};
    }
  }
  return best;
}

}  // namespace

RectLayout place_rects(std::span<const int> order, std::span<const RectItem> items) {
  if (items.empty()) throw Error("empty item list");
  validate_order(order, items.size());

  PartialRectLayout partial(tolerance_for(items));
  RectLayout layout;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const RectItem& item = items[order[k] - 1];
    RectPlacement pl;
    if (k > 0) {
      const RectChoice choice = choose_rect_position(partial, item, layout.candidate_evaluations);
      if (choice.found) {
        pl = choice.placement;
      } else {
        const Bounds e = partial.extent();
        pl = {{e.xmax + 0.5 * item.edge_a, e.ymin + 0.5 * item.edge_b}, Orientation::Deg0};
        layout.fallback_used = true;
      }
    }
    partial.add(item, pl);
  }

  layout.placed.assign(partial.placed().begin(), partial.placed().end());
  refresh_derived(layout);
  return layout;
}

}  // namespace wil
