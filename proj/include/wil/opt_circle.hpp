#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wil/layout.hpp"

namespace wil {

// Circles placed so far, with running mass moments so the mass center of
// "partial + one candidate" is O(1).
class PartialCircleLayout {
 public:
  explicit PartialCircleLayout(double eps) : eps_(eps) {}

  void add(const CircleItem& item, Point center);

  std::span<const PlacedCircle> placed() const { return placed_; }
  std::size_t size() const { return placed_.size(); }
  double eps() const { return eps_; }

  double total_mass() const { return mass_; }
  Point mass_center() const { return {mx_ / mass_, my_ / mass_}; }
  // Mass center after adding `mass` at `at`.
  Point mass_center_with(double mass, Point at) const;
  // Envelope about the current mass center (0 when empty).
  double envelope() const { return envelope_; }

  // Envelope of partial + candidate about the combined mass center.
  double envelope_with(const CircleItem& item, Point at) const;

  bool overlaps_any(Point at, double radius) const;

 private:
  double eps_;
  std::vector<PlacedCircle> placed_;
  double mass_ = 0.0;
  double mx_ = 0.0;
  double my_ = 0.0;
  double envelope_ = 0.0;
};

struct CircleCandidate {
  Point position;
  // Placement indices (0-based, p < q) of the two circles it touches.
  std::pair<int, int> pair;
};

// Every non-overlapping tangent position for a circle of radius r_i, pair by
// pair in placement-index order. Requires at least two placed circles.
std::vector<CircleCandidate> candidate_positions_circle(const PartialCircleLayout& partial,
                                                        double r_i);

// Greedy construction for the given order of item ids (1-based).
CircleLayout place_circles(std::span<const int> order, std::span<const CircleItem> items);

}  // namespace wil
