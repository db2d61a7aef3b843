#pragma once

#include <array>
#include <span>
#include <vector>

#include "wil/layout.hpp"

namespace wil {

class PartialRectLayout {
 public:
  explicit PartialRectLayout(double eps) : eps_(eps) {}

  void add(const RectItem& item, const RectPlacement& placement);

  std::span<const PlacedRect> placed() const { return placed_; }
  std::span<const Bounds> bounds() const { return bounds_; }
  std::size_t size() const { return placed_.size(); }
  double eps() const { return eps_; }

  Point mass_center() const { return {mx_ / mass_, my_ / mass_}; }
  Point mass_center_with(double mass, Point at) const;
  double envelope() const { return envelope_; }
  double envelope_with(const RectItem& item, const RectPlacement& placement) const;

  bool overlaps_any(const Bounds& b) const;
  // Bounding box of everything placed so far.
  Bounds extent() const;

 private:
  double eps_;
  std::vector<PlacedRect> placed_;
  std::vector<Bounds> bounds_;
  double mass_ = 0.0;
  double mx_ = 0.0;
  double my_ = 0.0;
  double envelope_ = 0.0;
};

enum class Side : std::uint8_t { Right, Top, Left, Bottom };
// A: the new edge starts at the side's lower-left endpoint.
// B: the new edge ends at the side's upper-right endpoint.
enum class Alignment : std::uint8_t { A, B };

struct RectCandidate {
  RectPlacement placement;
  Side side;
  Alignment alignment;
};

// The 16 edge-contact placements of `item` around the placed rectangle at
// `anchor` (placement index), in side, orientation, alignment order.
// Overlap with other rectangles is not checked here.
std::array<RectCandidate, 16> candidate_positions_rect(const PartialRectLayout& partial,
                                                       const RectItem& item, std::size_t anchor);

RectLayout place_rects(std::span<const int> order, std::span<const RectItem> items);

}  // namespace wil
