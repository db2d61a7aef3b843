#pragma once

#include <cstdint>
#include <vector>

#include "wil/geometry.hpp"

namespace wil {

struct CircleInstance {
  std::vector<CircleItem> items;  // ids 1..n in index order
};

struct RectInstance {
  std::vector<RectItem> items;
};

// Placements are stored in placement order. The enveloping circle is always
// taken about the final mass center.
struct CircleLayout {
  std::vector<PlacedCircle> placed;
  Point mass_center;
  double envelope_radius = 0.0;
  double imbalance_about_origin = 0.0;
  bool fallback_used = false;
  // Tangent slots examined: two per pair of placed circles at every step.
  std::uint64_t candidate_evaluations = 0;
};

struct RectLayout {
  std::vector<PlacedRect> placed;
  Point mass_center;
  double envelope_radius = 0.0;
  double imbalance_about_origin = 0.0;
  bool fallback_used = false;
  // Raw anchor-side placements generated (16 per anchor per step).
  std::uint64_t candidate_evaluations = 0;
};

// Recomputes the derived fields of a layout from its placements.
void refresh_derived(CircleLayout& layout);
void refresh_derived(RectLayout& layout);

// Checks used by tests and when reading layout files back.
struct LayoutCheck {
  std::size_t overlapping_pairs = 0;
  double recomputed_envelope = 0.0;
  double envelope_relative_error = 0.0;
};

LayoutCheck check_layout(const CircleLayout& layout, double eps);
LayoutCheck check_layout(const RectLayout& layout, double eps);

std::vector<MassPoint> mass_points(const CircleLayout& layout);
std::vector<MassPoint> mass_points(const RectLayout& layout);

void validate(const CircleInstance& instance);
void validate(const RectInstance& instance);

// Throws unless `order` is a permutation of 1..n.
void validate_order(std::span<const int> order, std::size_t n);

}  // namespace wil
