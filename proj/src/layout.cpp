#include "wil/layout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wil {

std::vector<MassPoint> mass_points(const CircleLayout& layout) {
  std::vector<MassPoint> out;
  out.reserve(layout.placed.size());
  for (const auto& pc : layout.placed) out.push_back({pc.item.mass, pc.center});
  return out;
}

std::vector<MassPoint> mass_points(const RectLayout& layout) {
  std::vector<MassPoint> out;
  out.reserve(layout.placed.size());
  for (const auto& pr : layout.placed) out.push_back({pr.item.mass, pr.placement.center});
  return out;
}

void refresh_derived(CircleLayout& layout) {
  const auto mp = mass_points(layout);
  layout.mass_center = mass_center(mp);
  layout.imbalance_about_origin = imbalance(mp);
  layout.envelope_radius = envelope_radius_circles(layout.placed, layout.mass_center);
}

void refresh_derived(RectLayout& layout) {
  const auto mp = mass_points(layout);
  layout.mass_center = mass_center(mp);
  layout.imbalance_about_origin = imbalance(mp);
  layout.envelope_radius = envelope_radius_rects(layout.placed, layout.mass_center);
}

namespace {

double relative_error(double stored, double recomputed) {
  return std::abs(stored - recomputed) / std::max(1.0, std::abs(recomputed));
}

}  // namespace

LayoutCheck check_layout(const CircleLayout& layout, double eps) {
  LayoutCheck c;
  const auto& p = layout.placed;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (circles_overlap(p[i].center, p[i].item.radius, p[j].center, p[j].item.radius, eps))
        ++c.overlapping_pairs;
  const auto mp = mass_points(layout);
  c.recomputed_envelope = envelope_radius_circles(p, mass_center(mp));
  c.envelope_relative_error = relative_error(layout.envelope_radius, c.recomputed_envelope);
  return c;
}

LayoutCheck check_layout(const RectLayout& layout, double eps) {
  LayoutCheck c;
  const auto& p = layout.placed;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (rects_overlap(p[i].item, p[i].placement, p[j].item, p[j].placement, eps))
        ++c.overlapping_pairs;
  const auto mp = mass_points(layout);
  c.recomputed_envelope = envelope_radius_rects(p, mass_center(mp));
  c.envelope_relative_error = relative_error(layout.envelope_radius, c.recomputed_envelope);
  return c;
}

namespace {

void require_positive(double v, const char* what, int id) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw Error("item " + std::to_string(id) + ": " + what + " must be positive and finite");
}

}  // namespace

void validate(const CircleInstance& instance) {
  if (instance.items.empty()) throw Error("empty item list");
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& it = instance.items[i];
    if (it.id != static_cast<int>(i) + 1) throw Error("item ids must be contiguous from 1");
    require_positive(it.radius, "radius", it.id);
    require_positive(it.mass, "mass", it.id);
  }
}

void validate(const RectInstance& instance) {
  if (instance.items.empty()) throw Error("empty item list");
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& it = instance.items[i];
    if (it.id != static_cast<int>(i) + 1) throw Error("item ids must be contiguous from 1");
    require_positive(it.edge_a, "edge a", it.id);
    require_positive(it.edge_b, "edge b", it.id);
    require_positive(it.mass, "mass", it.id);
  }
}

void validate_order(std::span<const int> order, std::size_t n) {
  if (order.size() != n) throw Error("order length does not match item count");
  std::vector<bool> seen(n, false);
  for (int id : order) {
    if (id < 1 || static_cast<std::size_t>(id) > n || seen[id - 1])
      throw Error("order is not a permutation of 1..n");
    seen[id - 1] = true;
  }
}

}  // namespace wil
