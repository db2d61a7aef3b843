#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wil/layout.hpp"

namespace wil {

enum class ItemKind { Circles, Rects };

std::string_view to_string(ItemKind kind);

// Instance file:
//   {"kind": "circles", "name": "...", "seed": 42,
//    "items": [{"r": 1.0, "m": 1.0}, ...]}
//   {"kind": "rects", "items": [{"a": 2.0, "b": 1.0, "m": 3.0}, ...]}
// name and seed are optional. Item ids follow array order, from 1.
struct InstanceFile {
  ItemKind kind = ItemKind::Circles;
  std::string name;
  std::optional<std::uint64_t> seed;
  CircleInstance circles;
  RectInstance rects;

  std::size_t size() const {
    return kind == ItemKind::Circles ? circles.items.size() : rects.items.size();
  }
  friend bool operator==(const InstanceFile& a, const InstanceFile& b);
};

InstanceFile parse_instance_text(std::string_view text);
InstanceFile parse_instance(const std::filesystem::path& path);
std::string write_instance(const InstanceFile& instance);

// Layout file: placements in placement order with the derived envelope,
// mass center and imbalance. Rect orientation is 0 or 90 (degrees).
struct LayoutFile {
  std::vector<int> order;
  std::variant<CircleLayout, RectLayout> layout;

  ItemKind kind() const {
    return std::holds_alternative<CircleLayout>(layout) ? ItemKind::Circles : ItemKind::Rects;
  }
  double envelope_radius() const;
};

std::string write_layout(const LayoutFile& file);
LayoutFile parse_layout_text(std::string_view text);
LayoutFile parse_layout(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace wil
