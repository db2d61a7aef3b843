#pragma once

#include <cstdint>

#include "wil/io.hpp"

namespace wil {

struct Range {
  double lo = 1.0;
  double hi = 1.0;
};

struct GenerateSpec {
  ItemKind kind = ItemKind::Circles;
  int n = 10;
  Range size{5.0, 15.0};   // circle radius, or both rectangle edges
  Range mass{1.0, 10.0};
  std::uint64_t seed = 1;
  std::string name;
};

// Sizes and masses drawn uniformly from the ranges; same spec, same file.
InstanceFile generate_instance(const GenerateSpec& spec);

}  // namespace wil
