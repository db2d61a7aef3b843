#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wil/layout.hpp"

namespace wil {

struct OracleResult {
  std::vector<int> best_order;
  double best_envelope = 0.0;
  std::uint64_t orders_evaluated = 0;
  // Every (order, envelope) in lexicographic order, when requested.
  std::optional<std::vector<std::pair<std::vector<int>, double>>> full_distribution;
};

struct OracleOptions {
  std::size_t limit_n = 8;
  bool keep_distribution = false;
};

// Decodes every permutation of 1..n. best_envelope is the exact minimum;
// best_order is the lexicographically smallest order within the instance
// tolerance of it.
OracleResult exhaustive_best_order(const CircleInstance& instance, const OracleOptions& options = {});
OracleResult exhaustive_best_order(const RectInstance& instance, const OracleOptions& options = {});

}  // namespace wil
