#pragma once

#include <span>
#include <string>
#include <vector>

#include "wil/aco.hpp"
#include "wil/io.hpp"

namespace wil {

std::string_view to_string(AcoVariant variant);
AcoVariant parse_variant(std::string_view name);

struct RunRecord {
  std::uint64_t seed = 0;
  double envelope = 0.0;
  double wall_time = 0.0;  // seconds, solve call only
};

struct RunReport {
  std::string instance;
  std::string algorithm;
  AcoParams params;
  std::vector<RunRecord> runs;
  double r_best = 0.0;
  double r_average = 0.0;
  double t_average = 0.0;
};

struct ProtocolResult {
  RunReport report;
  LayoutFile best_layout;  // best over all runs; first run wins ties
};

// Runs the colony `runs` times with seeds params.seed + k.
ProtocolResult run_protocol(const InstanceFile& instance, const AcoParams& params, int runs);

// Report as JSON. Timing fields are "t_average" and "wall_time".
std::string write_report(const RunReport& report);

struct BenchRow {
  std::string instance;
  std::size_t items = 0;
  std::string algorithm;
  int runs = 0;
  double r_best = 0.0;
  double r_average = 0.0;
  double t_average = 0.0;
};

// One row per (instance, algorithm), in the given order.
std::vector<BenchRow> run_bench(std::span<const InstanceFile> instances,
                                std::span<const AcoVariant> algorithms, const AcoParams& params,
                                int runs);
std::string bench_json(std::span<const BenchRow> rows);
std::string bench_table(std::span<const BenchRow> rows);

}  // namespace wil
