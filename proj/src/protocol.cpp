#include "wil/protocol.hpp"

#include <chrono>
#include <cstdio>
#include <limits>

#include <nlohmann/json.hpp>

namespace wil {

using nlohmann::json;

std::string_view to_string(AcoVariant variant) { return variant == AcoVariant::AS ? "as" : "mmas"; }

AcoVariant parse_variant(std::string_view name) {
  if (name == "as") return AcoVariant::AS;
  if (name == "mmas") return AcoVariant::MMAS;
  throw Error("unknown algorithm \"" + std::string(name) + "\" (expected as or mmas)");
}

namespace {

template <class Instance>
LayoutFile timed_solve(const Instance& instance, const AcoParams& params, RunRecord& record) {
  const auto start = std::chrono::steady_clock::now();
  auto result = solve(instance, params);
  const auto stop = std::chrono::steady_clock::now();
  record.wall_time = std::chrono::duration<double>(stop - start).count();
  record.envelope = result.best_envelope;
  return LayoutFile{std::move(result.best_order), std::move(result.best_layout)};
}

}  // namespace

ProtocolResult run_protocol(const InstanceFile& instance, const AcoParams& params, int runs) {
  if (runs < 1) throw Error("runs must be >= 1");
  validate(params);

  ProtocolResult out;
  RunReport& rep = out.report;
  rep.instance = instance.name;
  rep.algorithm = std::string(to_string(params.variant));
  rep.params = params;
  double best = std::numeric_limits<double>::infinity();
  double env_sum = 0.0;
  double time_sum = 0.0;
  for (int k = 0; k < runs; ++k) {
    AcoParams p = params;
    p.seed = params.seed + static_cast<std::uint64_t>(k);
    RunRecord rec;
    rec.seed = p.seed;
    LayoutFile layout = instance.kind == ItemKind::Circles ? timed_solve(instance.circles, p, rec)
                                                           : timed_solve(instance.rects, p, rec);
    if (rec.envelope < best) {
      best = rec.envelope;
      out.best_layout = std::move(layout);
    }
    env_sum += rec.envelope;
    time_sum += rec.wall_time;
    rep.runs.push_back(rec);
  }
  rep.r_best = best;
  rep.r_average = env_sum / runs;
  rep.t_average = time_sum / runs;
  return out;
}

std::string write_report(const RunReport& r) {
  json root;
  root["instance"] = r.instance;
  root["algorithm"] = r.algorithm;
  root["params"] = {{"ants", r.params.ants},   {"iterations", r.params.iterations},
                    {"alpha", r.params.alpha}, {"beta", r.params.beta},
                    {"rho", r.params.rho},     {"seed", r.params.seed}};
  root["runs"] = r.runs.size();
  root["r_best"] = r.r_best;
  root["r_average"] = r.r_average;
  root["t_average"] = r.t_average;
  json rows = json::array();
  for (const auto& rec : r.runs)
    rows.push_back({{"seed", rec.seed}, {"envelope", rec.envelope}, {"wall_time", rec.wall_time}});
  root["per_run"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::vector<BenchRow> run_bench(std::span<const InstanceFile> instances,
                                std::span<const AcoVariant> algorithms, const AcoParams& params,
                                int runs) {
  if (instances.empty()) throw Error("empty instance set");
  if (algorithms.empty()) throw Error("no algorithms selected");
  std::vector<BenchRow> rows;
  for (const auto& inst : instances) {
    for (AcoVariant v : algorithms) {
      AcoParams p = params;
      p.variant = v;
      const RunReport rep = run_protocol(inst, p, runs).report;
      rows.push_back({inst.name, inst.size(), rep.algorithm, runs, rep.r_best, rep.r_average,
                      rep.t_average});
    }
  }
  return rows;
}

std::string bench_json(std::span<const BenchRow> rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"instance", r.instance},
                   {"items", r.items},
                   {"algorithm", r.algorithm},
                   {"runs", r.runs},
                   {"r_best", r.r_best},
                   {"r_average", r.r_average},
                   {"t_average", r.t_average}});
  return out.dump(2) + "\n";
}

std::string bench_table(std::span<const BenchRow> rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %6s %-5s %5s %14s %14s %12s\n", "instance", "items",
                "algo", "runs", "r_best", "r_average", "t_average(s)");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-24s %6zu %-5s %5d %14.6f %14.6f %12.4f\n",
                  r.instance.c_str(), r.items, r.algorithm.c_str(), r.runs, r.r_best, r.r_average,
                  r.t_average);
    out += line;
  }
  return out;
}

}  // namespace wil
