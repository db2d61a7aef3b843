// Acceptance suite. Each criterion prints one PASS/FAIL line; pass criterion
// names on the command line to run a subset. Exit status is nonzero if any
// selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wil/wil.hpp"

namespace {

using namespace wil;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CircleInstance unit_circles(int n) {
  CircleInstance inst;
  for (int i = 1; i <= n; ++i) inst.items.push_back({i, 1.0, 1.0});
  return inst;
}

std::vector<std::vector<int>> all_orders(int n) {
  std::vector<int> o(n);
  std::iota(o.begin(), o.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(o);
  while (std::next_permutation(o.begin(), o.end()));
  return out;
}

Outcome oracle_four_circles() {
  const auto start = std::chrono::steady_clock::now();
  const OracleResult r = exhaustive_best_order(unit_circles(4));
  const double elapsed = seconds_since(start);
  const double expected = 1.0 + std::numbers::sqrt3;
  const double unreachable = 1.0 + std::numbers::sqrt2;
  const bool pass = std::abs(r.best_envelope - expected) <= 1e-9 && r.best_envelope > unreachable &&
                    r.orders_evaluated == 24 && elapsed < 1.0;
  return {pass, fmt("best %.12f (expect %.12f, > %.12f), %llu orders, %.4f s", r.best_envelope,
                    expected, unreachable, static_cast<unsigned long long>(r.orders_evaluated),
                    elapsed)};
}

Outcome three_circles() {
  const double expected = 1.0 + 2.0 / std::numbers::sqrt3;
  const auto inst = unit_circles(3);
  double worst = 0.0;
  for (const auto& o : all_orders(3))
    worst = std::max(worst, std::abs(place_circles(o, inst.items).envelope_radius - expected));
  return {worst <= 1e-9, fmt("max |envelope - %.10f| over 6 orders = %.3g", expected, worst)};
}

Outcome two_squares() {
  const double expected = std::sqrt(5.0) / 2.0;
  const std::vector<RectItem> items{{1, 1.0, 1.0, 1.0}, {2, 1.0, 1.0, 1.0}};
  double worst = 0.0;
  for (const auto& o : all_orders(2))
    worst = std::max(worst, std::abs(place_rects(o, items).envelope_radius - expected));
  return {worst <= 1e-9, fmt("max |envelope - %.10f| over 2 orders = %.3g", expected, worst)};
}

AcoParams paper_params(AcoVariant v, std::uint64_t seed) {
  AcoParams p;
  p.variant = v;
  p.ants = 20;
  p.iterations = 100;
  p.alpha = 1.0;
  p.beta = 1.0;
  p.rho = 0.9;
  p.seed = seed;
  return p;
}

InstanceFile generated(ItemKind kind, int n, std::uint64_t seed) {
  GenerateSpec g;
  g.kind = kind;
  g.n = n;
  g.seed = seed;
  g.size = kind == ItemKind::Circles ? Range{5.0, 15.0} : Range{1.0, 10.0};
  g.mass = {1.0, 10.0};
  return generate_instance(g);
}

Outcome aco_matches_oracle() {
  const auto start = std::chrono::steady_clock::now();
  int instances_ok = 0;
  std::string hits;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const InstanceFile inst = generated(ItemKind::Circles, 7, s);
    const double optimum = exhaustive_best_order(inst.circles).best_envelope;
    int hit = 0;
    for (std::uint64_t k = 0; k < 10; ++k) {
      const auto r = solve(inst.circles, paper_params(AcoVariant::MMAS, 1 + k));
      if (std::abs(r.best_envelope - optimum) <= 1e-9) ++hit;
    }
    if (hit >= 9) ++instances_ok;
    hits += fmt("%s%d", hits.empty() ? "" : ",", hit);
  }
  const double elapsed = seconds_since(start);
  return {instances_ok >= 8 && elapsed < 60.0,
          fmt("%d/10 instances with >=9/10 optimal runs (hits per instance: %s), %.1f s",
              instances_ok, hits.c_str(), elapsed)};
}

Outcome trend(ItemKind kind) {
  const auto start = std::chrono::steady_clock::now();
  int mmas_wins = 0;
  std::string detail;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const InstanceFile inst = generated(kind, 40, s);
    const double mmas = run_protocol(inst, paper_params(AcoVariant::MMAS, 1), 10).report.r_average;
    const double as = run_protocol(inst, paper_params(AcoVariant::AS, 1), 10).report.r_average;
    if (mmas <= as) ++mmas_wins;
    detail += fmt("%s%.3f/%.3f", detail.empty() ? "" : " ", mmas, as);
  }
  return {mmas_wins >= 7, fmt("MMAS mean <= AS mean on %d/10 instances (mmas/as: %s), %.0f s",
                              mmas_wins, detail.c_str(), seconds_since(start))};
}

// Overlap count and envelope recomputed here from raw placements, without
// the library's geometry helpers.
struct Audit {
  std::size_t overlaps = 0;
  double rel_error = 0.0;
};

Audit audit(const CircleLayout& l, double eps) {
  Audit a;
  double m = 0, mx = 0, my = 0;
  for (const auto& pc : l.placed) {
    m += pc.item.mass;
    mx += pc.item.mass * pc.center.x;
    my += pc.item.mass * pc.center.y;
  }
  const double cx = mx / m, cy = my / m;
  double env = 0;
  for (std::size_t i = 0; i < l.placed.size(); ++i) {
    const auto& p = l.placed[i];
    env = std::max(env, p.item.radius + std::hypot(p.center.x - cx, p.center.y - cy));
    for (std::size_t j = i + 1; j < l.placed.size(); ++j) {
      const auto& q = l.placed[j];
      if (std::hypot(p.center.x - q.center.x, p.center.y - q.center.y) <
          p.item.radius + q.item.radius - eps)
        ++a.overlaps;
    }
  }
  a.rel_error = std::abs(env - l.envelope_radius) / env;
  return a;
}

Audit audit(const RectLayout& l, double eps) {
  struct Box {
    double x0, y0, x1, y1;
  };
  std::vector<Box> boxes;
  double m = 0, mx = 0, my = 0;
  for (const auto& pr : l.placed) {
    const bool upright = pr.placement.orientation == Orientation::Deg90;
    const double w = upright ? pr.item.edge_b : pr.item.edge_a;
    const double h = upright ? pr.item.edge_a : pr.item.edge_b;
    const Point c = pr.placement.center;
    boxes.push_back({c.x - w / 2, c.y - h / 2, c.x + w / 2, c.y + h / 2});
    m += pr.item.mass;
    mx += pr.item.mass * c.x;
    my += pr.item.mass * c.y;
  }
  const double cx = mx / m, cy = my / m;
  Audit a;
  double env = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    for (double x : {b.x0, b.x1})
      for (double y : {b.y0, b.y1}) env = std::max(env, std::hypot(x - cx, y - cy));
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const Box& o = boxes[j];
      const double ox = std::min(b.x1, o.x1) - std::max(b.x0, o.x0);
      const double oy = std::min(b.y1, o.y1) - std::max(b.y0, o.y0);
      if (ox > eps && oy > eps) ++a.overlaps;
    }
  }
  a.rel_error = std::abs(env - l.envelope_radius) / env;
  return a;
}

Outcome non_overlap() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> size(1, 30);
  std::uniform_real_distribution<double> len(0.5, 20.0), mass(0.1, 50.0);
  std::size_t overlaps = 0, constructions = 0;
  double worst_rel = 0.0;
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = size(rng);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);

    CircleInstance ci;
    RectInstance ri;
    double rmax = 0, emax = 0;
    for (int i = 1; i <= n; ++i) {
      ci.items.push_back({i, len(rng), mass(rng)});
      ri.items.push_back({i, len(rng), len(rng), mass(rng)});
      rmax = std::max(rmax, ci.items.back().radius);
      emax = std::max({emax, ri.items.back().edge_a, ri.items.back().edge_b});
    }
    const Audit c = audit(place_circles(order, ci.items), 1e-9 * std::max(1.0, rmax));
    const Audit r = audit(place_rects(order, ri.items), 1e-9 * std::max(1.0, emax));
    overlaps += c.overlaps + r.overlaps;
    worst_rel = std::max({worst_rel, c.rel_error, r.rel_error});
    constructions += 2;
  }
  return {overlaps == 0 && worst_rel <= 1e-9,
          fmt("%zu constructions, %zu overlapping pairs, worst envelope rel. error %.3g",
              constructions, overlaps, worst_rel)};
}

Outcome complexity_counters() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> len(1.0, 10.0);
  bool ok = true;
  std::string detail;
  for (int n : {1, 2, 3, 4, 7, 12, 20, 30}) {
    CircleInstance ci;
    RectInstance ri;
    for (int i = 1; i <= n; ++i) {
      ci.items.push_back({i, len(rng), len(rng)});
      ri.items.push_back({i, len(rng), len(rng), len(rng)});
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::uint64_t circle_expected = 0, rect_bound = 0;
    for (std::uint64_t i = 3; i <= static_cast<std::uint64_t>(n); ++i) circle_expected += (i - 1) * (i - 2);
    for (std::uint64_t i = 2; i <= static_cast<std::uint64_t>(n); ++i) rect_bound += 16 * (i - 1);
    const auto c = place_circles(order, ci.items).candidate_evaluations;
    const auto r = place_rects(order, ri.items).candidate_evaluations;
    ok = ok && c == circle_expected && r <= rect_bound;
    detail += fmt("%sn=%d:%llu/%llu,%llu<=%llu", detail.empty() ? "" : " ", n,
                  static_cast<unsigned long long>(c), static_cast<unsigned long long>(circle_expected),
                  static_cast<unsigned long long>(r), static_cast<unsigned long long>(rect_bound));
  }
  return {ok, detail};
}

Outcome mmas_invariants() {
  bool ok = true;
  std::uint64_t updates = 0, distributions = 0;
  double worst_sum = 0.0;
  for (ItemKind kind : {ItemKind::Circles, ItemKind::Rects}) {
    const InstanceFile inst = generated(kind, 12, 3);
    const double n = static_cast<double>(inst.size());
    SolveHooks hooks;
    hooks.on_distribution = [&](std::span<const double> p) {
      ++distributions;
      const double s = std::accumulate(p.begin(), p.end(), 0.0);
      worst_sum = std::max(worst_sum, std::abs(s - 1.0));
    };
    hooks.on_update = [&](const PheromoneModel& ph) {
      ++updates;
      for (double t : ph.trails())
        if (t < 0.1 / n - 1e-15 || t > 10.0 / n + 1e-15) ok = false;
    };
    const AcoParams p = paper_params(AcoVariant::MMAS, 5);
    if (kind == ItemKind::Circles)
      solve(inst.circles, p, hooks);
    else
      solve(inst.rects, p, hooks);
  }
  ok = ok && worst_sum <= 1e-12;
  return {ok, fmt("%llu updates within [0.1/n, 10/n]: %s; %llu distributions, worst |sum-1| %.3g",
                  static_cast<unsigned long long>(updates), ok ? "yes" : "no",
                  static_cast<unsigned long long>(distributions), worst_sum)};
}

std::string strip_timing(const std::string& report) {
  nlohmann::json j = nlohmann::json::parse(report);
  j.erase("t_average");
  for (auto& row : j["per_run"]) row.erase("wall_time");
  return j.dump();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "wil_acceptance_determinism";
  fs::create_directories(dir);
  bool ok = true;
  std::string detail;
  for (ItemKind kind : {ItemKind::Circles, ItemKind::Rects}) {
    const std::string tag(to_string(kind));
    const fs::path inst = dir / (tag + ".json");
    write_file(inst, write_instance(generated(kind, 15, 11)));
    std::vector<std::string> layouts, reports;
    for (int threads : {1, 1, 4}) {
      const fs::path out = dir / fmt("%s_layout_%zu.json", tag.c_str(), layouts.size());
      const fs::path rep = dir / fmt("%s_report_%zu.json", tag.c_str(), layouts.size());
      const std::string cmd = fmt(
          "\"%s\" solve --instance \"%s\" --algo mmas --ants 10 --iters 20 --runs 3 --seed 17 "
          "--threads %d --out \"%s\" --report \"%s\"",
          WIL_CLI_PATH, inst.c_str(), threads, out.c_str(), rep.c_str());
      if (std::system(cmd.c_str()) != 0) return {false, "solve invocation failed: " + cmd};
      layouts.push_back(read_file(out));
      reports.push_back(strip_timing(read_file(rep)));
    }
    const bool same = layouts[0] == layouts[1] && layouts[0] == layouts[2] &&
                      reports[0] == reports[1] && reports[0] == reports[2];
    ok = ok && same;
    detail += fmt("%s%s: %s", detail.empty() ? "" : "; ", tag.c_str(),
                  same ? "identical across 2 serial + 1 four-thread run" : "DIFFERENT");
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"oracle_four_circles", oracle_four_circles},
      {"three_circles", three_circles},
      {"two_squares", two_squares},
      {"aco_matches_oracle", aco_matches_oracle},
      {"trend_circles", [] { return trend(ItemKind::Circles); }},
      {"trend_rects", [] { return trend(ItemKind::Rects); }},
      {"non_overlap", non_overlap},
      {"complexity_counters", complexity_counters},
      {"mmas_invariants", mmas_invariants},
      {"determinism", determinism},
  };

  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no matching criteria\n");
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
