#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wil/wil.hpp"

namespace {

struct ColonyFlags {
  std::string algo = "mmas";
  wil::AcoParams params;
  int runs = 10;
};

void add_colony_flags(CLI::App* cmd, ColonyFlags& f) {
  cmd->add_option("--ants", f.params.ants, "Ants per iteration")->capture_default_str();
  cmd->add_option("--iters", f.params.iterations, "Iterations")->capture_default_str();
  cmd->add_option("--alpha", f.params.alpha, "Pheromone exponent")->capture_default_str();
  cmd->add_option("--beta", f.params.beta, "Heuristic exponent")->capture_default_str();
  cmd->add_option("--rho", f.params.rho, "Trail persistence in (0,1)")->capture_default_str();
  cmd->add_option("--seed", f.params.seed, "Seed of run 0; run k uses seed+k")->capture_default_str();
  cmd->add_option("--runs", f.runs, "Independent runs")->capture_default_str();
  cmd->add_option("--threads", f.params.threads, "Decoder threads per solve")->capture_default_str();
}

void maybe_svg(const wil::LayoutFile& layout, const std::string& path) {
  if (!path.empty()) wil::write_file(path, wil::render_svg(layout));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted item layout: constructive placement and ant colony order search"};
  app.require_subcommand(1);

  // gen
  wil::GenerateSpec gen;
  std::string gen_kind = "circles";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", gen_kind, "circles or rects")
      ->check(CLI::IsMember({"circles", "rects"}))
      ->capture_default_str();
  gen_cmd->add_option("-n,--items", gen.n, "Number of items")->capture_default_str();
  gen_cmd->add_option("--size-min", gen.size.lo, "Minimum radius or edge")->capture_default_str();
  gen_cmd->add_option("--size-max", gen.size.hi, "Maximum radius or edge")->capture_default_str();
  gen_cmd->add_option("--mass-min", gen.mass.lo, "Minimum mass")->capture_default_str();
  gen_cmd->add_option("--mass-max", gen.mass.hi, "Maximum mass")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--name", gen.name, "Instance name");
  gen_cmd->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // solve
  ColonyFlags solve_flags;
  std::string solve_instance, solve_out, solve_report, solve_svg;
  auto* solve_cmd = app.add_subcommand("solve", "Search placement orders with AS or MMAS");
  solve_cmd->add_option("--instance", solve_instance, "Instance file")->required();
  solve_cmd->add_option("--algo", solve_flags.algo, "as or mmas")
      ->check(CLI::IsMember({"as", "mmas"}))
      ->capture_default_str();
  add_colony_flags(solve_cmd, solve_flags);
  solve_cmd->add_option("--out", solve_out, "Best layout file");
  solve_cmd->add_option("--report", solve_report, "Run report file (stdout if omitted)");
  solve_cmd->add_option("--svg", solve_svg, "Render the best layout to this SVG file");

  // oracle
  std::string oracle_instance, oracle_out, oracle_svg;
  std::size_t oracle_limit = 8;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decode every order of a small instance");
  oracle_cmd->add_option("--instance", oracle_instance, "Instance file")->required();
  oracle_cmd->add_option("--limit", oracle_limit, "Largest n accepted")->capture_default_str();
  oracle_cmd->add_option("--out", oracle_out, "Best layout file");
  oracle_cmd->add_option("--svg", oracle_svg, "Render the best layout to this SVG file");

  // render
  std::string render_layout, render_svg;
  auto* render_cmd = app.add_subcommand("render", "Render a layout file as SVG");
  render_cmd->add_option("--layout", render_layout, "Layout file")->required();
  render_cmd->add_option("--svg,--out", render_svg, "Output SVG")->required();

  // bench
  ColonyFlags bench_flags;
  std::vector<std::string> bench_instances;
  std::vector<std::string> bench_algos{"as", "mmas"};
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Tabulate r_best, r_average, t_average");
  bench_cmd->add_option("--instance", bench_instances, "Instance files")->required();
  bench_cmd->add_option("--algo", bench_algos, "Algorithms")
      ->check(CLI::IsMember({"as", "mmas"}))
      ->capture_default_str();
  add_colony_flags(bench_cmd, bench_flags);
  bench_cmd->add_option("--out", bench_out, "Machine-readable table (JSON)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      gen.kind = gen_kind == "circles" ? wil::ItemKind::Circles : wil::ItemKind::Rects;
      const std::string text = wil::write_instance(wil::generate_instance(gen));
      if (gen_out.empty())
        std::cout << text;
      else
        wil::write_file(gen_out, text);
    } else if (*solve_cmd) {
      const wil::InstanceFile inst = wil::parse_instance(solve_instance);
      solve_flags.params.variant = wil::parse_variant(solve_flags.algo);
      const auto res = wil::run_protocol(inst, solve_flags.params, solve_flags.runs);
      if (!solve_out.empty()) wil::write_file(solve_out, wil::write_layout(res.best_layout));
      maybe_svg(res.best_layout, solve_svg);
      const std::string report = wil::write_report(res.report);
      if (solve_report.empty())
        std::cout << report;
      else
        wil::write_file(solve_report, report);
    } else if (*oracle_cmd) {
      const wil::InstanceFile inst = wil::parse_instance(oracle_instance);
      wil::OracleOptions opts;
      opts.limit_n = oracle_limit;
      wil::LayoutFile best;
      wil::OracleResult res;
      if (inst.kind == wil::ItemKind::Circles) {
        res = wil::exhaustive_best_order(inst.circles, opts);
        best = {res.best_order, wil::place_circles(res.best_order, inst.circles.items)};
      } else {
        res = wil::exhaustive_best_order(inst.rects, opts);
        best = {res.best_order, wil::place_rects(res.best_order, inst.rects.items)};
      }
      std::printf("orders_evaluated %llu\nbest_envelope %.17g\nbest_order",
                  static_cast<unsigned long long>(res.orders_evaluated), res.best_envelope);
      for (int id : res.best_order) std::printf(" %d", id);
      std::printf("\n");
      if (!oracle_out.empty()) wil::write_file(oracle_out, wil::write_layout(best));
      maybe_svg(best, oracle_svg);
    } else if (*render_cmd) {
      wil::write_file(render_svg, wil::render_svg(wil::parse_layout(render_layout)));
    } else if (*bench_cmd) {
      std::vector<wil::InstanceFile> instances;
      for (const auto& path : bench_instances) instances.push_back(wil::parse_instance(path));
      std::vector<wil::AcoVariant> algos;
      for (const auto& a : bench_algos) algos.push_back(wil::parse_variant(a));
      const auto rows = wil::run_bench(instances, algos, bench_flags.params, bench_flags.runs);
      std::cout << wil::bench_table(rows);
      if (!bench_out.empty()) wil::write_file(bench_out, wil::bench_json(rows));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
