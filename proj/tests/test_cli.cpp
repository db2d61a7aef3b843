#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "wil/io.hpp"

using namespace wil;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string output;  // stdout and stderr
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + WIL_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "wil_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("gen writes a reproducible instance") {
  const fs::path dir = scratch();
  const Run a = cli("gen --kind rects -n 6 --seed 4");
  REQUIRE(a.status == 0);
  const InstanceFile inst = parse_instance_text(a.output);
  CHECK(inst.kind == ItemKind::Rects);
  CHECK(inst.size() == 6);

  REQUIRE(cli("gen --kind rects -n 6 --seed 4 --out " + (dir / "r6.json").string()).status == 0);
  CHECK(parse_instance(dir / "r6.json") == inst);
}

TEST_CASE("solve, render and oracle") {
  const fs::path dir = scratch();
  const std::string inst = (dir / "c6.json").string();
  REQUIRE(cli("gen -n 6 --seed 8 --out " + inst).status == 0);

  const Run s = cli("solve --instance " + inst + " --algo as --ants 4 --iters 5 --runs 2 --out " +
                    (dir / "best.json").string() + " --svg " + (dir / "best.svg").string());
  REQUIRE(s.status == 0);
  const json report = json::parse(s.output);
  CHECK(report["algorithm"] == "as");
  CHECK(report["runs"] == 2);
  const LayoutFile best = parse_layout(dir / "best.json");
  CHECK(best.envelope_radius() == report["r_best"].get<double>());
  CHECK(fs::file_size(dir / "best.svg") > 0);

  const Run r = cli("render --layout " + (dir / "best.json").string() + " --svg " + (dir / "again.svg").string());
  CHECK(r.status == 0);
  CHECK(read_file(dir / "again.svg") == read_file(dir / "best.svg"));

  const Run o = cli("oracle --instance " + inst + " --out " + (dir / "opt.json").string());
  REQUIRE(o.status == 0);
  CHECK(o.output.find("orders_evaluated") != std::string::npos);
  CHECK(o.output.find("720") != std::string::npos);
  CHECK(parse_layout(dir / "opt.json").envelope_radius() <= best.envelope_radius() + 1e-9);
}

TEST_CASE("bench") {
  const fs::path dir = scratch();
  const std::string a = (dir / "b1.json").string(), b = (dir / "b2.json").string();
  REQUIRE(cli("gen -n 5 --seed 1 --out " + a).status == 0);
  REQUIRE(cli("gen --kind rects -n 5 --seed 2 --out " + b).status == 0);
  const Run r = cli("bench --instance " + a + " " + b + " --ants 3 --iters 3 --runs 2 --out " +
                    (dir / "bench.json").string());
  REQUIRE(r.status == 0);
  CHECK(r.output.find("r_average") != std::string::npos);
  CHECK(json::parse(read_file(dir / "bench.json")).size() == 4);
}

TEST_CASE("errors exit with status 1 and a message") {
  const fs::path dir = scratch();
  Run r = cli("solve --instance " + (dir / "missing.json").string());
  CHECK(r.status == 1);
  CHECK(r.output.find("error:") != std::string::npos);

  write_file(dir / "bad.json", R"({"kind":"circles","items":[{"r":0,"m":1}]})");
  r = cli("solve --instance " + (dir / "bad.json").string());
  CHECK(r.status == 1);
  CHECK(r.output.find("items[0].r: must be positive") != std::string::npos);

  REQUIRE(cli("gen -n 9 --out " + (dir / "c9.json").string()).status == 0);
  r = cli("oracle --instance " + (dir / "c9.json").string());
  CHECK(r.status == 1);
  CHECK(r.output.find("too large") != std::string::npos);

  r = cli("solve --instance " + (dir / "c9.json").string() + " --algo tabu");
  CHECK(r.status != 0);
  r = cli("solve --instance " + (dir / "c9.json").string() + " --rho 1.5");
  CHECK(r.status == 1);
}
