#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "wil/generate.hpp"
#include "wil/opt_circle.hpp"
#include "wil/opt_rect.hpp"
#include "wil/oracle.hpp"

using namespace wil;

TEST_CASE("four unit circles") {
  CircleInstance inst;
  for (int i = 1; i <= 4; ++i) inst.items.push_back({i, 1.0, 1.0});
  const OracleResult r = exhaustive_best_order(inst);
  CHECK(r.orders_evaluated == 24);
  CHECK(r.best_envelope == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r.best_order == std::vector<int>{1, 2, 3, 4});
  CHECK_FALSE(r.full_distribution.has_value());
}

TEST_CASE("two unit squares") {
  RectInstance inst{{{1, 1.0, 1.0, 1.0}, {2, 1.0, 1.0, 1.0}}};
  const OracleResult r = exhaustive_best_order(inst);
  CHECK(r.orders_evaluated == 2);
  CHECK(r.best_envelope == doctest::Approx(std::sqrt(5.0) / 2));
}

TEST_CASE("oracle minimum agrees with a direct scan") {
  GenerateSpec g;
  g.n = 6;
  g.seed = 12;
  const InstanceFile inst = generate_instance(g);
  OracleOptions opt;
  opt.keep_distribution = true;
  const OracleResult r = exhaustive_best_order(inst.circles, opt);
  REQUIRE(r.full_distribution.has_value());
  CHECK(r.full_distribution->size() == 720);

  std::vector<int> order(6);
  std::iota(order.begin(), order.end(), 1);
  double best = INFINITY;
  std::vector<int> first;
  do {
    const double e = place_circles(order, inst.circles.items).envelope_radius;
    if (e < best) best = e;
  } while (std::next_permutation(order.begin(), order.end()));
  std::iota(order.begin(), order.end(), 1);
  const double eps = tolerance_for(inst.circles.items);
  do {
    if (place_circles(order, inst.circles.items).envelope_radius <= best + eps) {
      first = order;
      break;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  CHECK(r.best_envelope == best);
  CHECK(r.best_order == first);
  CHECK(r.full_distribution->front().first == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("size limit") {
  GenerateSpec g;
  g.n = 9;
  const InstanceFile inst = generate_instance(g);
  CHECK_THROWS_AS(exhaustive_best_order(inst.circles), Error);
  OracleOptions opt;
  opt.limit_n = 3;
  g.n = 4;
  CHECK_THROWS_AS(exhaustive_best_order(generate_instance(g).circles, opt), Error);
}
