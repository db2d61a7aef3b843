#include "wil/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "wil/opt_circle.hpp"
#include "wil/opt_rect.hpp"

namespace wil {

namespace {

template <class Item, class Decode>
OracleResult enumerate(std::span<const Item> items, const OracleOptions& options,
                       const Decode& decode) {
  const std::size_t n = items.size();
  if (n > options.limit_n) throw Error("instance too large for oracle");
  const double eps = tolerance_for(items);

  OracleResult result;
  if (options.keep_distribution) result.full_distribution.emplace();

  std::vector<double> envelopes;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  do {
    const double env = decode(order).envelope_radius;
    envelopes.push_back(env);
    if (result.full_distribution) result.full_distribution->emplace_back(order, env);
  } while (std::next_permutation(order.begin(), order.end()));
  result.orders_evaluated = envelopes.size();
  result.best_envelope = *std::min_element(envelopes.begin(), envelopes.end());

  // First order in lexicographic sequence that ties the minimum within eps.
  std::iota(order.begin(), order.end(), 1);
  for (double env : envelopes) {
    if (env <= result.best_envelope + eps) break;
    std::next_permutation(order.begin(), order.end());
  }
  result.best_order = order;
  return result;
}

}  // namespace

OracleResult exhaustive_best_order(const CircleInstance& instance, const OracleOptions& options) {
  validate(instance);
  const std::span<const CircleItem> items = instance.items;
  return enumerate(items, options, [items](const std::vector<int>& o) { return place_circles(o, items); });
}

OracleResult exhaustive_best_order(const RectInstance& instance, const OracleOptions& options) {
  validate(instance);
  const std::span<const RectItem> items = instance.items;
  return enumerate(items, options, [items](const std::vector<int>& o) { return place_rects(o, items); });
}

}  // namespace wil
