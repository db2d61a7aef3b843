#include "wil/aco.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "wil/opt_circle.hpp"
#include "wil/opt_rect.hpp"

namespace wil {

void validate(const AcoParams& p) {
  if (p.ants < 1) throw Error("ants must be >= 1");
  if (p.iterations < 1) throw Error("iterations must be >= 1");
  if (!(p.rho > 0.0 && p.rho < 1.0)) throw Error("rho must lie in (0, 1)");
  if (!(p.alpha >= 0.0) || !(p.beta >= 0.0)) throw Error("alpha and beta must be >= 0");
  if (p.threads < 1) throw Error("threads must be >= 1");
}

PheromoneModel::PheromoneModel(std::size_t items, double initial, bool clamping_enabled,
                               double tau_min, double tau_max)
    : items_(items),
      trails_((items + 1) * items, initial),
      clamping_(clamping_enabled),
      tau_min_(tau_min),
      tau_max_(tau_max) {
  if (items == 0) throw Error("pheromone model needs at least one item");
  if (!(initial > 0.0) || !std::isfinite(initial)) throw Error("initial trail must be positive");
  if (clamping_ && !(tau_min > 0.0 && tau_min <= tau_max))
    throw Error("need 0 < tau_min <= tau_max");
  if (clamping_) clamp();
}

PheromoneModel PheromoneModel::for_variant(std::size_t items, AcoVariant variant) {
  const double n = static_cast<double>(items);
  return PheromoneModel(items, 1.0 / n, variant == AcoVariant::MMAS, 0.1 / n, 10.0 / n);
}

void PheromoneModel::decay(double rho) {
  for (double& t : trails_) t *= rho;
}

void PheromoneModel::deposit(std::span<const int> order, double amount) {
  int from = 0;
  for (int to : order) {
    at(from, to) += amount;
    from = to;
    ++deposit_ops_;
  }
}

void PheromoneModel::clamp() {
  for (double& t : trails_) t = std::clamp(t, tau_min_, tau_max_);
}

std::vector<double> heuristic_eta(std::span<const CircleItem> items) {
  std::vector<double> eta;
  eta.reserve(items.size());
  for (const auto& it : items) eta.push_back(it.mass * it.radius);
  return eta;
}

std::vector<double> heuristic_eta(std::span<const RectItem> items) {
  std::vector<double> eta;
  eta.reserve(items.size());
  for (const auto& it : items) eta.push_back(it.mass * it.envelope_radius());
  return eta;
}

namespace {

double weight(double tau, double eta, double alpha, double beta) {
  const double a = alpha == 1.0 ? tau : std::pow(tau, alpha);
  const double b = beta == 1.0 ? eta : std::pow(eta, beta);
  return a * b;
}

}  // namespace

std::vector<double> transition_probabilities(const PheromoneModel& pheromone,
                                             std::span<const double> eta, int current,
                                             std::span<const int> allowed, double alpha,
                                             double beta) {
  if (allowed.empty()) throw Error("no allowed items");
  std::vector<double> p;
  p.reserve(allowed.size());
  double total = 0.0;
  for (int j : allowed) {
    const double w = weight(pheromone.at(current, j), eta[j - 1], alpha, beta);
    if (!std::isfinite(w) || w < 0.0) throw Error("non-finite transition weight");
    p.push_back(w);
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw Error("non-finite transition weight");
  for (double& v : p) v /= total;
  return p;
}

AntRng::AntRng(std::uint64_t seed, std::uint64_t iteration, std::uint64_t ant) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(ant)};
  engine_.seed(seq);
}

double AntRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<int> construct_order(const PheromoneModel& pheromone, std::span<const double> eta,
                                 double alpha, double beta, AntRng& rng,
                                 const DistributionObserver& observer) {
  const int n = static_cast<int>(pheromone.items());
  std::vector<int> allowed(n);
  for (int j = 0; j < n; ++j) allowed[j] = j + 1;

  std::vector<int> order;
  order.reserve(n);
  int current = 0;
  while (!allowed.empty()) {
    const auto p = transition_probabilities(pheromone, eta, current, allowed, alpha, beta);
    if (observer) observer(p);
    const double u = rng.uniform();
    std::size_t pick = p.size() - 1;
    double cum = 0.0;
    for (std::size_t s = 0; s < p.size(); ++s) {
      cum += p[s];
      if (u < cum) {
        pick = s;
        break;
      }
    }
    current = allowed[pick];
    order.push_back(current);
    allowed.erase(allowed.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return order;
}

namespace {

void require_positive_length(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) throw Error("tour length must be positive");
}

}  // namespace

void as_update(PheromoneModel& pheromone, std::span<const Tour> tours, double rho, double q) {
  for (const auto& t : tours) require_positive_length(t.length);
  pheromone.decay(rho);
  for (const auto& t : tours) pheromone.deposit(t.order, q / t.length);
  if (pheromone.clamping_enabled()) pheromone.clamp();
}

void mmas_update(PheromoneModel& pheromone, const Tour& best, double rho, double q) {
  require_positive_length(best.length);
  if (!pheromone.clamping_enabled()) throw Error("MMAS update needs clamping bounds");
  pheromone.decay(rho);
  pheromone.deposit(best.order, q / best.length);
  pheromone.clamp();
}

namespace {

// Decodes ant orders into slots; the work split never affects the result.
template <class LayoutT, class Decode>
void decode_all(const std::vector<std::vector<int>>& orders, std::vector<LayoutT>& out,
                const Decode& decode, int threads) {
  out.resize(orders.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), orders.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < orders.size(); ++k) out[k] = decode(orders[k]);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < orders.size(); k += workers) out[k] = decode(orders[k]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class LayoutT, class Item, class Decode>
SolveResult<LayoutT> run_colony(std::span<const Item> items, const AcoParams& params,
                                const SolveHooks& hooks, const Decode& decode) {
  validate(params);
  const std::size_t n = items.size();
  const std::vector<double> eta = heuristic_eta(items);
  PheromoneModel pheromone = PheromoneModel::for_variant(n, params.variant);

  SolveResult<LayoutT> result;
  result.best_envelope = std::numeric_limits<double>::infinity();
  result.per_iteration_best.reserve(static_cast<std::size_t>(params.iterations));

  std::vector<std::vector<int>> orders(static_cast<std::size_t>(params.ants));
  std::vector<LayoutT> layouts;
  std::vector<Tour> tours(orders.size());

  for (int t = 0; t < params.iterations; ++t) {
    for (int k = 0; k < params.ants; ++k) {
      AntRng rng(params.seed, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(k));
      orders[k] = construct_order(pheromone, eta, params.alpha, params.beta, rng,
                                  hooks.on_distribution);
    }
    decode_all(orders, layouts, decode, params.threads);
    result.construction_count += orders.size();

    std::size_t iter_best = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      tours[k] = {orders[k], layouts[k].envelope_radius};
      if (tours[k].length < tours[iter_best].length) iter_best = k;
      if (tours[k].length < result.best_envelope) {
        result.best_envelope = tours[k].length;
        result.best_order = orders[k];
        result.best_layout = layouts[k];
      }
    }
    result.per_iteration_best.push_back(result.best_envelope);

    // Q tracks the best envelope found so far.
    const double q = result.best_envelope;
    if (params.variant == AcoVariant::AS) {
      as_update(pheromone, tours, params.rho, q);
    } else {
      const Tour best = params.mmas_deposit == MmasDeposit::GlobalBest
                            ? Tour{result.best_order, result.best_envelope}
                            : tours[iter_best];
      mmas_update(pheromone, best, params.rho, q);
    }
    if (hooks.on_update) hooks.on_update(pheromone);
  }
  result.deposit_operations = pheromone.deposit_operations();
  return result;
}

}  // namespace

SolveResult<CircleLayout> solve(const CircleInstance& instance, const AcoParams& params,
                                const SolveHooks& hooks) {
  validate(instance);
  const std::span<const CircleItem> items = instance.items;
  return run_colony<CircleLayout>(items, params, hooks, [items](const std::vector<int>& order) {
    return place_circles(order, items);
  });
}

SolveResult<RectLayout> solve(const RectInstance& instance, const AcoParams& params,
                              const SolveHooks& hooks) {
  validate(instance);
  const std::span<const RectItem> items = instance.items;
  return run_colony<RectLayout>(items, params, hooks, [items](const std::vector<int>& order) {
    return place_rects(order, items);
  });
}

}  // namespace wil
