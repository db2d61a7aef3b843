#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "wil/layout.hpp"

namespace wil {

enum class AcoVariant { AS, MMAS };

// Which ant reinforces the trail in MMAS.
enum class MmasDeposit { GlobalBest, IterationBest };

struct AcoParams {
  AcoVariant variant = AcoVariant::MMAS;
  int ants = 20;
  int iterations = 100;
  double alpha = 1.0;
  double beta = 1.0;
  double rho = 0.9;  // persistence: tau <- rho * tau + deposits
  std::uint64_t seed = 1;
  int threads = 1;
  MmasDeposit mmas_deposit = MmasDeposit::GlobalBest;
};

void validate(const AcoParams& params);

// Trail matrix with one row per "from" node and one column per item. Row 0
// is the virtual start node; row r > 0 belongs to item id r.
class PheromoneModel {
 public:
  PheromoneModel(std::size_t items, double initial, bool clamping_enabled, double tau_min,
                 double tau_max);

  // All trails at 1/n. MMAS clamps into [0.1/n, 10/n].
  static PheromoneModel for_variant(std::size_t items, AcoVariant variant);

  std::size_t items() const { return items_; }
  double at(int from, int to_item) const { return trails_[index(from, to_item)]; }
  double& at(int from, int to_item) { return trails_[index(from, to_item)]; }
  std::span<const double> trails() const { return trails_; }

  double tau_min() const { return tau_min_; }
  double tau_max() const { return tau_max_; }
  bool clamping_enabled() const { return clamping_; }

  void decay(double rho);
  // Adds `amount` on (0, order[0]) and every consecutive (order[k], order[k+1]).
  void deposit(std::span<const int> order, double amount);
  void clamp();

  // Number of single-edge deposits applied so far.
  std::uint64_t deposit_operations() const { return deposit_ops_; }

 private:
  std::size_t index(int from, int to_item) const {
    return static_cast<std::size_t>(from) * items_ + static_cast<std::size_t>(to_item - 1);
  }

  std::size_t items_;
  std::vector<double> trails_;
  bool clamping_;
  double tau_min_;
  double tau_max_;
  std::uint64_t deposit_ops_ = 0;
};

// eta_j = m_j * r_j, indexed by id - 1. Rectangles use their circumscribed radius.
std::vector<double> heuristic_eta(std::span<const CircleItem> items);
std::vector<double> heuristic_eta(std::span<const RectItem> items);

// Probability of moving from `current` to each entry of `allowed` (item ids).
std::vector<double> transition_probabilities(const PheromoneModel& pheromone,
                                             std::span<const double> eta, int current,
                                             std::span<const int> allowed, double alpha,
                                             double beta);

// Independent, reproducible stream per (seed, iteration, ant).
class AntRng {
 public:
  AntRng(std::uint64_t seed, std::uint64_t iteration, std::uint64_t ant);
  explicit AntRng(std::uint64_t seed) : AntRng(seed, 0, 0) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::mt19937_64 engine_;
};

using DistributionObserver = std::function<void(std::span<const double>)>;

std::vector<int> construct_order(const PheromoneModel& pheromone, std::span<const double> eta,
                                 double alpha, double beta, AntRng& rng,
                                 const DistributionObserver& observer = {});

struct Tour {
  std::vector<int> order;
  double length = 0.0;  // envelope radius of the decoded layout
};

void as_update(PheromoneModel& pheromone, std::span<const Tour> tours, double rho, double q);
void mmas_update(PheromoneModel& pheromone, const Tour& best, double rho, double q);

template <class LayoutT>
struct SolveResult {
  LayoutT best_layout;
  std::vector<int> best_order;
  double best_envelope = 0.0;
  std::vector<double> per_iteration_best;  // global best after each iteration
  std::uint64_t construction_count = 0;
  std::uint64_t deposit_operations = 0;
};

struct SolveHooks {
  DistributionObserver on_distribution;
  std::function<void(const PheromoneModel&)> on_update;
};

SolveResult<CircleLayout> solve(const CircleInstance& instance, const AcoParams& params,
                                const SolveHooks& hooks = {});
SolveResult<RectLayout> solve(const RectInstance& instance, const AcoParams& params,
                              const SolveHooks& hooks = {});

}  // namespace wil
