#pragma once

#include <optional>
#include <vector>

#include "bundlebid/enumeration.hpp"

namespace bundlebid {

struct CapacityViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoFeasiblePair : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kPmpExactLimit = 12;
constexpr double kDefaultAlpha = 0.10;

enum class ClusterOrigin { PSC, CPMC, RANN };

struct SynergyPair {
  int i, j;  // i < j
  int64_t sigma;
  bool operator==(const SynergyPair&) const = default;
};

struct ClusterSet {
  std::vector<RequestSet> clusters;
  ClusterOrigin origin;
};

struct PmpSolution {
  std::vector<int> medians;          // ascending
  std::vector<int> assignment;       // request id -> median id
  int64_t objective = 0;
  bool exact = true;
};

// Clarke-Wright distance saving times idle vehicle capacity.
int64_t pair_synergy(const Instance& instance, int i, int j);

// Every capacity-feasible pair with its synergy, sorted by (-sigma, i, j).
std::vector<SynergyPair> synergy_pairs(const Instance& instance);

// All capacity-feasible pairs whose synergy ranks in the top
// ceil(alpha * #pairs); ties at the cutoff value are all included.
ClusterSet psc_clusters(const Instance& instance, double alpha = kDefaultAlpha);

// ceil(total demand / cap)
int64_t min_medians(const Instance& instance);

// Capacitated p-median. Exact branch-and-bound up to exact_limit requests,
// documented seeded local-search heuristic beyond (solution flagged
// non-exact).
PmpSolution solve_pmp(const Instance& instance, int64_t p,
                      int exact_limit = kPmpExactLimit, uint64_t seed = 1);

// The p = min_medians assignment groups of the PMP solution; a partition of
// the requests into elementary clusters.
ClusterSet cpmc_clusters(const Instance& instance,
                         int exact_limit = kPmpExactLimit, uint64_t seed = 1);

// |R| random bids, each grown uniformly without replacement until the next
// draw would exceed capacity; duplicates collapsed. duplicates_collapsed, if
// given, receives the number of dropped duplicate sets.
std::vector<Bid> ran_bids(const Instance& instance,
                          const PricingContext& pricing, uint64_t seed,
                          const std::string& carrier = "focal",
                          int* duplicates_collapsed = nullptr);

// The same drawing procedure, unpriced, as roots for superset enumeration.
ClusterSet rann_clusters(const Instance& instance, uint64_t seed);

// General heuristic strategy: union of elementary supersets of the given
// roots, one TSP-priced bid per generated set.
std::vector<Bid> heuristic_bids(const Instance& instance,
                                const ClusterSet& clusters,
                                const PricingContext& pricing,
                                const std::string& carrier = "focal",
                                bool parallel = true);

}  // namespace bundlebid
