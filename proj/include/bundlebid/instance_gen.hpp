#pragma once

#include <vector>

#include "bundlebid/model.hpp"
#include "bundlebid/tsp.hpp"

namespace bundlebid {

struct GenConfig {
  int m = 0;                  // requests to keep from the source
  int64_t cap = 0;            // 0 = take capacity from the source
  int rival_bid_count = 0;
  double jitter_lo = 0.7;
  double jitter_hi = 1.3;
  int rival_carriers = 5;     // bookkeeping only, round-robin ids
  uint64_t seed = 0;
};

// Per-bid sampling record, exposed for the uniformity checks.
struct RivalDraw {
  double cap_factor;  // u in (0,1), cap' = cap * u
  double jitter;      // v in [jitter_lo, jitter_hi]
};

// Synthetic rival bids per the seeded procedure: capacity randomly reduced,
// requests drawn without replacement until the first violating draw, price =
// round(TSP tour length * jitter), clamped to >= 1. Bid k comes from PRNG
// stream k, so the list is identical regardless of generation order.
std::vector<Bid> generate_rival_bids(const Instance& instance,
                                     const GenConfig& cfg,
                                     const PricingContext& pricing,
                                     std::vector<RivalDraw>* draws = nullptr);

Scenario generate_scenario(const CvrpData& source, const GenConfig& cfg);

// Uniform synthetic source on a square grid, for desk-scale experiments
// without the published CVRP files.
CvrpData synthetic_source(int customers, int64_t cap, int64_t demand_lo,
                          int64_t demand_hi, int32_t extent, uint64_t seed);

}  // namespace bundlebid
