#include "helpers.hpp"

#include "bundlebid/tsp.hpp"

namespace testutil {

Instance random_instance(int n, int64_t cap, uint64_t seed, int64_t demand_lo,
                         int64_t demand_hi, int32_t extent) {
  CvrpData src = synthetic_source(n, cap, demand_lo, demand_hi, extent, seed);
  return Instance(src.depot, std::move(src.customers), cap);
}

std::vector<uint64_t> powerset_elementary(const Instance& instance) {
  int n = instance.num_requests();
  std::vector<uint64_t> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask)
    if (instance.elementary(RequestSet(mask))) out.push_back(mask);
  return out;
}

Scenario random_scenario(int n, int64_t cap, int rivals, uint64_t seed,
                         int64_t demand_lo, int64_t demand_hi) {
  Instance instance = random_instance(n, cap, seed, demand_lo, demand_hi);
  PricingContext pricing(instance);
  GenConfig cfg;
  cfg.rival_bid_count = rivals;
  cfg.seed = seed;
  std::vector<Bid> rival_bids = generate_rival_bids(instance, cfg, pricing);
  return Scenario{std::move(instance), std::move(rival_bids), seed};
}

}  // namespace testutil
