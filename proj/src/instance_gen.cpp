#include "bundlebid/instance_gen.hpp"

#include <cmath>
#include <numeric>

#include "bundlebid/rng.hpp"

namespace bundlebid {

namespace {

// Draw one rival set against the reduced capacity cap' = cap * u. A first
// draw that already violates cap' would yield an empty (meaningless) bid, so
// the whole draw is retried from the same stream.
RequestSet draw_rival_set(const Instance& instance, SplitMix64& rng,
                          double* cap_factor) {
  int n = instance.num_requests();
  bool first = true;
  for (;;) {
    double u = rng.next_unit();
    if (u == 0.0) continue;  // open interval (0,1)
    // report the unconditioned first sample, so statistics on the recorded
    // draws are not biased by the empty-set retries
    if (first && cap_factor) *cap_factor = u;
    first = false;
    double reduced_cap = static_cast<double>(instance.cap()) * u;
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    RequestSet set;
    int64_t load = 0;
    while (!remaining.empty()) {
      size_t idx = rng.next_below(remaining.size());
      int r = remaining[idx];
      if (static_cast<double>(load + instance.demand(r)) > reduced_cap) break;
      load += instance.demand(r);
      set = set.with(r);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    if (!set.empty()) return set;
  }
}

}  // namespace

std::vector<Bid> generate_rival_bids(const Instance& instance,
                                     const GenConfig& cfg,
                                     const PricingContext& pricing,
                                     std::vector<RivalDraw>* draws) {
  std::vector<Bid> bids(cfg.rival_bid_count);
  if (draws) draws->assign(cfg.rival_bid_count, RivalDraw{});
  for (int k = 0; k < cfg.rival_bid_count; ++k) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<uint64_t>(k));
    double cap_factor = 0;
    RequestSet set = draw_rival_set(instance, rng, &cap_factor);
    double jitter =
        cfg.jitter_lo + (cfg.jitter_hi - cfg.jitter_lo) * rng.next_unit();
    int64_t tour = pricing.price(set);
    int64_t price = std::llround(static_cast<double>(tour) * jitter);
    if (price < 1) price = 1;
    int carrier_slot = cfg.rival_carriers > 0 ? k % cfg.rival_carriers : 0;
    bids[k] = Bid{"rival" + std::to_string(carrier_slot + 1), set, price};
    if (draws) (*draws)[k] = RivalDraw{cap_factor, jitter};
  }
  return bids;
}

Scenario generate_scenario(const CvrpData& source, const GenConfig& cfg) {
  CvrpData data = truncate_cvrp(source, cfg.m);
  int64_t cap = cfg.cap > 0 ? cfg.cap : data.cap;
  Instance instance(data.depot, std::move(data.customers), cap);
  PricingContext pricing(instance);
  std::vector<Bid> rivals = generate_rival_bids(instance, cfg, pricing);
  return Scenario{std::move(instance), std::move(rivals), cfg.seed};
}

CvrpData synthetic_source(int customers, int64_t cap, int64_t demand_lo,
                          int64_t demand_hi, int32_t extent, uint64_t seed) {
  SplitMix64 rng = SplitMix64::stream(seed, 0x5e11);
  CvrpData data;
  data.cap = cap;
  data.depot = {static_cast<int32_t>(rng.next_below(extent + 1)),
                static_cast<int32_t>(rng.next_below(extent + 1))};
  for (int i = 0; i < customers; ++i) {
    Point p{static_cast<int32_t>(rng.next_below(extent + 1)),
            static_cast<int32_t>(rng.next_below(extent + 1))};
    int64_t demand =
        demand_lo + static_cast<int64_t>(
                        rng.next_below(static_cast<uint64_t>(demand_hi - demand_lo + 1)));
    data.customers.emplace_back(p, demand);
  }
  return data;
}

}  // namespace bundlebid
