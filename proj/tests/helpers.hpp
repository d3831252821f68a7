#pragma once

#include <vector>

#include "bundlebid/instance_gen.hpp"
#include "bundlebid/model.hpp"
#include "bundlebid/rng.hpp"

namespace testutil {

using namespace bundlebid;

// Random instance on a grid: n customers, demands in [demand_lo, demand_hi].
Instance random_instance(int n, int64_t cap, uint64_t seed,
                         int64_t demand_lo = 1, int64_t demand_hi = 10,
                         int32_t extent = 50);

// All nonempty subsets with total demand <= cap, by brute powerset filter.
std::vector<uint64_t> powerset_elementary(const Instance& instance);

// Random scenario with rival bids, for auction-level tests.
Scenario random_scenario(int n, int64_t cap, int rivals, uint64_t seed,
                         int64_t demand_lo = 2, int64_t demand_hi = 10);

}  // namespace testutil
