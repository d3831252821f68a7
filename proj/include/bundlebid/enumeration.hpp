#pragma once

#include <vector>

#include "bundlebid/tsp.hpp"

namespace bundlebid {

struct RootNotElementary : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoPartitionExists : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ElementarySet {
  RequestSet requests;
  int64_t total_demand = 0;
  bool operator==(const ElementarySet&) const = default;
};

// All nonempty subsets whose total demand fits one vehicle, generated by a
// capacity-pruned binary tree search: requests visited in non-ascending
// demand order (id as tie-break), include branch first, an include child
// over capacity is cut with its whole subtree.
std::vector<ElementarySet> enumerate_elementary(const Instance& instance);

// Same search with the root's members fixed as included. The root itself is
// part of the output unless strict_supersets is set.
std::vector<ElementarySet> enumerate_supersets(const Instance& instance,
                                               RequestSet root,
                                               bool strict_supersets = false);

// Exact bidding strategy: one bid per elementary combination, TSP-priced.
// Output sorted by (set size, mask). Pricing fans out over OpenMP threads
// when parallel is set; results are identical either way.
std::vector<Bid> ebbs_bids(const Instance& instance,
                           const PricingContext& pricing,
                           const std::string& carrier = "focal",
                           bool parallel = true);

// Price the target as the cheapest partition of it into submitted bid sets
// (exact depth-first search).
int64_t infer_price(const std::vector<Bid>& bids, RequestSet target);

// Shared helper: price each set via the context, optionally in parallel,
// then emit bids sorted by (size, mask).
std::vector<Bid> price_sets(const std::vector<ElementarySet>& sets,
                            const PricingContext& pricing,
                            const std::string& carrier, bool parallel);

}  // namespace bundlebid
