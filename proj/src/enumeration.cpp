#include "bundlebid/enumeration.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bundlebid {

namespace {

// Non-ascending demand, ascending id on ties.
std::vector<int> demand_order(const Instance& instance) {
  std::vector<int> order(instance.num_requests());
  for (int i = 0; i < instance.num_requests(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.demand(a) > instance.demand(b);
  });
  return order;
}

void descend(const Instance& instance, const std::vector<int>& order,
             size_t level, RequestSet current, int64_t load,
             std::vector<ElementarySet>& out) {
  if (level == order.size()) {
    if (!current.empty()) out.push_back({current, load});
    return;
  }
  int id = order[level];
  int64_t next_load = load + instance.demand(id);
  if (next_load <= instance.cap())
    descend(instance, order, level + 1, current.with(id), next_load, out);
  descend(instance, order, level + 1, current, load, out);
}

}  // namespace

std::vector<ElementarySet> enumerate_elementary(const Instance& instance) {
  std::vector<ElementarySet> out;
  descend(instance, demand_order(instance), 0, RequestSet{}, 0, out);
  return out;
}

std::vector<ElementarySet> enumerate_supersets(const Instance& instance,
                                               RequestSet root,
                                               bool strict_supersets) {
  int64_t root_load = instance.demand_of(root);
  if (root_load > instance.cap())
    throw RootNotElementary("root demand " + std::to_string(root_load) +
                            " exceeds capacity " +
                            std::to_string(instance.cap()));
  std::vector<int> order;
  for (int id : demand_order(instance))
    if (!root.contains(id)) order.push_back(id);

  std::vector<ElementarySet> out;
  descend(instance, order, 0, root, root_load, out);
  if (root.empty()) return out;  // degenerate root: plain enumeration
  if (strict_supersets)
    std::erase_if(out, [&](const ElementarySet& e) { return e.requests == root; });
  return out;
}

std::vector<Bid> price_sets(const std::vector<ElementarySet>& sets,
                            const PricingContext& pricing,
                            const std::string& carrier, bool parallel) {
  std::vector<Bid> bids(sets.size());
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sets.size()); ++i) {
    try {
      bids[i] = Bid{carrier, sets[i].requests, pricing.price(sets[i].requests)};
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::sort(bids.begin(), bids.end(), [](const Bid& a, const Bid& b) {
    return std::pair(a.requests.size(), a.requests.mask()) <
           std::pair(b.requests.size(), b.requests.mask());
  });
  return bids;
}

std::vector<Bid> ebbs_bids(const Instance& instance,
                           const PricingContext& pricing,
                           const std::string& carrier, bool parallel) {
  return price_sets(enumerate_elementary(instance), pricing, carrier, parallel);
}

namespace {

// Depth-first exact partition search. Bids are bucketed by their lowest
// member so each level branches only on bids that can cover the lowest
// uncovered request.
struct PartitionSearch {
  const std::vector<const Bid*>* by_lowest;
  int64_t best = std::numeric_limits<int64_t>::max();

  void run(RequestSet remaining, int64_t cost) {
    if (cost >= best) return;
    if (remaining.empty()) {
      best = cost;
      return;
    }
    int low = remaining.lowest();
    for (const Bid* b : by_lowest[low]) {
      if (!remaining.contains_all(b->requests)) continue;
      run(remaining.minus(b->requests), cost + b->price);
    }
  }
};

}  // namespace

int64_t infer_price(const std::vector<Bid>& bids, RequestSet target) {
  if (target.empty()) return 0;
  std::vector<std::vector<const Bid*>> by_lowest(64);
  for (const Bid& b : bids)
    if (!b.requests.empty() && target.contains_all(b.requests))
      by_lowest[b.requests.lowest()].push_back(&b);
  for (auto& bucket : by_lowest)
    std::sort(bucket.begin(), bucket.end(),
              [](const Bid* a, const Bid* b) { return a->price < b->price; });

  PartitionSearch search{by_lowest.data()};
  search.run(target, 0);
  if (search.best == std::numeric_limits<int64_t>::max())
    throw NoPartitionExists("no exact partition of the target set from the given bids");
  return search.best;
}

}  // namespace bundlebid
