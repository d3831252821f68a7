#include "bundlebid/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bundlebid/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bundlebid;

namespace {

Instance demands_instance(std::vector<int64_t> demands, int64_t cap) {
  std::vector<std::pair<Point, int64_t>> customers;
  int32_t x = 1;
  for (int64_t d : demands) customers.push_back({{x++, 0}, d});
  return Instance({0, 0}, std::move(customers), cap);
}

std::set<uint64_t> masks_of(const std::vector<ElementarySet>& sets) {
  std::set<uint64_t> out;
  for (const auto& e : sets) out.insert(e.requests.mask());
  return out;
}

}  // namespace

TEST_CASE("hand enumeration, demands [2,2,3] cap 4") {
  Instance inst = demands_instance({2, 2, 3}, 4);
  auto sets = enumerate_elementary(inst);
  CHECK(sets.size() == 4);
  CHECK(masks_of(sets) ==
        std::set<uint64_t>{0b001, 0b010, 0b100, 0b011});
}

TEST_CASE("no pruning yields the full powerset") {
  Instance inst = demands_instance({1, 1, 1, 1, 1}, 10);
  CHECK(enumerate_elementary(inst).size() == 31);
}

TEST_CASE("enumeration equals powerset filter oracle") {
  SplitMix64 rng(77);
  for (int t = 0; t < 30; ++t) {
    Instance inst = testutil::random_instance(12, 18, rng.next(), 1, 8);
    auto sets = enumerate_elementary(inst);
    auto oracle = testutil::powerset_elementary(inst);
    CHECK(sets.size() == oracle.size());
    CHECK(masks_of(sets) ==
          std::set<uint64_t>(oracle.begin(), oracle.end()));
    for (const auto& e : sets) {
      CHECK(e.total_demand == inst.demand_of(e.requests));
      CHECK(e.total_demand <= inst.cap());
    }
  }
}

TEST_CASE("deterministic order and no duplicates") {
  Instance inst = testutil::random_instance(14, 20, 3, 1, 8);
  auto a = enumerate_elementary(inst);
  auto b = enumerate_elementary(inst);
  CHECK(a == b);
  CHECK(masks_of(a).size() == a.size());
}

TEST_CASE("supersets of a root") {
  SUBCASE("full-capacity root has only itself") {
    Instance inst = demands_instance({2, 2, 3}, 4);
    auto sets = enumerate_supersets(inst, RequestSet::of({0, 1}));
    CHECK(sets.size() == 1);
    CHECK(sets[0].requests == RequestSet::of({0, 1}));
  }
  SUBCASE("empty root behaves as enumerate_elementary") {
    Instance inst = testutil::random_instance(10, 15, 9, 1, 6);
    CHECK(enumerate_supersets(inst, RequestSet{}) ==
          enumerate_elementary(inst));
  }
  SUBCASE("matches powerset-filter oracle") {
    SplitMix64 rng(55);
    int done = 0;
    while (done < 20) {
      Instance inst = testutil::random_instance(12, 20, rng.next(), 1, 8);
      RequestSet root;
      root = root.with(static_cast<int>(rng.next_below(12)));
      root = root.with(static_cast<int>(rng.next_below(12)));
      if (!inst.elementary(root)) continue;
      std::set<uint64_t> expected;
      for (uint64_t m : testutil::powerset_elementary(inst))
        if ((m & root.mask()) == root.mask()) expected.insert(m);
      CHECK(masks_of(enumerate_supersets(inst, root)) == expected);
      // strict variant drops exactly the root
      std::set<uint64_t> strict = expected;
      strict.erase(root.mask());
      CHECK(masks_of(enumerate_supersets(inst, root, true)) == strict);
      ++done;
    }
  }
  SUBCASE("non-elementary root throws") {
    Instance inst = demands_instance({3, 3}, 4);
    CHECK_THROWS_AS(enumerate_supersets(inst, RequestSet::of({0, 1})),
                    RootNotElementary);
  }
}

TEST_CASE("ebbs bids") {
  SUBCASE("demands [2,2,3] cap 4 with brute-force TSP prices") {
    Instance inst = demands_instance({2, 2, 3}, 4);
    PricingContext pricing(inst);
    auto bids = ebbs_bids(inst, pricing);
    REQUIRE(bids.size() == 4);
    for (const Bid& b : bids) {
      CHECK(b.price == tsp_brute(inst, b.requests).cost);
      CHECK(b.carrier == "focal");
    }
    // ordering is (size, mask)
    CHECK(bids[0].requests.mask() == 0b001);
    CHECK(bids[3].requests.mask() == 0b011);
  }
  SUBCASE("single request gives one pendular bid") {
    Instance inst = demands_instance({5}, 10);
    PricingContext pricing(inst);
    auto bids = ebbs_bids(inst, pricing);
    REQUIRE(bids.size() == 1);
    CHECK(bids[0].price == 2 * inst.depot_dist(0));
  }
  SUBCASE("no duplicate request sets, serial == parallel") {
    Instance inst = testutil::random_instance(12, 25, 21, 1, 9);
    PricingContext p1(inst), p2(inst);
    auto parallel = ebbs_bids(inst, p1, "focal", true);
    auto serial = ebbs_bids(inst, p2, "focal", false);
    CHECK(parallel == serial);
    std::set<uint64_t> seen;
    for (const Bid& b : parallel) CHECK(seen.insert(b.requests.mask()).second);
  }
}

namespace {

// Exhaustive partition oracle: cheapest exact partition of target from bids.
int64_t partition_oracle(const std::vector<Bid>& bids, RequestSet target) {
  int64_t best = -1;
  // DFS over every subset of bids that partitions the target
  std::function<void(RequestSet, int64_t)> go = [&](RequestSet rem,
                                                    int64_t cost) {
    if (rem.empty()) {
      if (best < 0 || cost < best) best = cost;
      return;
    }
    for (const Bid& b : bids)
      if (rem.contains_all(b.requests))
        go(rem.minus(b.requests), cost + b.price);
  };
  go(target, 0);
  return best;
}

}  // namespace

TEST_CASE("infer_price") {
  SUBCASE("two disjoint singletons add up") {
    std::vector<Bid> bids = {{"c", RequestSet::of({0}), 7},
                             {"c", RequestSet::of({2}), 9}};
    CHECK(infer_price(bids, RequestSet::of({0, 2})) == 16);
  }
  SUBCASE("target equal to one bid's set") {
    std::vector<Bid> bids = {{"c", RequestSet::of({0, 1}), 12},
                             {"c", RequestSet::of({0}), 7},
                             {"c", RequestSet::of({1}), 8}};
    CHECK(infer_price(bids, RequestSet::of({0, 1})) == 12);
  }
  SUBCASE("seven-bid layout, exhaustive partition oracle") {
    // requests a,b,c,d = 0,1,2,3; singletons plus {a,b},{b,c},{b,d}
    std::vector<Bid> bids = {
        {"c", RequestSet::of({0}), 80}, {"c", RequestSet::of({1}), 20},
        {"c", RequestSet::of({2}), 50}, {"c", RequestSet::of({3}), 70},
        {"c", RequestSet::of({0, 1}), 90}, {"c", RequestSet::of({1, 2}), 60},
        {"c", RequestSet::of({1, 3}), 85}};
    for (uint64_t target = 1; target < 16; ++target) {
      int64_t oracle = partition_oracle(bids, RequestSet(target));
      if (oracle < 0) {
        CHECK_THROWS_AS(infer_price(bids, RequestSet(target)),
                        NoPartitionExists);
      } else {
        CHECK(infer_price(bids, RequestSet(target)) == oracle);
      }
    }
  }
  SUBCASE("no partition") {
    std::vector<Bid> bids = {{"c", RequestSet::of({0, 1}), 5}};
    CHECK_THROWS_AS(infer_price(bids, RequestSet::of({0, 2})),
                    NoPartitionExists);
  }
}
