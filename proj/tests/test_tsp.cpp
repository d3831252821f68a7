#include "bundlebid/tsp.hpp"

#include "bundlebid/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bundlebid;

namespace {

RequestSet random_subset(SplitMix64& rng, int n, int size) {
  RequestSet s;
  while (s.size() < size) s = s.with(static_cast<int>(rng.next_below(n)));
  return s;
}

}  // namespace

TEST_CASE("3-4-5 triangle tour") {
  Instance inst({0, 0}, {{{3, 0}, 1}, {{3, 4}, 1}}, 10);
  TourResult r = tsp_exact(inst, RequestSet::of({0, 1}));
  CHECK(r.cost == 12);  // 3 + 4 + 5
  CHECK(r.order == std::vector<int>{0, 1});
  CHECK(tsp_brute(inst, RequestSet::of({0, 1})).cost == 12);
}

TEST_CASE("singleton is a pendular tour") {
  Instance inst = testutil::random_instance(6, 30, 4);
  for (int i = 0; i < 6; ++i) {
    RequestSet s = RequestSet::of({i});
    CHECK(tsp_exact(inst, s).cost == 2 * inst.depot_dist(i));
    CHECK(tsp_brute(inst, s).cost == 2 * inst.depot_dist(i));
  }
}

TEST_CASE("size limits") {
  Instance inst = testutil::random_instance(12, 200, 5, 1, 2);
  RequestSet ten(0x3ffu);
  CHECK_THROWS_AS(tsp_brute(inst, ten), SetTooLarge);
  CHECK_THROWS_AS(tsp_exact(inst, RequestSet::of({0, 1, 2}), 2), SetTooLarge);
  CHECK_THROWS_AS(tsp_exact(inst, RequestSet{}), SetTooLarge);
}

TEST_CASE("Held-Karp equals brute force, cost and tie-break") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 250; ++t) {
    int n = 10;
    Instance inst = testutil::random_instance(n, 100, rng.next());
    int size = 1 + static_cast<int>(rng.next_below(8));
    RequestSet s = random_subset(rng, n, size);
    TourResult exact = tsp_exact(inst, s);
    TourResult brute = tsp_brute(inst, s);
    CHECK(exact.cost == brute.cost);
    CHECK(exact.order == brute.order);
  }
}

TEST_CASE("pricing context memoizes") {
  Instance inst = testutil::random_instance(8, 40, 11);
  PricingContext pricing(inst);
  RequestSet s = RequestSet::of({1, 3, 5});
  int64_t first = pricing.price(s);
  CHECK(pricing.cache_hits() == 0);
  CHECK(pricing.price(s) == first);
  CHECK(pricing.cache_hits() == 1);
}

TEST_CASE("free disposal on nested elementary sets") {
  SplitMix64 rng(31);
  for (int t = 0; t < 100; ++t) {
    Instance inst = testutil::random_instance(10, 30, rng.next(), 1, 6);
    PricingContext pricing(inst);
    // grow a random elementary chain and check monotone prices
    RequestSet s;
    int64_t prev = 0;
    for (int step = 0; step < 5; ++step) {
      int id = static_cast<int>(rng.next_below(10));
      RequestSet t2 = s.with(id);
      if (!inst.elementary(t2) || t2 == s) continue;
      int64_t price = pricing.price(t2);
      // rounding the integer distances can break the triangle inequality by
      // at most 1 per shortcut, so one added stop may lower the tour by 1
      if (!s.empty()) CHECK(price >= prev - 1);
      s = t2;
      prev = price;
    }
  }
}

TEST_CASE("no superadditivity for disjoint elementary unions") {
  SplitMix64 rng(32);
  int checked = 0;
  while (checked < 60) {
    Instance inst = testutil::random_instance(10, 40, rng.next(), 1, 6);
    PricingContext pricing(inst);
    RequestSet a = random_subset(rng, 10, 2);
    RequestSet b = random_subset(rng, 10, 2);
    if (a.intersects(b)) continue;
    RequestSet u = a.united(b);
    if (!inst.elementary(u)) continue;
    CHECK(pricing.price(u) <= pricing.price(a) + pricing.price(b));
    ++checked;
  }
}
