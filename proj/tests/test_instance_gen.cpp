#include "bundlebid/instance_gen.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace bundlebid;

TEST_CASE("rival bids are elementary with positive prices") {
  Instance inst = testutil::random_instance(12, 25, 9, 2, 10);
  PricingContext pricing(inst);
  GenConfig cfg;
  cfg.rival_bid_count = 300;
  cfg.seed = 77;
  auto bids = generate_rival_bids(inst, cfg, pricing);
  REQUIRE(bids.size() == 300);
  for (const Bid& b : bids) {
    CHECK_FALSE(b.requests.empty());
    CHECK(inst.elementary(b.requests));
    CHECK(b.price >= 1);
  }
}

TEST_CASE("fixed seed gives an identical bid list") {
  Instance inst = testutil::random_instance(10, 20, 5, 2, 9);
  PricingContext pricing(inst);
  GenConfig cfg;
  cfg.rival_bid_count = 100;
  cfg.seed = 31337;
  CHECK(generate_rival_bids(inst, cfg, pricing) ==
        generate_rival_bids(inst, cfg, pricing));
}

TEST_CASE("degenerate jitter interval reproduces exact TSP prices") {
  Instance inst = testutil::random_instance(8, 18, 3, 2, 8);
  PricingContext pricing(inst);
  GenConfig cfg;
  cfg.rival_bid_count = 60;
  cfg.jitter_lo = cfg.jitter_hi = 1.0;
  cfg.seed = 4;
  for (const Bid& b : generate_rival_bids(inst, cfg, pricing))
    if (b.requests.size() <= 9)
      CHECK(b.price == tsp_brute(inst, b.requests).cost);
}

TEST_CASE("uniformity of jitter and capacity reduction") {
  Instance inst = testutil::random_instance(15, 40, 21, 2, 10);
  PricingContext pricing(inst);
  GenConfig cfg;
  cfg.rival_bid_count = 10000;
  cfg.seed = 99;
  std::vector<RivalDraw> draws;
  generate_rival_bids(inst, cfg, pricing, &draws);
  double jitter_sum = 0, cap_sum = 0;
  for (const RivalDraw& d : draws) {
    jitter_sum += d.jitter;
    cap_sum += d.cap_factor;
  }
  double jitter_mean = jitter_sum / 10000.0;
  double cap_mean = cap_sum / 10000.0;
  CHECK(jitter_mean > 0.99);
  CHECK(jitter_mean < 1.01);
  CHECK(cap_mean > 0.49);
  CHECK(cap_mean < 0.51);
}

TEST_CASE("generate_scenario") {
  std::istringstream file(
      "5 100 0 0\n0 0\n10 0 30\n0 10 30\n10 10 30\n20 0 30\n20 20 30\n");
  CvrpData source = import_cvrp(file);
  GenConfig cfg;
  cfg.m = 3;
  cfg.rival_bid_count = 20;
  cfg.seed = 8;

  Scenario s = generate_scenario(source, cfg);
  CHECK(s.instance.num_requests() == 3);
  CHECK(s.instance.cap() == 100);
  CHECK(s.rival_bids.size() == 20);
  CHECK(s.seed == 8);

  SUBCASE("regeneration is identical") {
    Scenario again = generate_scenario(source, cfg);
    CHECK(save_scenario(again) == save_scenario(s));
  }
  SUBCASE("zero rivals is allowed") {
    cfg.rival_bid_count = 0;
    CHECK(generate_scenario(source, cfg).rival_bids.empty());
  }
  SUBCASE("capacity override") {
    cfg.cap = 60;
    CHECK(generate_scenario(source, cfg).instance.cap() == 60);
  }
}
