#include <cmath>
#include <sstream>

#include "bundlebid/model.hpp"
#include "bundlebid/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bundlebid;

TEST_CASE("distance on known points") {
  CHECK(distance({0, 0}, {3, 4}) == 5);
  CHECK(distance({0, 0}, {0, 0}) == 0);
  CHECK(distance({0, 0}, {1, 1}) == 1);  // sqrt(2) = 1.414...
  CHECK(distance({0, 0}, {1, 2}) == 2);  // sqrt(5) = 2.236...
}

TEST_CASE("distance vs long-double oracle on random points") {
  SplitMix64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    Point p{static_cast<int32_t>(rng.next_below(20001)) - 10000,
            static_cast<int32_t>(rng.next_below(20001)) - 10000};
    Point q{static_cast<int32_t>(rng.next_below(20001)) - 10000,
            static_cast<int32_t>(rng.next_below(20001)) - 10000};
    long double dx = p.x - q.x, dy = p.y - q.y;
    long double exact = sqrtl(dx * dx + dy * dy);
    CHECK(distance(p, q) == distance(q, p));
    CHECK(std::fabs(static_cast<long double>(distance(p, q)) - exact) <=
          0.5L);
  }
}

TEST_CASE("build_instance basics") {
  Instance inst({0, 0}, {{{3, 4}, 2}}, 10);
  CHECK(inst.dist(0, 1) == 5);
  CHECK(inst.depot_dist(0) == 5);
  CHECK(inst.num_requests() == 1);

  // demand at the capacity boundary is fine
  CHECK_NOTHROW(Instance({0, 0}, {{{1, 1}, 10}}, 10));
  CHECK_THROWS_AS(Instance({0, 0}, {{{1, 1}, 11}}, 10), DemandExceedsCapacity);

  std::vector<std::pair<Point, int64_t>> many(65, {{1, 1}, 1});
  CHECK_THROWS_AS(Instance({0, 0}, many, 10), TooManyRequests);
}

TEST_CASE("instance matrix equals recomputation from points") {
  Instance inst = testutil::random_instance(12, 40, 7);
  auto point = [&](int idx) {
    return idx == 0 ? inst.depot() : inst.customers()[idx - 1].location;
  };
  for (int i = 0; i <= inst.num_requests(); ++i)
    for (int j = 0; j <= inst.num_requests(); ++j)
      CHECK(inst.dist(i, j) == distance(point(i), point(j)));
}

TEST_CASE("import_cvrp") {
  SUBCASE("synthetic file") {
    std::istringstream in(
        "5 100 0 0\n0 0\n1 2 3\n4 5 6\n7 8 9\n10 11 12\n13 14 15\n");
    CvrpData d = import_cvrp(in);
    CHECK(d.customers.size() == 5);
    CHECK(d.cap == 100);
    CHECK(d.depot == Point{0, 0});
    CHECK(d.customers[2].first == Point{7, 8});
    CHECK(d.customers[2].second == 9);
  }
  SUBCASE("truncation keeps the file prefix") {
    std::istringstream in(
        "5 100 0 0\n0 0\n1 2 3\n4 5 6\n7 8 9\n10 11 12\n13 14 15\n");
    CvrpData d = truncate_cvrp(import_cvrp(in), 3);
    CHECK(d.customers.size() == 3);
    CHECK(d.customers[0].first == Point{1, 2});
    CHECK(d.customers[2].first == Point{7, 8});
  }
  SUBCASE("malformed token names the line") {
    std::istringstream in("2 100 0 0\n0 0\n1 2 3\nbad 5 6\n");
    try {
      import_cvrp(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
    }
  }
}

TEST_CASE("scenario round trip is bit-identical") {
  Scenario s = testutil::random_scenario(8, 20, 25, 12345);
  std::string bytes = save_scenario(s);
  Scenario loaded = load_scenario(bytes);
  CHECK(save_scenario(loaded) == bytes);
  CHECK(loaded.seed == s.seed);
  CHECK(loaded.rival_bids.size() == s.rival_bids.size());
}

TEST_CASE("scenario load rejects bad documents") {
  Scenario s = testutil::random_scenario(4, 15, 3, 1);
  std::string good = save_scenario(s);

  SUBCASE("missing cap") {
    std::string bad = good;
    size_t pos = bad.find("\"cap\"");
    bad.replace(pos, 5, "\"cup\"");
    CHECK_THROWS_AS(load_scenario(bad), SchemaError);
  }
  SUBCASE("non-elementary rival set") {
    // one rival claiming every request blows past cap 15
    std::string bad =
        "{\"cap\":15,\"depot\":[0,0],"
        "\"customers\":[[1,1,9],[2,2,9],[3,3,9]],\"seed\":1,"
        "\"rival_bids\":[{\"carrier\":\"r\",\"requests\":[0,1,2],\"price\":5}]}";
    CHECK_THROWS_AS(load_scenario(bad), SchemaError);
  }
  SUBCASE("not json at all") {
    CHECK_THROWS_AS(load_scenario("nope"), SchemaError);
  }
}
