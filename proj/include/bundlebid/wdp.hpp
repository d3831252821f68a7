#pragma once

#include <map>
#include <string>
#include <vector>

#include "bundlebid/model.hpp"

namespace bundlebid {

struct Uncoverable : std::runtime_error {
  Uncoverable(std::string what, std::vector<int> requests)
      : std::runtime_error(std::move(what)), uncovered(std::move(requests)) {}
  std::vector<int> uncovered;
};
struct TooManyBids : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WdpSolution {
  std::vector<int> winning;  // bid indices under input order, ascending
  int64_t total_cost = 0;
  std::map<std::string, int64_t> per_carrier_revenue;
};

// Exact minimum-cost set covering over the submitted bids. Among equal-cost
// optima the lexicographically smallest winning index set is returned, so
// repeated clearings are reproducible.
WdpSolution solve_wdp(int n_requests, const std::vector<Bid>& bids);

// Exhaustive oracle with the identical tie-break rule; |bids| <= 20.
WdpSolution wdp_brute(int n_requests, const std::vector<Bid>& bids);

}  // namespace bundlebid
