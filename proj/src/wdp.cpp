#include "bundlebid/wdp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace bundlebid {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

uint64_t full_mask(int n) {
  return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

void check_coverage(int n_requests, const std::vector<Bid>& bids) {
  uint64_t cover = 0;
  for (const Bid& b : bids) cover |= b.requests.mask();
  uint64_t missing = full_mask(n_requests) & ~cover;
  if (missing) {
    std::vector<int> uncovered;
    for (uint64_t m = missing; m; m &= m - 1)
      uncovered.push_back(std::countr_zero(m));
    std::string what = "no bid covers request(s)";
    for (int r : uncovered) what += " " + std::to_string(r);
    throw Uncoverable(what, std::move(uncovered));
  }
}

WdpSolution finish(const std::vector<Bid>& bids, std::vector<int> winning,
                   int64_t cost) {
  WdpSolution sol;
  sol.winning = std::move(winning);
  sol.total_cost = cost;
  for (int idx : sol.winning)
    sol.per_carrier_revenue[bids[idx].carrier] += bids[idx].price;
  return sol;
}

struct Candidate {
  uint64_t mask;
  int64_t price;
  int index;  // original input index
};

// Drop bid i when a kept bid j covers the same or more at a price that is
// lower, or equal with j < i. Equal-cost optima can then only get
// lexicographically smaller, which matches the declared tie-break.
std::vector<Candidate> remove_dominated(int n_requests,
                                        const std::vector<Bid>& bids) {
  std::vector<Candidate> order;
  order.reserve(bids.size());
  for (size_t i = 0; i < bids.size(); ++i)
    order.push_back({bids[i].requests.mask(), bids[i].price,
                     static_cast<int>(i)});
  std::sort(order.begin(), order.end(), [](const Candidate& a,
                                           const Candidate& b) {
    return std::pair(a.price, a.index) < std::pair(b.price, b.index);
  });

  std::vector<std::vector<const Candidate*>> by_request(n_requests);
  std::vector<Candidate> kept;
  kept.reserve(order.size());
  for (const Candidate& c : order) {
    // probe the thinnest bucket among c's requests
    int probe = -1;
    size_t probe_size = std::numeric_limits<size_t>::max();
    for (uint64_t m = c.mask; m; m &= m - 1) {
      int r = std::countr_zero(m);
      if (by_request[r].size() < probe_size) {
        probe_size = by_request[r].size();
        probe = r;
      }
    }
    bool dominated = false;
    for (const Candidate* k : by_request[probe]) {
      if ((k->mask & c.mask) == c.mask) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    kept.push_back(c);  // reserve above keeps the pointers stable
    const Candidate& stored = kept.back();
    for (uint64_t m = stored.mask; m; m &= m - 1)
      by_request[std::countr_zero(m)].push_back(&stored);
  }
  // a bid kept later is never cheaper than an earlier one, so one pass
  // suffices
  std::sort(kept.begin(), kept.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.index < b.index;
            });
  return kept;
}

struct BranchAndBound {
  int n;
  uint64_t full;
  std::vector<Candidate> cands;
  std::vector<std::vector<int>> containing;  // request -> candidate indices
  std::vector<double> min_rate;              // request -> min price/|set|
  int64_t best_cost = kInf;
  std::vector<int> best_indices;
  std::vector<int> chosen;
  std::unordered_map<uint64_t, int64_t> state_cost;

  double bound(uint64_t covered) const {
    double lb = 0;
    for (uint64_t m = full & ~covered; m; m &= m - 1)
      lb += min_rate[std::countr_zero(m)];
    return lb;
  }

  void record(int64_t cost) {
    std::vector<int> indices = chosen;
    std::sort(indices.begin(), indices.end());
    if (cost < best_cost ||
        (cost == best_cost && indices < best_indices)) {
      best_cost = cost;
      best_indices = std::move(indices);
    }
  }

  void search(uint64_t covered, int64_t cost) {
    if (covered == full) {
      record(cost);
      return;
    }
    if (cost + static_cast<int64_t>(std::ceil(bound(covered) - 1e-9)) >
        best_cost)
      return;
    auto [it, fresh] = state_cost.try_emplace(covered, cost);
    if (!fresh) {
      if (it->second < cost) return;  // equal cost must continue for ties
      it->second = cost;
    }

    int r = std::countr_zero(full & ~covered);
    std::vector<int> options = containing[r];
    std::sort(options.begin(), options.end(), [&](int a, int b) {
      double ra = static_cast<double>(cands[a].price) /
                  std::popcount(cands[a].mask & ~covered);
      double rb = static_cast<double>(cands[b].price) /
                  std::popcount(cands[b].mask & ~covered);
      if (ra != rb) return ra < rb;
      return cands[a].index < cands[b].index;
    });
    for (int c : options) {
      chosen.push_back(cands[c].index);
      search(covered | cands[c].mask, cost + cands[c].price);
      chosen.pop_back();
    }
  }
};

}  // namespace

WdpSolution solve_wdp(int n_requests, const std::vector<Bid>& bids) {
  if (n_requests == 0) return finish(bids, {}, 0);
  check_coverage(n_requests, bids);

  BranchAndBound bb;
  bb.n = n_requests;
  bb.full = full_mask(n_requests);
  bb.cands = remove_dominated(n_requests, bids);
  bb.containing.assign(n_requests, {});
  bb.min_rate.assign(n_requests, std::numeric_limits<double>::max());
  for (size_t c = 0; c < bb.cands.size(); ++c) {
    double rate = static_cast<double>(bb.cands[c].price) /
                  std::popcount(bb.cands[c].mask);
    for (uint64_t m = bb.cands[c].mask; m; m &= m - 1) {
      int r = std::countr_zero(m);
      bb.containing[r].push_back(static_cast<int>(c));
      bb.min_rate[r] = std::min(bb.min_rate[r], rate);
    }
  }
  bb.search(0, 0);
  return finish(bids, std::move(bb.best_indices), bb.best_cost);
}

WdpSolution wdp_brute(int n_requests, const std::vector<Bid>& bids) {
  if (bids.size() > 20)
    throw TooManyBids("wdp_brute limited to 20 bids, got " +
                      std::to_string(bids.size()));
  if (n_requests == 0) return finish(bids, {}, 0);
  check_coverage(n_requests, bids);

  const uint64_t full = full_mask(n_requests);
  const uint32_t m = static_cast<uint32_t>(bids.size());
  int64_t best_cost = kInf;
  std::vector<int> best_indices;
  for (uint32_t pick = 1; pick < (1u << m); ++pick) {
    uint64_t covered = 0;
    int64_t cost = 0;
    for (uint32_t rest = pick; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      covered |= bids[i].requests.mask();
      cost += bids[i].price;
    }
    if (covered != full || cost > best_cost) continue;
    std::vector<int> indices;
    for (uint32_t rest = pick; rest; rest &= rest - 1)
      indices.push_back(std::countr_zero(rest));
    if (cost < best_cost || indices < best_indices) {
      best_cost = cost;
      best_indices = std::move(indices);
    }
  }
  return finish(bids, std::move(best_indices), best_cost);
}

}  // namespace bundlebid
