#include "bundlebid/tsp.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace bundlebid {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

void check_size(RequestSet s, int limit, const char* op) {
  if (s.empty()) throw SetTooLarge(std::string(op) + ": empty request set");
  if (s.size() > limit)
    throw SetTooLarge(std::string(op) + ": set of size " +
                      std::to_string(s.size()) + " exceeds limit " +
                      std::to_string(limit));
}

}  // namespace

TourResult tsp_exact(const Instance& instance, RequestSet s, int limit) {
  check_size(s, limit, "tsp_exact");
  const std::vector<int> members = s.ids();  // ascending id order
  const int k = static_cast<int>(members.size());

  std::vector<int64_t> depot_d(k);
  std::vector<int64_t> d(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    depot_d[i] = instance.depot_dist(members[i]);
    for (int j = 0; j < k; ++j)
      d[i * k + j] = instance.customer_dist(members[i], members[j]);
  }

  // h[S][j]: min cost of a path starting at member j, visiting exactly the
  // members in S (j not in S), then returning to the depot.
  const uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  std::vector<int64_t> h(static_cast<size_t>(full + 1) * k, kInf);
  for (int j = 0; j < k; ++j) h[j] = depot_d[j];  // S = 0
  for (uint32_t S = 1; S <= full; ++S) {
    for (int j = 0; j < k; ++j) {
      if (S & (1u << j)) continue;
      int64_t best = kInf;
      for (uint32_t rest = S; rest; rest &= rest - 1) {
        int t = std::countr_zero(rest);
        int64_t c = d[j * k + t] + h[static_cast<size_t>(S ^ (1u << t)) * k + t];
        if (c < best) best = c;
      }
      h[static_cast<size_t>(S) * k + j] = best;
    }
  }

  TourResult result;
  result.order.reserve(k);
  uint32_t remaining = full;
  int prev = -1;  // depot
  int64_t total = 0;
  while (remaining) {
    int64_t best = kInf;
    int pick = -1;
    for (uint32_t rest = remaining; rest; rest &= rest - 1) {
      int t = std::countr_zero(rest);
      int64_t edge = (prev < 0) ? depot_d[t] : d[prev * k + t];
      int64_t c = edge + h[static_cast<size_t>(remaining ^ (1u << t)) * k + t];
      if (c < best) {  // first (lowest id) minimizer wins ties
        best = c;
        pick = t;
      }
    }
    int64_t edge = (prev < 0) ? depot_d[pick] : d[prev * k + pick];
    total += edge;
    result.order.push_back(members[pick]);
    remaining ^= 1u << pick;
    prev = pick;
  }
  total += depot_d[prev];
  result.cost = total;
  return result;
}

TourResult tsp_brute(const Instance& instance, RequestSet s) {
  check_size(s, kBruteTspLimit, "tsp_brute");
  std::vector<int> perm = s.ids();
  TourResult best;
  best.cost = kInf;
  do {
    int64_t cost = instance.depot_dist(perm.front());
    for (size_t i = 0; i + 1 < perm.size(); ++i)
      cost += instance.customer_dist(perm[i], perm[i + 1]);
    cost += instance.depot_dist(perm.back());
    if (cost < best.cost) {  // lexicographic order of next_permutation breaks ties
      best.cost = cost;
      best.order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int64_t PricingContext::price(RequestSet s) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(s.mask());
    if (it != cache_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  int64_t cost = tsp_exact(instance_, s, limit_).cost;
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(s.mask(), cost);
  return cost;
}

}  // namespace bundlebid
