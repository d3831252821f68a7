#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "bundlebid/model.hpp"

namespace bundlebid {

struct SetTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kHeldKarpLimit = 18;
constexpr int kBruteTspLimit = 9;

struct TourResult {
  int64_t cost = 0;
  std::vector<int> order;  // request ids, depot endpoints implicit
};

// Exact minimum-cost tour depot -> members of s -> depot via Held-Karp.
// Among equal-cost tours the lexicographically smallest id sequence is
// returned, so outputs are reproducible byte for byte.
TourResult tsp_exact(const Instance& instance, RequestSet s,
                     int limit = kHeldKarpLimit);

// Exhaustive permutation oracle, same tie-break rule. Test use only.
TourResult tsp_brute(const Instance& instance, RequestSet s);

// Memoized bundle pricing for one instance. Lookups and insertions are
// mutex-guarded so workers can share one context.
class PricingContext {
 public:
  explicit PricingContext(const Instance& instance, int limit = kHeldKarpLimit)
      : instance_(instance), limit_(limit) {}

  const Instance& instance() const { return instance_; }

  int64_t price(RequestSet s) const;

  uint64_t cache_hits() const { return hits_.load(); }
  uint64_t cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
  }

 private:
  const Instance& instance_;
  int limit_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<uint64_t, int64_t> cache_;
  mutable std::atomic<uint64_t> hits_{0};
};

// price_bundle(instance, s) per the module contract; thin wrapper over a
// caller-owned context.
inline int64_t price_bundle(const PricingContext& pricing, RequestSet s) {
  return pricing.price(s);
}

}  // namespace bundlebid
