#include "bundlebid/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "bundlebid/rng.hpp"

namespace bundlebid {

int64_t pair_synergy(const Instance& instance, int i, int j) {
  int64_t load = instance.demand(i) + instance.demand(j);
  if (i == j || load > instance.cap())
    throw CapacityViolated("pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ") not capacity-feasible");
  int64_t saving = instance.depot_dist(i) + instance.depot_dist(j) -
                   instance.customer_dist(i, j);
  return saving * (instance.cap() - load);
}

std::vector<SynergyPair> synergy_pairs(const Instance& instance) {
  std::vector<SynergyPair> pairs;
  int n = instance.num_requests();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (instance.demand(i) + instance.demand(j) <= instance.cap())
        pairs.push_back({i, j, pair_synergy(instance, i, j)});
  std::sort(pairs.begin(), pairs.end(),
            [](const SynergyPair& a, const SynergyPair& b) {
              return std::tuple(-a.sigma, a.i, a.j) <
                     std::tuple(-b.sigma, b.i, b.j);
            });
  return pairs;
}

ClusterSet psc_clusters(const Instance& instance, double alpha) {
  auto pairs = synergy_pairs(instance);
  if (pairs.empty()) throw NoFeasiblePair("no capacity-feasible request pair");
  size_t keep = static_cast<size_t>(
      std::ceil(alpha * static_cast<double>(pairs.size())));
  keep = std::clamp<size_t>(keep, 1, pairs.size());
  int64_t cutoff = pairs[keep - 1].sigma;
  ClusterSet out{{}, ClusterOrigin::PSC};
  for (const SynergyPair& p : pairs) {
    if (p.sigma < cutoff) break;  // ties at the cutoff stay in
    out.clusters.push_back(RequestSet::of({p.i, p.j}));
  }
  return out;
}

int64_t min_medians(const Instance& instance) {
  return (instance.total_demand() + instance.cap() - 1) / instance.cap();
}

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// Optimal capacitated assignment of the non-median requests to a fixed
// median set; DFS over requests in non-ascending demand order with a
// capacity-free distance lower bound.
struct AssignmentSearch {
  const Instance& instance;
  const std::vector<int>& medians;
  const std::vector<int>& order;  // non-median ids, demand descending
  std::vector<int64_t> slack;     // per median
  std::vector<int> chosen;        // per order position, median index
  std::vector<int> best_chosen;
  int64_t best = kInf;
  bool found = false;
  std::vector<int64_t> suffix_lb;  // sum of min distances from position k on

  AssignmentSearch(const Instance& inst, const std::vector<int>& meds,
                   const std::vector<int>& ord)
      : instance(inst), medians(meds), order(ord) {
    slack.reserve(meds.size());
    for (int m : meds) slack.push_back(inst.cap() - inst.demand(m));
    chosen.assign(ord.size(), -1);
    suffix_lb.assign(ord.size() + 1, 0);
    for (size_t k = ord.size(); k-- > 0;) {
      int64_t lo = kInf;
      for (int m : meds) lo = std::min(lo, inst.customer_dist(ord[k], m));
      suffix_lb[k] = suffix_lb[k + 1] + lo;
    }
  }

  void run(size_t pos, int64_t cost) {
    if (cost + suffix_lb[pos] >= best) return;
    if (pos == order.size()) {
      best = cost;
      best_chosen = chosen;
      found = true;
      return;
    }
    int id = order[pos];
    int64_t need = instance.demand(id);
    // visit medians by increasing assignment cost, index tie-break
    std::vector<size_t> mi(medians.size());
    std::iota(mi.begin(), mi.end(), 0);
    std::sort(mi.begin(), mi.end(), [&](size_t a, size_t b) {
      return std::pair(instance.customer_dist(id, medians[a]), a) <
             std::pair(instance.customer_dist(id, medians[b]), b);
    });
    for (size_t m : mi) {
      if (slack[m] < need) continue;
      slack[m] -= need;
      chosen[pos] = static_cast<int>(m);
      run(pos + 1, cost + instance.customer_dist(id, medians[m]));
      slack[m] += need;
    }
    chosen[pos] = -1;
  }
};

std::vector<int> nonmedian_order(const Instance& instance,
                                 const std::vector<int>& medians) {
  std::vector<int> order;
  for (int i = 0; i < instance.num_requests(); ++i)
    if (!std::binary_search(medians.begin(), medians.end(), i))
      order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.demand(a) > instance.demand(b);
  });
  return order;
}

PmpSolution solve_pmp_exact(const Instance& instance, int64_t p) {
  int n = instance.num_requests();
  PmpSolution best;
  best.objective = kInf;

  // lexicographic combinations of p medians
  std::vector<int> medians(p);
  std::iota(medians.begin(), medians.end(), 0);
  for (;;) {
    auto order = nonmedian_order(instance, medians);
    AssignmentSearch search(instance, medians, order);
    search.best = best.objective;  // global bound, strict improvement only
    search.run(0, 0);
    if (search.found) {
      // strict improvement only, so the lexicographically first median set
      // among equal optima is kept
      best.objective = search.best;
      best.medians = medians;
      best.assignment.assign(n, -1);
      for (int m : medians) best.assignment[m] = m;
      for (size_t k = 0; k < order.size(); ++k)
        best.assignment[order[k]] = medians[search.best_chosen[k]];
    }
    // next combination
    int i = static_cast<int>(p) - 1;
    while (i >= 0 && medians[i] == n - static_cast<int>(p) + i) --i;
    if (i < 0) break;
    ++medians[i];
    for (int k = i + 1; k < p; ++k) medians[k] = medians[k - 1] + 1;
  }
  if (best.objective >= kInf)
    throw Infeasible("no feasible capacitated assignment for p = " +
                     std::to_string(p));
  best.exact = true;
  return best;
}

// Greedy demand-weighted spread seeding plus best-improvement local search
// (reassign moves and median swaps) under a fixed iteration budget.
PmpSolution solve_pmp_heuristic(const Instance& instance, int64_t p,
                                uint64_t seed) {
  int n = instance.num_requests();
  SplitMix64 rng = SplitMix64::stream(seed, 0xbeef);

  auto greedy_assign = [&](const std::vector<int>& medians,
                           std::vector<int>& assignment) -> int64_t {
    std::vector<int64_t> slack(medians.size());
    for (size_t m = 0; m < medians.size(); ++m)
      slack[m] = instance.cap() - instance.demand(medians[m]);
    assignment.assign(n, -1);
    for (int m : medians) assignment[m] = m;
    auto order = nonmedian_order(instance, medians);
    int64_t total = 0;
    for (int id : order) {
      int64_t need = instance.demand(id);
      int64_t best_d = kInf;
      int pick = -1;
      for (size_t m = 0; m < medians.size(); ++m) {
        if (slack[m] < need) continue;
        int64_t d = instance.customer_dist(id, medians[m]);
        if (d < best_d) {
          best_d = d;
          pick = static_cast<int>(m);
        }
      }
      if (pick < 0) return -1;  // packing failed
      slack[pick] -= need;
      assignment[id] = medians[pick];
      total += best_d;
    }
    return total;
  };

  std::vector<int> medians;
  std::vector<int> assignment;
  int64_t objective = -1;
  for (int attempt = 0; attempt < 64 && objective < 0; ++attempt) {
    medians.clear();
    if (attempt == 0) {
      // demand-weighted spread: start at the heaviest request, then
      // repeatedly take the point maximizing demand * distance-to-medians
      int first = 0;
      for (int i = 1; i < n; ++i)
        if (instance.demand(i) > instance.demand(first)) first = i;
      medians.push_back(first);
      while (static_cast<int64_t>(medians.size()) < p) {
        int64_t best_score = -1;
        int pick = -1;
        for (int i = 0; i < n; ++i) {
          if (std::find(medians.begin(), medians.end(), i) != medians.end())
            continue;
          int64_t d = kInf;
          for (int m : medians) d = std::min(d, instance.customer_dist(i, m));
          int64_t score = d * instance.demand(i);
          if (score > best_score) {
            best_score = score;
            pick = i;
          }
        }
        medians.push_back(pick);
      }
    } else {
      // random restart
      std::vector<int> ids(n);
      std::iota(ids.begin(), ids.end(), 0);
      for (int k = 0; k < p; ++k) {
        size_t pick = k + rng.next_below(n - k);
        std::swap(ids[k], ids[pick]);
        medians.push_back(ids[k]);
      }
    }
    std::sort(medians.begin(), medians.end());
    objective = greedy_assign(medians, assignment);
  }
  if (objective < 0)
    throw Infeasible("heuristic found no feasible assignment for p = " +
                     std::to_string(p));

  const int kBudget = 200;
  for (int iter = 0; iter < kBudget; ++iter) {
    bool improved = false;
    // median swap, best improvement
    std::vector<int> trial_assign;
    for (size_t m = 0; m < medians.size() && !improved; ++m) {
      for (int cand = 0; cand < n; ++cand) {
        if (std::find(medians.begin(), medians.end(), cand) != medians.end())
          continue;
        std::vector<int> trial = medians;
        trial[m] = cand;
        std::sort(trial.begin(), trial.end());
        int64_t obj = greedy_assign(trial, trial_assign);
        if (obj >= 0 && obj < objective) {
          medians = trial;
          assignment = trial_assign;
          objective = obj;
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }

  PmpSolution sol;
  sol.medians = medians;
  sol.assignment = assignment;
  sol.objective = objective;
  sol.exact = false;
  return sol;
}

}  // namespace

PmpSolution solve_pmp(const Instance& instance, int64_t p, int exact_limit,
                      uint64_t seed) {
  int n = instance.num_requests();
  if (p < 1 || p > n)
    throw Infeasible("p = " + std::to_string(p) + " outside 1.." +
                     std::to_string(n));
  if (p * instance.cap() < instance.total_demand())
    throw Infeasible("p * cap = " + std::to_string(p * instance.cap()) +
                     " below total demand " +
                     std::to_string(instance.total_demand()));
  if (n <= exact_limit) return solve_pmp_exact(instance, p);
  return solve_pmp_heuristic(instance, p, seed);
}

ClusterSet cpmc_clusters(const Instance& instance, int exact_limit,
                         uint64_t seed) {
  PmpSolution sol = solve_pmp(instance, min_medians(instance), exact_limit, seed);
  ClusterSet out{{}, ClusterOrigin::CPMC};
  for (int m : sol.medians) {
    RequestSet cluster;
    for (int i = 0; i < instance.num_requests(); ++i)
      if (sol.assignment[i] == m) cluster = cluster.with(i);
    out.clusters.push_back(cluster);
  }
  return out;
}

namespace {

// One random elementary set: draw without replacement, stop at the first
// draw that would exceed capacity.
RequestSet random_elementary_set(const Instance& instance, SplitMix64& rng) {
  int n = instance.num_requests();
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  RequestSet set;
  int64_t load = 0;
  while (!remaining.empty()) {
    size_t idx = rng.next_below(remaining.size());
    int r = remaining[idx];
    if (load + instance.demand(r) > instance.cap()) break;
    load += instance.demand(r);
    set = set.with(r);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return set;
}

std::vector<RequestSet> draw_request_sets(const Instance& instance,
                                          uint64_t seed, int* dropped) {
  int n = instance.num_requests();
  std::set<RequestSet> seen;
  std::vector<RequestSet> sets;
  for (int k = 0; k < n; ++k) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<uint64_t>(k));
    RequestSet s = random_elementary_set(instance, rng);
    if (seen.insert(s).second) sets.push_back(s);
  }
  if (dropped) *dropped = n - static_cast<int>(sets.size());
  std::sort(sets.begin(), sets.end(), [](RequestSet a, RequestSet b) {
    return std::pair(a.size(), a.mask()) < std::pair(b.size(), b.mask());
  });
  return sets;
}

}  // namespace

std::vector<Bid> ran_bids(const Instance& instance,
                          const PricingContext& pricing, uint64_t seed,
                          const std::string& carrier,
                          int* duplicates_collapsed) {
  auto sets = draw_request_sets(instance, seed, duplicates_collapsed);
  std::vector<ElementarySet> elems;
  elems.reserve(sets.size());
  for (RequestSet s : sets) elems.push_back({s, instance.demand_of(s)});
  return price_sets(elems, pricing, carrier, false);
}

ClusterSet rann_clusters(const Instance& instance, uint64_t seed) {
  return ClusterSet{draw_request_sets(instance, seed, nullptr),
                    ClusterOrigin::RANN};
}

std::vector<Bid> heuristic_bids(const Instance& instance,
                                const ClusterSet& clusters,
                                const PricingContext& pricing,
                                const std::string& carrier, bool parallel) {
  std::set<uint64_t> masks;
  for (RequestSet root : clusters.clusters)
    for (const ElementarySet& e : enumerate_supersets(instance, root))
      masks.insert(e.requests.mask());
  std::vector<ElementarySet> sets;
  sets.reserve(masks.size());
  for (uint64_t m : masks) {
    RequestSet s(m);
    sets.push_back({s, instance.demand_of(s)});
  }
  return price_sets(sets, pricing, carrier, parallel);
}

}  // namespace bundlebid
