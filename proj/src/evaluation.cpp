#include "bundlebid/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace bundlebid {

Rational Rational::of(int64_t num, int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

AuctionOutcome run_auction(const Scenario& scenario,
                           const std::vector<Bid>& strategy_bids,
                           const std::string& strategy_tag) {
  std::vector<Bid> all = strategy_bids;
  all.insert(all.end(), scenario.rival_bids.begin(), scenario.rival_bids.end());

  auto start = std::chrono::steady_clock::now();
  WdpSolution sol = solve_wdp(scenario.instance.num_requests(), all);
  auto elapsed = std::chrono::steady_clock::now() - start;

  AuctionOutcome out;
  out.strategy = strategy_tag;
  out.bids_submitted = static_cast<int64_t>(strategy_bids.size());
  out.f_a = sol.total_cost;
  for (int idx : sol.winning) {
    if (static_cast<size_t>(idx) < strategy_bids.size()) {
      ++out.bids_won;
      out.f_b += all[idx].price;
    }
  }
  out.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return out;
}

MetricsRecord compute_metrics(const AuctionOutcome& phi,
                              const AuctionOutcome& ebbs) {
  MetricsRecord rec;
  rec.kappa1 = Rational::of(phi.f_a - ebbs.f_a, ebbs.f_a);
  if (ebbs.f_b != 0)
    rec.kappa2 = Rational::of(100 * phi.f_b, ebbs.f_b);
  rec.kappa3 = phi.bids_submitted
                   ? Rational::of(100 * phi.bids_won, phi.bids_submitted)
                   : Rational{0, 1};
  rec.kappa4 = Rational::of(100 * phi.bids_submitted, ebbs.bids_submitted);
  return rec;
}

std::vector<Bid> strategy_bids(const Scenario& scenario,
                               const PricingContext& pricing,
                               const std::string& strategy,
                               const CampaignConfig& cfg) {
  const Instance& inst = scenario.instance;
  if (strategy == "ebbs")
    return ebbs_bids(inst, pricing, "focal", cfg.parallel);
  if (strategy == "psc")
    return heuristic_bids(inst, psc_clusters(inst, cfg.alpha), pricing,
                          "focal", cfg.parallel);
  if (strategy == "cpmc")
    return heuristic_bids(inst,
                          cpmc_clusters(inst, cfg.pmp_exact_limit, scenario.seed),
                          pricing, "focal", cfg.parallel);
  if (strategy == "ran") return ran_bids(inst, pricing, scenario.seed);
  if (strategy == "rann")
    return heuristic_bids(inst, rann_clusters(inst, scenario.seed), pricing,
                          "focal", cfg.parallel);
  throw std::invalid_argument("unknown strategy '" + strategy + "'");
}

namespace {

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  size_t lo = static_cast<size_t>(pos);
  size_t hi = std::min(lo + 1, v.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return v[lo] * (1 - frac) + v[hi] * frac;
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0;
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(6);
  ss << x;
  return ss.str();
}

}  // namespace

CampaignResult run_campaign(const std::vector<Scenario>& scenarios,
                            const CampaignConfig& cfg) {
  CampaignResult result;
  for (size_t si = 0; si < scenarios.size(); ++si) {
    const Scenario& sc = scenarios[si];
    PricingContext pricing(sc.instance);

    AuctionOutcome ebbs_out;
    bool have_ebbs = false;
    std::string ebbs_error;
    auto bid_and_run = [&](const std::string& strat,
                           AuctionOutcome& out) -> std::string {
      try {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Bid> bids = strategy_bids(sc, pricing, strat, cfg);
        auto bid_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        out = run_auction(sc, bids, strat);
        out.runtime_ms += bid_ms;
        return "";
      } catch (const std::exception& e) {
        return e.what();
      }
    };
    ebbs_error = bid_and_run("ebbs", ebbs_out);
    have_ebbs = ebbs_error.empty();

    for (const std::string& strat : cfg.strategies) {
      CampaignRow row;
      row.seed = sc.seed;
      row.n = sc.instance.num_requests();
      row.cap = sc.instance.cap();
      row.strategy = strat;
      row.alpha = cfg.alpha;
      if (strat == "ebbs") {
        row.outcome = ebbs_out;
        row.error = ebbs_error;
      } else if (!have_ebbs) {
        row.error = "ebbs baseline failed: " + ebbs_error;
      } else {
        row.error = bid_and_run(strat, row.outcome);
      }
      if (row.error.empty() && have_ebbs)
        row.metrics = compute_metrics(row.outcome, ebbs_out);
      result.rows.push_back(std::move(row));
    }
  }

  for (const std::string& strat : cfg.strategies) {
    CampaignSummary s;
    s.strategy = strat;
    std::vector<double> k1, k2, k3, k4;
    for (const CampaignRow& row : result.rows) {
      if (row.strategy != strat || !row.error.empty()) continue;
      ++s.instances;
      k1.push_back(row.metrics.kappa1.value());
      k3.push_back(row.metrics.kappa3.value());
      k4.push_back(row.metrics.kappa4.value());
      if (row.metrics.kappa2)
        k2.push_back(row.metrics.kappa2->value());
      else
        ++s.kappa2_excluded;
    }
    s.k1_mean = mean(k1);
    s.k1_median = quantile(k1, 0.5);
    s.k1_q25 = quantile(k1, 0.25);
    s.k1_q75 = quantile(k1, 0.75);
    s.k2_mean = mean(k2);
    s.k2_median = quantile(k2, 0.5);
    s.k2_q25 = quantile(k2, 0.25);
    s.k2_q75 = quantile(k2, 0.75);
    s.k3_mean = mean(k3);
    s.k4_mean = mean(k4);
    result.summaries.push_back(std::move(s));
  }
  return result;
}

std::string campaign_csv(const CampaignResult& result) {
  std::ostringstream out;
  out << "seed,n,cap,strategy,alpha,bids,won,f_a,f_b,k1,k2,k3,k4,ms\n";
  for (const CampaignRow& r : result.rows) {
    if (!r.error.empty()) {
      out << r.seed << ',' << r.n << ',' << r.cap << ',' << r.strategy << ','
          << fmt(r.alpha) << ",,,,,,,,,\n";
      continue;
    }
    out << r.seed << ',' << r.n << ',' << r.cap << ',' << r.strategy << ','
        << fmt(r.alpha) << ',' << r.outcome.bids_submitted << ','
        << r.outcome.bids_won << ',' << r.outcome.f_a << ',' << r.outcome.f_b
        << ',' << fmt(r.metrics.kappa1.value()) << ','
        << (r.metrics.kappa2 ? fmt(r.metrics.kappa2->value()) : "NA") << ','
        << fmt(r.metrics.kappa3.value()) << ','
        << fmt(r.metrics.kappa4.value()) << ',' << r.outcome.runtime_ms
        << '\n';
  }
  return out.str();
}

std::string campaign_summary_json(const CampaignResult& result) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const CampaignSummary& s : result.summaries) {
    nlohmann::ordered_json js;
    js["strategy"] = s.strategy;
    js["instances"] = s.instances;
    js["kappa2_excluded"] = s.kappa2_excluded;
    js["k1"] = {{"mean", s.k1_mean},
                {"median", s.k1_median},
                {"q25", s.k1_q25},
                {"q75", s.k1_q75}};
    js["k2"] = {{"mean", s.k2_mean},
                {"median", s.k2_median},
                {"q25", s.k2_q25},
                {"q75", s.k2_q75}};
    js["k3_mean"] = s.k3_mean;
    js["k4_mean"] = s.k4_mean;
    j.push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string campaign_series_csv(const CampaignResult& result) {
  std::ostringstream out;
  out << "strategy,rank,k2\n";
  std::vector<std::string> strategies;
  for (const CampaignRow& r : result.rows)
    if (std::find(strategies.begin(), strategies.end(), r.strategy) ==
        strategies.end())
      strategies.push_back(r.strategy);
  for (const std::string& strat : strategies) {
    std::vector<double> k2;
    for (const CampaignRow& r : result.rows)
      if (r.strategy == strat && r.error.empty() && r.metrics.kappa2)
        k2.push_back(r.metrics.kappa2->value());
    std::sort(k2.rbegin(), k2.rend());
    for (size_t i = 0; i < k2.size(); ++i)
      out << strat << ',' << i + 1 << ',' << fmt(k2[i]) << '\n';
  }
  return out.str();
}

}  // namespace bundlebid
