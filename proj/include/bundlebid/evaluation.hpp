#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bundlebid/clustering.hpp"
#include "bundlebid/wdp.hpp"

namespace bundlebid {

// Exact ratio of integers; κ values are kept rational until printed.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational of(int64_t num, int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

struct AuctionOutcome {
  std::string strategy;
  int64_t bids_submitted = 0;
  int64_t bids_won = 0;
  int64_t f_a = 0;
  int64_t f_b = 0;
  int64_t runtime_ms = 0;
};

struct MetricsRecord {
  Rational kappa1;
  std::optional<Rational> kappa2;  // NA when the EBBS sales potential is 0
  Rational kappa3;
  Rational kappa4;
};

// Clear the auction with the focal bids joined to the scenario's rival bids.
AuctionOutcome run_auction(const Scenario& scenario,
                           const std::vector<Bid>& strategy_bids,
                           const std::string& strategy_tag);

MetricsRecord compute_metrics(const AuctionOutcome& outcome_phi,
                              const AuctionOutcome& outcome_ebbs);

struct CampaignConfig {
  std::vector<std::string> strategies{"ebbs", "psc", "cpmc", "ran", "rann"};
  double alpha = kDefaultAlpha;
  int pmp_exact_limit = kPmpExactLimit;
  bool parallel = true;
};

struct CampaignRow {
  uint64_t seed = 0;
  int n = 0;
  int64_t cap = 0;
  std::string strategy;
  double alpha = 0;
  AuctionOutcome outcome;
  MetricsRecord metrics;
  std::string error;  // nonempty when this strategy failed on the scenario
};

struct CampaignSummary {
  std::string strategy;
  int instances = 0;
  int kappa2_excluded = 0;  // f_b^EBBS == 0 rows
  double k1_mean = 0, k1_median = 0, k1_q25 = 0, k1_q75 = 0;
  double k2_mean = 0, k2_median = 0, k2_q25 = 0, k2_q75 = 0;
  double k3_mean = 0;
  double k4_mean = 0;
};

struct CampaignResult {
  std::vector<CampaignRow> rows;
  std::vector<CampaignSummary> summaries;
};

// Bids of a named strategy for one scenario. Knows every strategy tag the
// CLI accepts.
std::vector<Bid> strategy_bids(const Scenario& scenario,
                               const PricingContext& pricing,
                               const std::string& strategy,
                               const CampaignConfig& cfg);

// EBBS once per scenario, then every listed strategy; per-scenario failures
// are recorded in the row and the campaign continues.
CampaignResult run_campaign(const std::vector<Scenario>& scenarios,
                            const CampaignConfig& cfg);

std::string campaign_csv(const CampaignResult& result);
std::string campaign_summary_json(const CampaignResult& result);

// Plot-ready series: per strategy, κ2 values sorted descending.
std::string campaign_series_csv(const CampaignResult& result);

}  // namespace bundlebid
