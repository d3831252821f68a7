#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bundlebid/evaluation.hpp"
#include "bundlebid/instance_gen.hpp"
#include "bundlebid/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitLimits = 3;
constexpr int kExitInfeasible = 4;

using namespace bundlebid;

uint64_t default_seed() {
  if (const char* env = std::getenv("BUNDLEBID_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

void set_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

int cmd_gen(const std::string& cvrp_path, int synth_n, int64_t synth_cap,
            int64_t synth_demand_lo, int64_t synth_demand_hi, GenConfig cfg,
            const std::string& out_path) {
  CvrpData source;
  if (!cvrp_path.empty()) {
    std::ifstream in(cvrp_path);
    if (!in) {
      std::cerr << "error: cannot open source file " << cvrp_path << "\n";
      return kExitConfig;
    }
    source = import_cvrp(in);
  } else if (synth_n > 0) {
    source = synthetic_source(synth_n, synth_cap, synth_demand_lo,
                              synth_demand_hi, 100, cfg.seed);
  } else {
    std::cerr << "error: need --cvrp FILE or --synthetic N\n";
    return kExitConfig;
  }
  if (cfg.m == 0) cfg.m = static_cast<int>(source.customers.size());
  Scenario scenario = generate_scenario(source, cfg);
  write_file(out_path, save_scenario(scenario));
  std::cout << "seed " << scenario.seed << ", " << scenario.instance.num_requests()
            << " requests, cap " << scenario.instance.cap() << ", "
            << scenario.rival_bids.size() << " rival bids -> " << out_path
            << "\n";
  return 0;
}

int cmd_bid(const std::string& scenario_path, const std::string& strategy,
            double alpha, uint64_t seed_override, bool have_seed_override,
            int pmp_limit, const std::string& out_path,
            const std::string& csv_path, bool serial) {
  Scenario scenario = load_scenario(read_file(scenario_path));
  if (have_seed_override) scenario.seed = seed_override;
  PricingContext pricing(scenario.instance);
  CampaignConfig cfg;
  cfg.alpha = alpha;
  cfg.pmp_exact_limit = pmp_limit;
  cfg.parallel = !serial;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<Bid> bids = strategy_bids(scenario, pricing, strategy, cfg);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  BidFileMeta meta{strategy, alpha, scenario.seed, ms};
  write_file(out_path, save_bids(bids, meta));
  if (!csv_path.empty()) write_file(csv_path, bids_csv(bids));
  std::cout << strategy << ": " << bids.size() << " bids in " << ms
            << " ms -> " << out_path << "\n";
  return 0;
}

int cmd_clear(const std::string& scenario_path, const std::string& bids_path,
              const std::string& out_path) {
  Scenario scenario = load_scenario(read_file(scenario_path));
  auto [focal, meta] = load_bids(read_file(bids_path));
  std::vector<Bid> all = focal;
  all.insert(all.end(), scenario.rival_bids.begin(),
             scenario.rival_bids.end());
  WdpSolution sol = solve_wdp(scenario.instance.num_requests(), all);
  write_file(out_path, save_wdp_solution(sol));
  std::cout << "f_a " << sol.total_cost << ", " << sol.winning.size()
            << " winning bids -> " << out_path << "\n";
  return 0;
}

int cmd_report(const std::vector<std::string>& runs,
               const std::string& out_path, const std::string& summary_path,
               const std::string& series_path) {
  // Each run is scenario.json=bids1.json,bids2.json,...; metrics are
  // computed against the run's EBBS bid file.
  CampaignResult result;
  std::vector<std::string> strategy_order;
  for (const std::string& run : runs) {
    size_t eq = run.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("run must be scenario.json=bids.json,... : " + run);
    Scenario scenario = load_scenario(read_file(run.substr(0, eq)));

    struct Loaded {
      std::vector<Bid> bids;
      BidFileMeta meta;
    };
    std::vector<Loaded> loaded;
    std::istringstream paths(run.substr(eq + 1));
    std::string path;
    while (std::getline(paths, path, ','))
      if (!path.empty()) {
        auto [bids, meta] = load_bids(read_file(path));
        loaded.push_back({std::move(bids), std::move(meta)});
      }

    const Loaded* ebbs = nullptr;
    for (const Loaded& l : loaded)
      if (l.meta.strategy == "ebbs") ebbs = &l;
    if (!ebbs)
      throw std::invalid_argument("report needs an ebbs bid file per scenario");
    AuctionOutcome ebbs_out = run_auction(scenario, ebbs->bids, "ebbs");

    for (const Loaded& l : loaded) {
      CampaignRow row;
      row.seed = scenario.seed;
      row.n = scenario.instance.num_requests();
      row.cap = scenario.instance.cap();
      row.strategy = l.meta.strategy;
      row.alpha = l.meta.alpha;
      row.outcome = (&l == ebbs) ? ebbs_out
                                 : run_auction(scenario, l.bids, l.meta.strategy);
      row.metrics = compute_metrics(row.outcome, ebbs_out);
      if (std::find(strategy_order.begin(), strategy_order.end(),
                    row.strategy) == strategy_order.end())
        strategy_order.push_back(row.strategy);
      result.rows.push_back(std::move(row));
    }
  }

  write_file(out_path, campaign_csv(result));
  if (!summary_path.empty()) {
    // reuse the campaign aggregation by rebuilding summaries over the rows
    CampaignConfig cfg;
    cfg.strategies = strategy_order;
    CampaignResult agg;
    agg.rows = result.rows;
    for (const std::string& strat : strategy_order) {
      CampaignSummary s;
      s.strategy = strat;
      std::vector<double> k1, k2, k3, k4;
      for (const CampaignRow& row : agg.rows) {
        if (row.strategy != strat) continue;
        ++s.instances;
        k1.push_back(row.metrics.kappa1.value());
        k3.push_back(row.metrics.kappa3.value());
        k4.push_back(row.metrics.kappa4.value());
        if (row.metrics.kappa2)
          k2.push_back(row.metrics.kappa2->value());
        else
          ++s.kappa2_excluded;
      }
      auto avg = [](const std::vector<double>& v) {
        double sum = 0;
        for (double x : v) sum += x;
        return v.empty() ? 0 : sum / static_cast<double>(v.size());
      };
      auto med = [](std::vector<double> v) {
        if (v.empty()) return 0.0;
        std::sort(v.begin(), v.end());
        size_t h = v.size() / 2;
        return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
      };
      s.k1_mean = avg(k1);
      s.k1_median = med(k1);
      s.k2_mean = avg(k2);
      s.k2_median = med(k2);
      s.k3_mean = avg(k3);
      s.k4_mean = avg(k4);
      result.summaries.push_back(std::move(s));
    }
    write_file(summary_path, campaign_summary_json(result));
  }
  if (!series_path.empty()) write_file(series_path, campaign_series_csv(result));
  std::cout << result.rows.size() << " rows -> " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bundle bidding strategies for combinatorial transport auctions"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = library default)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a scenario file");
  std::string cvrp_path, gen_out = "scenario.json";
  int synth_n = 0;
  int64_t synth_cap = 100, synth_dlo = 10, synth_dhi = 30;
  GenConfig gcfg;
  gcfg.seed = default_seed();
  gen->add_option("--cvrp", cvrp_path, "CVRP source file");
  gen->add_option("--synthetic", synth_n, "synthetic source with N customers");
  gen->add_option("--synthetic-cap", synth_cap, "synthetic source capacity");
  gen->add_option("--synthetic-demand-lo", synth_dlo);
  gen->add_option("--synthetic-demand-hi", synth_dhi);
  gen->add_option("--m", gcfg.m, "requests to keep (0 = all)");
  gen->add_option("--cap", gcfg.cap, "capacity override (0 = from source)");
  gen->add_option("--rivals", gcfg.rival_bid_count, "rival bid count");
  gen->add_option("--rival-carriers", gcfg.rival_carriers);
  gen->add_option("--jitter-lo", gcfg.jitter_lo);
  gen->add_option("--jitter-hi", gcfg.jitter_hi);
  gen->add_option("--seed", gcfg.seed);
  gen->add_option("--out", gen_out);

  // bid
  auto* bid = app.add_subcommand("bid", "run a bidding strategy");
  std::string bid_scenario, strategy = "ebbs", bid_out = "bids.json", bid_csv_path;
  double alpha = kDefaultAlpha;
  uint64_t bid_seed = 0;
  int pmp_limit = kPmpExactLimit;
  bool serial = false;
  bid->add_option("scenario", bid_scenario, "scenario file")->required();
  bid->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"ebbs", "psc", "cpmc", "ran", "rann"}));
  bid->add_option("--alpha", alpha)->check(CLI::Range(1e-9, 1.0));
  auto* seed_opt = bid->add_option("--seed", bid_seed, "override scenario seed");
  bid->add_option("--pmp-exact-limit", pmp_limit);
  bid->add_flag("--serial", serial, "disable parallel pricing");
  bid->add_option("--out", bid_out);
  bid->add_option("--csv", bid_csv_path, "also write CSV bid list");

  // clear
  auto* clear = app.add_subcommand("clear", "solve winner determination");
  std::string clear_scenario, clear_bids, clear_out = "solution.json";
  clear->add_option("scenario", clear_scenario)->required();
  clear->add_option("bids", clear_bids)->required();
  clear->add_option("--out", clear_out);

  // report
  auto* report = app.add_subcommand("report", "join outcomes into CSV/JSON");
  std::vector<std::string> runs;
  std::string report_out = "report.csv", summary_out, series_out;
  report->add_option("runs", runs, "scenario.json=bids1.json,bids2.json,...")
      ->required();
  report->add_option("--out", report_out);
  report->add_option("--summary", summary_out);
  report->add_option("--series", series_out, "k2-descending plot series CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  set_jobs(jobs);
  try {
    if (*gen)
      return cmd_gen(cvrp_path, synth_n, synth_cap, synth_dlo, synth_dhi,
                     gcfg, gen_out);
    if (*bid)
      return cmd_bid(bid_scenario, strategy, alpha, bid_seed,
                     seed_opt->count() > 0, pmp_limit, bid_out, bid_csv_path,
                     serial);
    if (*clear) return cmd_clear(clear_scenario, clear_bids, clear_out);
    if (*report) return cmd_report(runs, report_out, summary_out, series_out);
  } catch (const SetTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimits;
  } catch (const Uncoverable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
