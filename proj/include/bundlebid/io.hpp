#pragma once

#include <string>
#include <vector>

#include "bundlebid/model.hpp"
#include "bundlebid/wdp.hpp"

namespace bundlebid {

struct BidFileMeta {
  std::string strategy;
  double alpha = 0;
  uint64_t seed = 0;
  int64_t runtime_ms = 0;
};

std::string save_bids(const std::vector<Bid>& bids, const BidFileMeta& meta);
std::pair<std::vector<Bid>, BidFileMeta> load_bids(const std::string& bytes);

// CSV export: carrier,mask,size,price
std::string bids_csv(const std::vector<Bid>& bids);

std::string save_wdp_solution(const WdpSolution& sol);
WdpSolution load_wdp_solution(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace bundlebid
