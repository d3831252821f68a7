#include "bundlebid/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bundlebid {

std::string save_bids(const std::vector<Bid>& bids, const BidFileMeta& meta) {
  nlohmann::ordered_json j;
  j["meta"] = {{"strategy", meta.strategy},
               {"alpha", meta.alpha},
               {"seed", meta.seed},
               {"runtime_ms", meta.runtime_ms}};
  auto arr = nlohmann::ordered_json::array();
  for (const Bid& b : bids) {
    nlohmann::ordered_json jb;
    jb["carrier"] = b.carrier;
    jb["requests"] = b.requests.ids();
    jb["price"] = b.price;
    arr.push_back(std::move(jb));
  }
  j["bids"] = arr;
  return j.dump(2) + "\n";
}

std::pair<std::vector<Bid>, BidFileMeta> load_bids(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("bid file is not valid JSON: ") + e.what());
  }
  try {
    BidFileMeta meta;
    const auto& jm = j.at("meta");
    meta.strategy = jm.at("strategy").get<std::string>();
    meta.alpha = jm.at("alpha").get<double>();
    meta.seed = jm.at("seed").get<uint64_t>();
    meta.runtime_ms = jm.at("runtime_ms").get<int64_t>();
    std::vector<Bid> bids;
    for (const auto& jb : j.at("bids")) {
      Bid b;
      b.carrier = jb.at("carrier").get<std::string>();
      for (int id : jb.at("requests")) {
        if (id < 0 || id >= kMaxRequests)
          throw SchemaError("bid request id out of range");
        b.requests = b.requests.with(id);
      }
      b.price = jb.at("price").get<int64_t>();
      if (b.requests.empty()) throw SchemaError("bid on empty request set");
      bids.push_back(std::move(b));
    }
    return {std::move(bids), std::move(meta)};
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bid file malformed: ") + e.what());
  }
}

std::string bids_csv(const std::vector<Bid>& bids) {
  std::ostringstream out;
  out << "carrier,mask,size,price\n";
  for (const Bid& b : bids)
    out << b.carrier << ',' << b.requests.mask() << ',' << b.requests.size()
        << ',' << b.price << '\n';
  return out.str();
}

std::string save_wdp_solution(const WdpSolution& sol) {
  nlohmann::ordered_json j;
  j["winning"] = sol.winning;
  j["f_a"] = sol.total_cost;
  nlohmann::ordered_json per;
  for (const auto& [carrier, revenue] : sol.per_carrier_revenue)
    per[carrier] = revenue;
  j["per_carrier"] = per.is_null() ? nlohmann::ordered_json::object() : per;
  return j.dump(2) + "\n";
}

WdpSolution load_wdp_solution(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("solution file is not valid JSON: ") + e.what());
  }
  try {
    WdpSolution sol;
    sol.winning = j.at("winning").get<std::vector<int>>();
    sol.total_cost = j.at("f_a").get<int64_t>();
    for (const auto& [carrier, revenue] : j.at("per_carrier").items())
      sol.per_carrier_revenue[carrier] = revenue.get<int64_t>();
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("solution file malformed: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

}  // namespace bundlebid
