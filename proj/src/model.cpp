#include "bundlebid/model.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace bundlebid {

int64_t distance(Point p, Point q) {
  double dx = static_cast<double>(p.x) - static_cast<double>(q.x);
  double dy = static_cast<double>(p.y) - static_cast<double>(q.y);
  // llround rounds half away from zero.
  return std::llround(std::sqrt(dx * dx + dy * dy));
}

Instance::Instance(Point depot,
                   std::vector<std::pair<Point, int64_t>> customers,
                   int64_t cap)
    : depot_(depot), cap_(cap) {
  if (customers.size() > kMaxRequests)
    throw TooManyRequests("instance has " + std::to_string(customers.size()) +
                          " customers, limit is " +
                          std::to_string(kMaxRequests));
  if (cap <= 0) throw DemandExceedsCapacity("capacity must be positive");
  customers_.reserve(customers.size());
  int id = 0;
  for (const auto& [loc, demand] : customers) {
    if (demand < 1 || demand > cap)
      throw DemandExceedsCapacity("demand " + std::to_string(demand) +
                                  " of request " + std::to_string(id) +
                                  " outside 1.." + std::to_string(cap));
    customers_.push_back({id++, loc, demand});
    total_demand_ += demand;
  }
  stride_ = static_cast<int>(customers_.size()) + 1;
  dist_.assign(static_cast<size_t>(stride_) * stride_, 0);
  auto point = [&](int idx) {
    return idx == 0 ? depot_ : customers_[idx - 1].location;
  };
  for (int i = 0; i < stride_; ++i)
    for (int j = i + 1; j < stride_; ++j)
      dist_[i * stride_ + j] = dist_[j * stride_ + i] =
          distance(point(i), point(j));
}

namespace {

int64_t parse_int(const std::string& tok, int line) {
  size_t pos = 0;
  int64_t v;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return v;
}

std::vector<std::string> next_tokens(std::istream& in, int& line) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (!toks.empty()) return toks;
  }
  throw ParseError(line + 1, "unexpected end of file");
}

}  // namespace

CvrpData import_cvrp(std::istream& text) {
  int line = 0;
  auto header = next_tokens(text, line);
  if (header.size() < 2) throw ParseError(line, "header needs count and capacity");
  int64_t count = parse_int(header[0], line);
  int64_t cap = parse_int(header[1], line);
  if (count < 1) throw ParseError(line, "customer count must be positive");
  if (cap < 1) throw ParseError(line, "capacity must be positive");

  auto depot_toks = next_tokens(text, line);
  if (depot_toks.size() < 2) throw ParseError(line, "depot line needs x y");
  CvrpData data;
  data.cap = cap;
  data.depot = {static_cast<int32_t>(parse_int(depot_toks[0], line)),
                static_cast<int32_t>(parse_int(depot_toks[1], line))};

  for (int64_t i = 0; i < count; ++i) {
    auto toks = next_tokens(text, line);
    if (toks.size() < 3) throw ParseError(line, "customer line needs x y demand");
    Point p{static_cast<int32_t>(parse_int(toks[0], line)),
            static_cast<int32_t>(parse_int(toks[1], line))};
    int64_t demand = parse_int(toks[2], line);
    if (demand < 0) throw ParseError(line, "negative demand");
    data.customers.emplace_back(p, demand);
  }
  return data;
}

CvrpData truncate_cvrp(CvrpData data, int m) {
  if (m < 0 || static_cast<size_t>(m) > data.customers.size())
    throw ParseError(0, "truncation size " + std::to_string(m) +
                            " exceeds available customers");
  data.customers.resize(m);
  return data;
}

std::string save_scenario(const Scenario& s) {
  nlohmann::ordered_json j;
  j["cap"] = s.instance.cap();
  j["depot"] = {s.instance.depot().x, s.instance.depot().y};
  auto customers = nlohmann::ordered_json::array();
  for (const auto& c : s.instance.customers())
    customers.push_back({c.location.x, c.location.y, c.demand});
  j["customers"] = customers;
  j["seed"] = s.seed;
  auto rivals = nlohmann::ordered_json::array();
  for (const auto& b : s.rival_bids) {
    nlohmann::ordered_json jb;
    jb["carrier"] = b.carrier;
    jb["requests"] = b.requests.ids();
    jb["price"] = b.price;
    rivals.push_back(std::move(jb));
  }
  j["rival_bids"] = rivals;
  return j.dump(2) + "\n";
}

Scenario load_scenario(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("scenario is not valid JSON: ") + e.what());
  }
  try {
    int64_t cap = j.at("cap").get<int64_t>();
    auto depot_arr = j.at("depot");
    Point depot{depot_arr.at(0).get<int32_t>(), depot_arr.at(1).get<int32_t>()};
    std::vector<std::pair<Point, int64_t>> customers;
    for (const auto& c : j.at("customers"))
      customers.emplace_back(
          Point{c.at(0).get<int32_t>(), c.at(1).get<int32_t>()},
          c.at(2).get<int64_t>());
    Instance instance(depot, std::move(customers), cap);

    std::vector<Bid> rivals;
    for (const auto& jb : j.at("rival_bids")) {
      Bid b;
      b.carrier = jb.at("carrier").get<std::string>();
      for (int id : jb.at("requests")) {
        if (id < 0 || id >= instance.num_requests())
          throw SchemaError("rival bid references unknown request " +
                            std::to_string(id));
        b.requests = b.requests.with(id);
      }
      b.price = jb.at("price").get<int64_t>();
      if (b.requests.empty()) throw SchemaError("rival bid on empty set");
      if (b.price < 1) throw SchemaError("rival bid price must be >= 1");
      if (!instance.elementary(b.requests))
        throw SchemaError("rival bid set is not elementary");
      rivals.push_back(std::move(b));
    }
    uint64_t seed = j.at("seed").get<uint64_t>();
    return Scenario{std::move(instance), std::move(rivals), seed};
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("scenario document malformed: ") + e.what());
  } catch (const SchemaError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace bundlebid
