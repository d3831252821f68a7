#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bundlebid {

constexpr int kMaxRequests = 64;

struct DemandExceedsCapacity : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooManyRequests : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  int32_t x = 0;
  int32_t y = 0;
  bool operator==(const Point&) const = default;
};

// Rounded Euclidean distance, half away from zero.
int64_t distance(Point p, Point q);

// Subset of the tendered requests as a 64-bit mask; request ids are bit
// positions. Canonical, duplicate-free by construction.
class RequestSet {
 public:
  constexpr RequestSet() = default;
  constexpr explicit RequestSet(uint64_t mask) : mask_(mask) {}

  static RequestSet of(std::initializer_list<int> ids) {
    uint64_t m = 0;
    for (int id : ids) m |= uint64_t{1} << id;
    return RequestSet(m);
  }

  constexpr uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int id) const { return (mask_ >> id) & 1; }
  constexpr bool contains_all(RequestSet s) const {
    return (mask_ & s.mask_) == s.mask_;
  }
  constexpr bool intersects(RequestSet s) const { return mask_ & s.mask_; }

  constexpr RequestSet with(int id) const {
    return RequestSet(mask_ | (uint64_t{1} << id));
  }
  constexpr RequestSet united(RequestSet s) const {
    return RequestSet(mask_ | s.mask_);
  }
  constexpr RequestSet minus(RequestSet s) const {
    return RequestSet(mask_ & ~s.mask_);
  }
  constexpr int lowest() const { return std::countr_zero(mask_); }

  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  auto operator<=>(const RequestSet&) const = default;

 private:
  uint64_t mask_ = 0;
};

struct Customer {
  int id;
  Point location;
  int64_t demand;
};

// Immutable after construction; the depot doubles as the shipper's warehouse.
class Instance {
 public:
  Instance(Point depot, std::vector<std::pair<Point, int64_t>> customers,
           int64_t cap);

  Point depot() const { return depot_; }
  int64_t cap() const { return cap_; }
  int num_requests() const { return static_cast<int>(customers_.size()); }
  const std::vector<Customer>& customers() const { return customers_; }
  int64_t demand(int id) const { return customers_[id].demand; }
  int64_t total_demand() const { return total_demand_; }

  int64_t demand_of(RequestSet s) const {
    int64_t sum = 0;
    for (uint64_t m = s.mask(); m; m &= m - 1)
      sum += customers_[std::countr_zero(m)].demand;
    return sum;
  }
  bool elementary(RequestSet s) const { return demand_of(s) <= cap_; }

  // Matrix index 0 is the depot, request id i maps to index i + 1.
  int64_t dist(int i, int j) const { return dist_[i * stride_ + j]; }
  int64_t depot_dist(int id) const { return dist(0, id + 1); }
  int64_t customer_dist(int i, int j) const { return dist(i + 1, j + 1); }

  RequestSet all_requests() const {
    int n = num_requests();
    return RequestSet(n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

 private:
  Point depot_;
  std::vector<Customer> customers_;
  int64_t cap_;
  int64_t total_demand_ = 0;
  int stride_;
  std::vector<int64_t> dist_;
};

struct Bid {
  std::string carrier;
  RequestSet requests;
  int64_t price = 0;
  bool operator==(const Bid&) const = default;
};

struct Scenario {
  Instance instance;
  std::vector<Bid> rival_bids;
  uint64_t seed = 0;
};

struct CvrpData {
  Point depot;
  std::vector<std::pair<Point, int64_t>> customers;
  int64_t cap;
};

// Classic Christofides/Eilon plain text format: header line
// "<count> <cap> <max_route_time> <drop_time>", depot line "x y", then one
// "x y demand" line per customer.
CvrpData import_cvrp(std::istream& text);

// Keep the first m customers, in file order.
CvrpData truncate_cvrp(CvrpData data, int m);

std::string save_scenario(const Scenario& s);
Scenario load_scenario(const std::string& bytes);

}  // namespace bundlebid
