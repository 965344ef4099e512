#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fsplit/errors.hpp"

namespace fsplit {

struct RunConfig {
  Limits limits;
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 20240901;

  void validate() const {
    if (limits.term_cap == 0 || limits.dim_cap == 0 || limits.weyl_order_cap == 0 || limits.enum_cap == 0)
      throw InputError("caps must be positive");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["term_cap"] = limits.term_cap;
    j["dim_cap"] = limits.dim_cap;
    j["weyl_order_cap"] = limits.weyl_order_cap;
    j["enum_cap"] = limits.enum_cap;
    return j;
  }
};

enum class Status { Pass, Fail, Skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::optional<nlohmann::ordered_json> witness;
};

class Report {
 public:
  Report(std::string command, RunConfig config)
      : command_(std::move(command)), config_(std::move(config)), start_(std::chrono::steady_clock::now()) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void pass(std::string name, std::string detail = {}) { add({std::move(name), Status::Pass, std::move(detail), {}}); }
  void fail(std::string name, std::string detail, std::optional<nlohmann::ordered_json> witness = {}) {
    add({std::move(name), Status::Fail, std::move(detail), std::move(witness)});
  }
  void skip(std::string name, std::string detail) { add({std::move(name), Status::Skip, std::move(detail), {}}); }
  void expect(std::string name, bool ok, std::string detail = {}, std::optional<nlohmann::ordered_json> witness = {}) {
    if (ok) pass(std::move(name), std::move(detail));
    else fail(std::move(name), std::move(detail), std::move(witness));
  }

  bool failed() const {
    return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; });
  }
  int exit_code() const { return failed() ? 1 : 0; }
  const std::vector<Check>& checks() const { return checks_; }

  std::vector<Check> sorted_checks() const {
    auto v = checks_;
    std::stable_sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return v;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["config"] = config_.to_json();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : sorted_checks()) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["status"] = to_string(c.status);
      if (!c.detail.empty()) e["detail"] = c.detail;
      if (c.witness) e["witness"] = *c.witness;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["status"] = failed() ? "fail" : "pass";
    if (config_.timing) j["elapsed_ms"] = elapsed_ms();
    return j;
  }

  std::string to_text() const {
    std::string s;
    for (const auto& c : sorted_checks()) {
      s += std::string("[") + to_string(c.status) + "] " + c.name;
      if (!c.detail.empty()) s += ": " + c.detail;
      s += "\n";
    }
    s += std::string("status: ") + (failed() ? "fail" : "pass") + " (seed " + std::to_string(config_.seed) + ")\n";
    if (config_.timing) s += "elapsed: " + std::to_string(elapsed_ms()) + " ms\n";
    return s;
  }

  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::string command_;
  RunConfig config_;
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fsplit
