#pragma once

#include <string>
#include <vector>

namespace impactzeta {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckOutcome> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back(CheckOutcome{std::move(name), pass, std::move(detail)});
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

}  // namespace impactzeta
