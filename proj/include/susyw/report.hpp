#pragma once

#include <string>
#include <vector>

namespace susyw {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // empty when passing unless informative
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
};

}  // namespace susyw
