#pragma once

#include <map>
#include <string>
#include <vector>

namespace instanton {

// One verified claim: pass iff computed == expected exactly.
struct Claim {
  std::string id;
  long long computed = 0;
  long long expected = 0;
  bool pass = false;

  static Claim make(std::string id, long long computed, long long expected) {
    Claim c;
    c.id = std::move(id);
    c.computed = computed;
    c.expected = expected;
    c.pass = computed == expected;
    return c;
  }
};

// Per-(n, k) verification record: claims, exploratory data for the tables,
// and coarse per-claim timings in milliseconds.
struct VerdictReport {
  int k = 0;
  int n = 0;
  std::vector<Claim> claims;
  std::map<std::string, long long> data;
  std::map<std::string, long long> timings;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }

  const Claim* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }
};

}  // namespace instanton
