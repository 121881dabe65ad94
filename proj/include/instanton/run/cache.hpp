#pragma once

#include "instanton/verdict.hpp"
#include "instanton/version.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace instanton::run {

// Keyed claim store persisted as JSON-lines. Entries carry the artifact
// version and the configuration hash; lines from other versions or configs
// are ignored on load. Writes are append-only and serialized.
class RunCache {
 public:
  RunCache() = default;
  RunCache(std::string dir, std::string config_hash)
      : enabled_(!dir.empty()),
        path_(dir.empty() ? ""
                          : (std::filesystem::path(dir) /
                             "instanton_cache.jsonl")
                                .string()),
        config_hash_(std::move(config_hash)) {
    if (enabled_) {
      std::filesystem::create_directories(dir);
      load();
    }
  }

  bool enabled() const { return enabled_; }

  bool lookup(int n, int k, VerdictReport& out) const {
    auto it = points_.find({n, k});
    if (it == points_.end() || !it->second.complete) return false;
    out = it->second.report;
    return true;
  }

  void store(const VerdictReport& rep) {
    if (!enabled_) return;
    std::lock_guard<std::mutex> guard(mu_);
    std::ofstream os(path_, std::ios::app);
    for (const auto& c : rep.claims) {
      nlohmann::ordered_json j;
      j["v"] = kArtifactVersion;
      j["h"] = config_hash_;
      j["kind"] = "claim";
      j["n"] = rep.n;
      j["k"] = rep.k;
      j["claim_id"] = c.id;
      j["computed"] = c.computed;
      j["expected"] = c.expected;
      j["pass"] = c.pass;
      os << j.dump() << '\n';
    }
    for (const auto& [key, value] : rep.data) {
      nlohmann::ordered_json j;
      j["v"] = kArtifactVersion;
      j["h"] = config_hash_;
      j["kind"] = "data";
      j["n"] = rep.n;
      j["k"] = rep.k;
      j["key"] = key;
      j["value"] = value;
      os << j.dump() << '\n';
    }
    nlohmann::ordered_json j;
    j["v"] = kArtifactVersion;
    j["h"] = config_hash_;
    j["kind"] = "point";
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["claims"] = rep.claims.size();
    os << j.dump() << '\n';
  }

 private:
  struct Entry {
    VerdictReport report;
    bool complete = false;
  };

  void load() {
    std::ifstream is(path_);
    if (!is) return;
    std::string line;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) continue;
      if (j.value("v", "") != kArtifactVersion) continue;  // stale version
      if (j.value("h", "") != config_hash_) continue;
      const int n = j.value("n", 0), k = j.value("k", 0);
      Entry& e = points_[{n, k}];
      e.report.n = n;
      e.report.k = k;
      const std::string kind = j.value("kind", "");
      if (kind == "claim") {
        Claim c;
        c.id = j.value("claim_id", "");
        c.computed = j.value("computed", 0LL);
        c.expected = j.value("expected", 0LL);
        c.pass = j.value("pass", false);
        e.report.claims.push_back(c);
      } else if (kind == "data") {
        e.report.data[j.value("key", "")] = j.value("value", 0LL);
      } else if (kind == "point") {
        e.complete =
            e.report.claims.size() == j.value("claims", std::size_t(0));
      }
    }
  }

  bool enabled_ = false;
  std::string path_;
  std::string config_hash_;
  std::map<std::pair<int, int>, Entry> points_;
  std::mutex mu_;
};

}  // namespace instanton::run
