#pragma once

#include "instanton/cohom/cohomology.hpp"
#include "instanton/config.hpp"
#include "instanton/monad/monad.hpp"
#include "instanton/run/cache.hpp"
#include "instanton/run/report.hpp"
#include "instanton/verdict.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace instanton::run {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n_min = 1, n_max = 1;
  int k_min = 2, k_max = 2;
  RankEngine engine = RankEngine::automatic;
  std::size_t prime_count = 3;
  std::uint64_t seed = 1;
  std::size_t monad_trials = 100;
  std::string out_path;
  ReportFormat format = ReportFormat::json;
  std::string cache_dir;

  void validate() const {
    if (k_min < 2) throw ConfigError("k range must start at k >= 2");
    if (n_min < 1) throw ConfigError("n range must start at n >= 1");
    if (k_max < k_min || n_max < n_min)
      throw ConfigError("empty (n, k) range");
    if (engine == RankEngine::multimodular && prime_count < 2)
      throw ConfigError("multimodular engine needs prime_count >= 2");
    if (monad_trials < 1) throw ConfigError("monad_trials must be >= 1");
  }

  EngineConfig engine_config() const {
    EngineConfig cfg;
    cfg.engine = engine;
    cfg.prime_count = prime_count;
    cfg.seed = seed;
    return cfg;
  }

  // Hash over everything that influences computed values (ranges excluded:
  // points are keyed individually in the cache).
  std::string config_hash() const {
    std::ostringstream os;
    os << "engine=" << instanton::to_string(engine)
       << ";primes=" << prime_count << ";seed=" << seed
       << ";trials=" << monad_trials;
    const std::string s = os.str();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
  }

  nlohmann::ordered_json echo() const {
    nlohmann::ordered_json j;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["k_min"] = k_min;
    j["k_max"] = k_max;
    j["engine"] = instanton::to_string(engine);
    j["prime_count"] = prime_count;
    j["seed"] = seed;
    j["monad_trials"] = monad_trials;
    j["format"] = to_string(format);
    return j;
  }
};

// All checks for one grid point: formula verdicts, Clebsch-Gordan
// exactness, the equivariance sweep, and the monad suite.
inline VerdictReport verify_point(int k, int n, const EngineConfig& cfg,
                                  std::size_t monad_trials,
                                  std::uint64_t seed) {
  VerdictReport rep = cohom::verify_formulas(k, n, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  for (auto& c : cohom::sequence_claims(k, n, cfg))
    rep.claims.push_back(std::move(c));
  for (auto& c : cohom::equivariance_claims(k, n))
    rep.claims.push_back(std::move(c));
  const auto monad = monad::monad_claims(k, n, monad_trials, seed);
  for (const auto& c : monad.claims) rep.claims.push_back(c);
  rep.data["symplectic_dim"] = static_cast<long long>(monad.solution_dim);
  rep.timings["monad_bjbt_zero"] = cohom::detail::ms_since(t0);
  return rep;
}

struct GridResult {
  std::vector<VerdictReport> reports;
  std::string report_text;
  bool all_pass = true;
  std::size_t cached_points = 0;
};

// Runs every grid point not already in the cache, appends new results, and
// renders the canonical report. Points are dispatched to a bounded worker
// pool; assembly is in (n, k) order, so output does not depend on
// completion order.
inline GridResult run_grid(const RunConfig& config) {
  config.validate();
  RunCache cache(config.cache_dir, config.config_hash());
  const EngineConfig ecfg = config.engine_config();

  struct Point {
    int n, k;
    bool cached = false;
    VerdictReport report;
  };
  std::vector<Point> points;
  for (int n = config.n_min; n <= config.n_max; ++n)
    for (int k = config.k_min; k <= config.k_max; ++k) {
      Point p;
      p.n = n;
      p.k = k;
      p.cached = cache.enabled() && cache.lookup(n, k, p.report);
      points.push_back(std::move(p));
    }

  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!points[i].cached) todo.push_back(i);
  for (std::size_t base = 0; base < todo.size(); base += workers) {
    std::vector<std::future<VerdictReport>> futs;
    const std::size_t end = std::min(todo.size(), base + workers);
    for (std::size_t i = base; i < end; ++i) {
      const Point& p = points[todo[i]];
      futs.push_back(std::async(std::launch::async, [&, p] {
        return verify_point(p.k, p.n, ecfg, config.monad_trials, config.seed);
      }));
    }
    for (std::size_t i = base; i < end; ++i)
      points[todo[i]].report = futs[i - base].get();
  }

  GridResult out;
  for (auto& p : points) {
    if (!p.cached && cache.enabled()) cache.store(p.report);
    if (p.cached) ++out.cached_points;
    out.all_pass = out.all_pass && p.report.all_pass();
    out.reports.push_back(std::move(p.report));
  }
  out.report_text = render_reports(out.reports, config.format, config.echo());
  if (!config.out_path.empty()) {
    std::ofstream os(config.out_path, std::ios::binary);
    if (!os)
      throw std::runtime_error("cannot open output file: " + config.out_path);
    os << out.report_text;
  }
  return out;
}

}  // namespace instanton::run
