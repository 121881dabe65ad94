#pragma once

#include "instanton/la/rank.hpp"

#include <cstdint>
#include <string>

namespace instanton {

enum class RankEngine { exact, multimodular, automatic };

inline const char* to_string(RankEngine e) {
  switch (e) {
    case RankEngine::exact: return "exact";
    case RankEngine::multimodular: return "multimodular";
    case RankEngine::automatic: return "auto";
  }
  return "auto";
}

inline RankEngine rank_engine_from_string(const std::string& s) {
  if (s == "exact") return RankEngine::exact;
  if (s == "multimodular") return RankEngine::multimodular;
  if (s == "auto") return RankEngine::automatic;
  throw std::invalid_argument("unknown rank engine: " + s);
}

// Knobs shared by every rank computation. `automatic` resolves to exact
// when the whole matrix fits the elimination workspace bound and to
// multimodular otherwise.
struct EngineConfig {
  RankEngine engine = RankEngine::automatic;
  std::size_t prime_count = 3;
  std::uint64_t seed = 1;
  la::RankLimits limits;

  RankEngine resolve(std::size_t n_rows, std::size_t n_cols) const {
    if (engine != RankEngine::automatic) return engine;
    return (n_rows <= limits.dense_rows && n_cols <= limits.dense_cols)
               ? RankEngine::exact
               : RankEngine::multimodular;
  }
};

}  // namespace instanton
