#pragma once

#include "instanton/config.hpp"
#include "instanton/la/modular.hpp"
#include "instanton/la/rank.hpp"
#include "instanton/la/sparse.hpp"

#include <future>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace instanton::la {

// Rank of a block-diagonalizable matrix as the sum of per-block ranks.
// row_blocks/col_blocks assign a block key to every index (for equivariant
// maps the key is the weight). Every entry must connect equal keys;
// a crossing entry means a wrong key assignment upstream and raises
// BlockLeakageError. Blocks are ranked independently (in parallel) and the
// sum is combined in key order, so the result is deterministic.
inline std::size_t block_ranks(const SparseMat& m,
                               const std::vector<int>& row_blocks,
                               const std::vector<int>& col_blocks,
                               const EngineConfig& cfg = {}) {
  if (row_blocks.size() != m.rows() || col_blocks.size() != m.cols())
    throw std::invalid_argument("block_ranks: partition size mismatch");

  std::map<int, std::vector<std::size_t>> rows_of, cols_of;
  for (std::size_t r = 0; r < m.rows(); ++r) rows_of[row_blocks[r]].push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c) cols_of[col_blocks[c]].push_back(c);

  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c))
      if (row_blocks[r] != col_blocks[c])
        throw BlockLeakageError(
            "block_ranks: entry (" + std::to_string(r) + "," +
            std::to_string(c) + ") crosses blocks " +
            std::to_string(row_blocks[r]) + " and " +
            std::to_string(col_blocks[c]));

  const RankEngine engine = cfg.resolve(m.rows(), m.cols());
  std::vector<std::uint64_t> primes;
  if (engine == RankEngine::multimodular)
    primes = random_primes(cfg.prime_count, cfg.limits.prime_bits, cfg.seed);

  struct Block {
    int key;
    SparseMat sub;
  };
  std::vector<Block> blocks;
  for (const auto& [key, cols] : cols_of) {
    auto rit = rows_of.find(key);
    // a column block with no matching rows was checked empty above
    if (rit == rows_of.end()) continue;
    const auto& rows = rit->second;
    std::vector<std::size_t> row_pos(m.rows(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
    SparseBuilder b(rows.size(), cols.size());
    bool any = false;
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, v] : m.column(cols[j])) {
        b.add(row_pos[r], j, v);
        any = true;
      }
    if (any) blocks.push_back({key, b.build()});
  }

  auto block_rank = [&](const SparseMat& sub) -> std::size_t {
    if (engine == RankEngine::exact) return rank_exact(sub, cfg.limits);
    std::size_t best = 0;
    for (std::uint64_t p : primes) best = std::max(best, rank_mod_p(sub, p));
    return best;
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::size_t total = 0;
  for (std::size_t base = 0; base < blocks.size(); base += workers) {
    std::vector<std::future<std::size_t>> futs;
    const std::size_t end = std::min(blocks.size(), base + workers);
    for (std::size_t i = base; i < end; ++i)
      futs.push_back(std::async(std::launch::async, block_rank,
                                std::cref(blocks[i].sub)));
    for (auto& f : futs) total += f.get();
  }
  return total;
}

}  // namespace instanton::la
