#pragma once

#include "instanton/la/numeric.hpp"
#include "instanton/la/sparse.hpp"

#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

namespace instanton::la {

// Resource guard for the exact elimination path. Matrices above the bound
// must go through the multimodular engine.
struct RankLimits {
  std::size_t dense_rows = 5000;
  std::size_t dense_cols = 5000;
  unsigned prime_bits = 50;
};

namespace detail {

// Sparse fraction-free elimination (one-step Bareiss with delayed updates).
// Each active row carries the pivot value of the step that last touched it;
// the update (p * row_i - v * row_r) / d_i is then an exact division and all
// entries stay minors of the input matrix. Pivots are chosen by Markowitz
// cost (nnz_row - 1) * (nnz_col - 1), ties broken by lowest (row, col).
struct Elimination {
  using Row = std::vector<std::pair<std::size_t, Int>>;  // sorted by col

  std::vector<Row> rows;
  std::vector<Int> denom;              // last pivot applied to the row
  std::vector<char> row_active;
  std::vector<std::size_t> col_nnz;    // over active rows
  // pivot history in elimination order: (row, col); rows keep final content
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  explicit Elimination(const SparseMat& m)
      : rows(m.row_lists()),
        denom(m.rows(), Int(1)),
        row_active(m.rows(), 1),
        col_nnz(m.cols(), 0) {
    for (const auto& row : rows)
      for (const auto& [c, v] : row) ++col_nnz[c];
  }

  bool pick_pivot(std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_active[r] || rows[r].empty()) continue;
      const std::size_t rw = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = rw * (col_nnz[c] - 1);
        if (!found || cost < best_cost) {
          found = true;
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
      // rows scan in ascending index, so a zero-cost pivot found here wins
      // every later tie
      if (found && best_cost == 0) break;
    }
    return found;
  }

  void eliminate() {
    Int prev_pivot(1);
    std::size_t pr = 0, pc = 0;
    while (pick_pivot(pr, pc)) {
      // The pivot row may have skipped steps (zero in those pivot columns);
      // bring it to the current generation first, so the one-step update
      // below divides exactly. The rescale row * prev_pivot / denom is
      // integral because the rescaled entries are minors of the input.
      if (denom[pr] != prev_pivot) {
        for (auto& [c, v] : rows[pr]) v = exact_div(v * prev_pivot, denom[pr]);
        denom[pr] = prev_pivot;
      }
      const Row& prow = rows[pr];
      Int pval;
      for (const auto& [c, v] : prow)
        if (c == pc) pval = v;

      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!row_active[r] || r == pr || rows[r].empty()) continue;
        Int rv;
        bool hit = false;
        for (const auto& [c, v] : rows[r]) {
          if (c == pc) {
            rv = v;
            hit = true;
            break;
          }
        }
        if (!hit) continue;
        combine_row(r, pval, rv, prow);
        denom[r] = pval;
      }

      // retire pivot row and column
      row_active[pr] = 0;
      for (const auto& [c, v] : prow) --col_nnz[c];
      pivots.emplace_back(pr, pc);
      prev_pivot = pval;
    }
  }

  static Int exact_div(Int num, const Int& den) {
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0)
      throw std::logic_error("fraction-free elimination: inexact division");
    return q;
  }

  // row_r <- (pval * row_r - rv * prow) / denom[r]; drops the pivot column.
  void combine_row(std::size_t r, const Int& pval, const Int& rv,
                   const Row& prow) {
    Row merged;
    merged.reserve(rows[r].size() + prow.size());
    auto a = rows[r].begin(), ae = rows[r].end();
    auto b = prow.begin(), be = prow.end();
    const Int& d = denom[r];
    auto push = [&](std::size_t c, Int num) {
      if (num == 0) return;
      merged.emplace_back(c, exact_div(std::move(num), d));
    };
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        push(a->first, pval * a->second);
        ++a;
      } else if (a == ae || b->first < a->first) {
        push(b->first, -rv * b->second);
        ++b;
      } else {
        push(a->first, pval * a->second - rv * b->second);
        ++a;
        ++b;
      }
    }
    for (const auto& [c, v] : rows[r]) --col_nnz[c];
    for (const auto& [c, v] : merged) ++col_nnz[c];
    rows[r] = std::move(merged);
  }
};

inline void check_limits(const SparseMat& m, const RankLimits& lim,
                         const char* what) {
  if (m.rows() > lim.dense_rows || m.cols() > lim.dense_cols)
    throw ResourceLimitError(std::string(what) +
                             ": matrix exceeds exact-elimination workspace "
                             "bound; use the multimodular engine");
}

}  // namespace detail

// Rank over the rationals by fraction-free elimination on exact integers.
inline std::size_t rank_exact(const SparseMat& m, const RankLimits& lim = {}) {
  detail::check_limits(m, lim, "rank_exact");
  detail::Elimination el(m);
  el.eliminate();
  return el.pivots.size();
}

// Integer spanning basis of the right kernel of m over the rationals.
// Basis vectors are primitive (content 1) with positive leading entry,
// one per non-pivot column, in ascending column order.
inline std::vector<std::vector<Int>> kernel_basis(const SparseMat& m,
                                                  const RankLimits& lim = {}) {
  detail::check_limits(m, lim, "kernel_basis");
  detail::Elimination el(m);
  el.eliminate();

  std::vector<char> is_pivot_col(m.cols(), 0);
  for (const auto& [r, c] : el.pivots) is_pivot_col[c] = 1;

  std::vector<std::vector<Int>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free_col] = 1;
    // Pivot row of step j has zeros in the pivot columns of earlier steps,
    // so solving in reverse step order only meets already-known entries.
    for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
      const auto [pr, pc] = *it;
      Rat acc(0);
      Int pval;
      for (const auto& [c, val] : el.rows[pr]) {
        if (c == pc)
          pval = val;
        else if (!v[c].is_zero())
          acc += Rat(val) * v[c];
      }
      v[pc] = -acc / Rat(pval);
    }
    // clear denominators, divide out content, normalize sign
    Int lcm(1);
    for (const auto& x : v)
      lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<Int> w(m.cols());
    Int g(0);
    for (std::size_t i = 0; i < m.cols(); ++i) {
      w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
      g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    for (const auto& x : w) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : w) y = -y;
        break;
      }
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace instanton::la
