#pragma once

#include "instanton/la/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace instanton::la {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Int value;
};

// Exact integer sparse matrix, stored column-wise. Immutable after
// construction; no stored zeros, no duplicate (row, col) pairs.
class SparseMat {
 public:
  using Column = std::vector<std::pair<std::size_t, Int>>;  // sorted by row

  SparseMat() = default;
  SparseMat(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols), cols_(n_cols) {}

  static SparseMat identity(std::size_t n) {
    SparseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Int(1));
    m.nnz_ = n;
    return m;
  }

  static SparseMat from_triplets(std::size_t n_rows, std::size_t n_cols,
                                 const std::vector<Triplet>& ts) {
    std::vector<std::map<std::size_t, Int>> acc(n_cols);
    for (const auto& t : ts) {
      if (t.row >= n_rows || t.col >= n_cols)
        throw std::out_of_range("SparseMat::from_triplets: entry out of bounds");
      acc[t.col][t.row] += t.value;
    }
    SparseMat m(n_rows, n_cols);
    for (std::size_t c = 0; c < n_cols; ++c) {
      for (auto& [r, v] : acc[c]) {
        if (v != 0) {
          m.cols_[c].emplace_back(r, std::move(v));
          ++m.nnz_;
        }
      }
    }
    return m;
  }

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const { return nnz_; }
  bool is_zero() const { return nnz_ == 0; }

  const Column& column(std::size_t c) const { return cols_[c]; }

  Int at(std::size_t r, std::size_t c) const {
    const auto& col = cols_[c];
    auto it = std::lower_bound(
        col.begin(), col.end(), r,
        [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return Int(0);
  }

  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz_);
    for (std::size_t c = 0; c < n_cols_; ++c)
      for (const auto& [r, v] : cols_[c]) out.push_back({r, c, v});
    std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    return out;
  }

  // Row-major adjacency, used by the elimination routines.
  std::vector<std::vector<std::pair<std::size_t, Int>>> row_lists() const {
    std::vector<std::vector<std::pair<std::size_t, Int>>> rows(n_rows_);
    for (std::size_t c = 0; c < n_cols_; ++c)
      for (const auto& [r, v] : cols_[c]) rows[r].emplace_back(c, v);
    return rows;
  }

  SparseMat transpose() const {
    SparseMat t(n_cols_, n_rows_);
    auto rl = row_lists();
    for (std::size_t r = 0; r < n_rows_; ++r) {
      t.cols_[r].assign(rl[r].begin(), rl[r].end());
      t.nnz_ += rl[r].size();
    }
    return t;
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.n_cols_ != b.n_rows_)
      throw std::invalid_argument("SparseMat: shape mismatch in product");
    SparseMat c(a.n_rows_, b.n_cols_);
    std::map<std::size_t, Int> acc;
    for (std::size_t j = 0; j < b.n_cols_; ++j) {
      acc.clear();
      for (const auto& [k, bv] : b.cols_[j])
        for (const auto& [i, av] : a.cols_[k]) acc[i] += av * bv;
      for (auto& [i, v] : acc) {
        if (v != 0) {
          c.cols_[j].emplace_back(i, std::move(v));
          ++c.nnz_;
        }
      }
    }
    return c;
  }

  friend SparseMat combine(const SparseMat& a, const SparseMat& b, int sign) {
    if (a.n_rows_ != b.n_rows_ || a.n_cols_ != b.n_cols_)
      throw std::invalid_argument("SparseMat: shape mismatch in sum");
    SparseMat c(a.n_rows_, a.n_cols_);
    std::map<std::size_t, Int> acc;
    for (std::size_t j = 0; j < a.n_cols_; ++j) {
      acc.clear();
      for (const auto& [r, v] : a.cols_[j]) acc[r] += v;
      for (const auto& [r, v] : b.cols_[j])
        acc[r] += (sign > 0) ? v : -v;
      for (auto& [r, v] : acc) {
        if (v != 0) {
          c.cols_[j].emplace_back(r, std::move(v));
          ++c.nnz_;
        }
      }
    }
    return c;
  }

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    return combine(a, b, +1);
  }

  friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    return combine(a, b, -1);
  }

  SparseMat scaled(const Int& s) const {
    SparseMat c(n_rows_, n_cols_);
    if (s == 0) return c;
    c.cols_ = cols_;
    c.nnz_ = nnz_;
    for (auto& col : c.cols_)
      for (auto& [r, v] : col) v *= s;
    return c;
  }

  bool operator==(const SparseMat& o) const {
    return n_rows_ == o.n_rows_ && n_cols_ == o.n_cols_ && cols_ == o.cols_;
  }

  // M * v for an exact integer vector.
  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != n_cols_)
      throw std::invalid_argument("SparseMat::apply: length mismatch");
    std::vector<Int> out(n_rows_, Int(0));
    for (std::size_t c = 0; c < n_cols_; ++c) {
      if (v[c] == 0) continue;
      for (const auto& [r, mv] : cols_[c]) out[r] += mv * v[c];
    }
    return out;
  }

 private:
  friend class SparseBuilder;
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t nnz_ = 0;
  std::vector<Column> cols_;
};

// Accumulating builder; collapses duplicates and drops zeros on build().
class SparseBuilder {
 public:
  SparseBuilder(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols), acc_(n_cols) {}

  void add(std::size_t r, std::size_t c, Int v) {
    if (r >= n_rows_ || c >= n_cols_)
      throw std::out_of_range("SparseBuilder::add: entry out of bounds");
    acc_[c][r] += std::move(v);
  }

  SparseMat build() {
    SparseMat m(n_rows_, n_cols_);
    for (std::size_t c = 0; c < n_cols_; ++c) {
      for (auto& [r, v] : acc_[c]) {
        if (v != 0) {
          m.cols_[c].emplace_back(r, std::move(v));
          ++m.nnz_;
        }
      }
    }
    return m;
  }

 private:
  std::size_t n_rows_;
  std::size_t n_cols_;
  std::vector<std::map<std::size_t, Int>> acc_;
};

// Plain-text sparse-triplet export: one header line "name k n rows cols",
// then "row col value" per entry.
inline void write_triplets(std::ostream& os, const std::string& name, int k,
                           int n, const SparseMat& m) {
  os << name << ' ' << k << ' ' << n << ' ' << m.rows() << ' ' << m.cols()
     << '\n';
  for (const auto& t : m.triplets())
    os << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

}  // namespace instanton::la
