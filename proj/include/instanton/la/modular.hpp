#pragma once

#include "instanton/la/numeric.hpp"
#include "instanton/la/rank.hpp"
#include "instanton/la/sparse.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace instanton::la {

struct RankResult {
  std::size_t rank = 0;
  enum class Method { exact_elimination, multimodular } method =
      Method::multimodular;
  std::vector<std::uint64_t> primes_used;
  bool agreed = true;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin witness set for n < 2^64
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

// Deterministic list of distinct primes with at least `bits` bits, drawn
// from a seeded engine (mt19937_64 output is specified by the standard, so
// the list is identical across platforms).
inline std::vector<std::uint64_t> random_primes(std::size_t count,
                                                unsigned bits,
                                                std::uint64_t seed) {
  if (bits < 2 || bits > 62)
    throw std::invalid_argument("random_primes: bits out of range");
  std::mt19937_64 eng(seed);
  const std::uint64_t lo = 1ULL << bits;
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    std::uint64_t cand = lo + (eng() & (lo - 1));
    cand |= 1;
    if (!detail::is_prime_u64(cand)) continue;
    if (std::find(primes.begin(), primes.end(), cand) != primes.end())
      continue;
    primes.push_back(cand);
  }
  return primes;
}

namespace detail {

// Dense elimination over F_p; fine for weight blocks, which stay small.
inline std::size_t rank_mod_p_dense(const SparseMat& m, std::uint64_t p) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::uint64_t> a(nr * nc, 0);
  for (std::size_t c = 0; c < nc; ++c)
    for (const auto& [r, v] : m.column(c)) a[r * nc + c] = mod_reduce(v, p);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = nr;
    for (std::size_t r = rank; r < nr; ++r) {
      if (a[r * nc + col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == nr) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + piv * nc, a.begin() + (piv + 1) * nc,
                       a.begin() + rank * nc);
    const std::uint64_t inv = inv_mod(a[rank * nc + col], p);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      const std::uint64_t f = a[r * nc + col];
      if (f == 0) continue;
      const std::uint64_t fac = mul_mod(f, inv, p);
      std::uint64_t* dst = &a[r * nc];
      const std::uint64_t* src = &a[rank * nc];
      for (std::size_t c = col; c < nc; ++c) {
        if (src[c] == 0) continue;
        std::uint64_t sub = mul_mod(fac, src[c], p);
        dst[c] = (dst[c] >= sub) ? dst[c] - sub : dst[c] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

// Sparse elimination over F_p for matrices too large to densify.
inline std::size_t rank_mod_p_sparse(const SparseMat& m, std::uint64_t p) {
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::vector<Row> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      std::uint64_t rv = mod_reduce(v, p);
      if (rv != 0) rows[r].emplace_back(c, rv);
    }
  for (auto& row : rows) std::sort(row.begin(), row.end());

  std::vector<std::size_t> col_nnz(m.cols(), 0);
  for (const auto& row : rows)
    for (const auto& [c, v] : row) ++col_nnz[c];
  std::vector<char> active(m.rows(), 1);

  std::size_t rank = 0;
  while (true) {
    std::size_t pr = 0, pc = 0;
    bool found = false;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r] || rows[r].empty()) continue;
      const std::size_t rw = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = rw * (col_nnz[c] - 1);
        if (!found || cost < best) {
          found = true;
          best = cost;
          pr = r;
          pc = c;
        }
      }
      if (found && best == 0) break;
    }
    if (!found) break;

    std::uint64_t pval = 0;
    for (const auto& [c, v] : rows[pr])
      if (c == pc) pval = v;
    const std::uint64_t pinv = inv_mod(pval, p);

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r] || r == pr || rows[r].empty()) continue;
      std::uint64_t rv = 0;
      for (const auto& [c, v] : rows[r])
        if (c == pc) {
          rv = v;
          break;
        }
      if (rv == 0) continue;
      const std::uint64_t fac = mul_mod(rv, pinv, p);
      Row merged;
      merged.reserve(rows[r].size() + rows[pr].size());
      auto a = rows[r].begin(), ae = rows[r].end();
      auto b = rows[pr].begin(), be = rows[pr].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          std::uint64_t sub = mul_mod(fac, b->second, p);
          merged.emplace_back(b->first, p - sub);
          ++b;
        } else {
          std::uint64_t sub = mul_mod(fac, b->second, p);
          std::uint64_t nv = (a->second >= sub) ? a->second - sub
                                                : a->second + p - sub;
          if (nv != 0) merged.emplace_back(a->first, nv);
          ++a;
          ++b;
        }
      }
      for (const auto& [c, v] : rows[r]) --col_nnz[c];
      for (const auto& [c, v] : merged) ++col_nnz[c];
      rows[r] = std::move(merged);
    }
    active[pr] = 0;
    for (const auto& [c, v] : rows[pr]) --col_nnz[c];
    ++rank;
  }
  return rank;
}

inline constexpr std::size_t kDenseModularCells = std::size_t(1) << 22;

}  // namespace detail

inline std::size_t rank_mod_p(const SparseMat& m, std::uint64_t p) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() * m.cols() <= detail::kDenseModularCells)
    return detail::rank_mod_p_dense(m, p);
  return detail::rank_mod_p_sparse(m, p);
}

inline RankResult rank_exact_result(const SparseMat& m,
                                    const RankLimits& lim = {}) {
  RankResult res;
  res.rank = rank_exact(m, lim);
  res.method = RankResult::Method::exact_elimination;
  res.agreed = true;
  return res;
}

// Rank modulo `prime_count` distinct random primes. Rank mod p never exceeds
// the rank over the rationals, so the maximum observed rank is a certified
// lower bound, and the accepted value when all primes agree.
inline RankResult rank_modular(const SparseMat& m, std::size_t prime_count,
                               std::uint64_t seed, unsigned prime_bits = 50) {
  if (prime_count < 2)
    throw std::invalid_argument("rank_modular: prime_count must be >= 2");
  RankResult res;
  res.method = RankResult::Method::multimodular;
  res.primes_used = random_primes(prime_count, prime_bits, seed);
  bool first = true;
  std::size_t r0 = 0;
  for (std::uint64_t p : res.primes_used) {
    std::size_t r = rank_mod_p(m, p);
    if (first) {
      r0 = r;
      first = false;
    } else if (r != r0) {
      res.agreed = false;
    }
    res.rank = std::max(res.rank, r);
  }
  return res;
}

}  // namespace instanton::la
