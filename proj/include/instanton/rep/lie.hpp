#pragma once

#include "instanton/la/sparse.hpp"
#include "instanton/rep/basis.hpp"
#include "instanton/rep/expr.hpp"

#include <map>
#include <vector>

namespace instanton::rep {

enum class LieGen { e, f, h };

namespace detail {

inline la::SparseMat kron(const la::SparseMat& a, const la::SparseMat& b) {
  la::SparseBuilder out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (const auto& [ia, va] : a.column(ja))
      for (std::size_t jb = 0; jb < b.cols(); ++jb)
        for (const auto& [ib, vb] : b.column(jb))
          out.add(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
  return out.build();
}

inline la::SparseMat sym_power_action(int m, LieGen g) {
  const std::size_t d = m < 0 ? 0 : static_cast<std::size_t>(m) + 1;
  la::SparseBuilder b(d, d);
  // index i is s^(m-i) t^i; e,f act as derivations, h as the weight
  for (std::size_t i = 0; i < d; ++i) {
    const long a_deg = m - static_cast<long>(i);
    const long b_deg = static_cast<long>(i);
    switch (g) {
      case LieGen::e:
        if (b_deg > 0) b.add(i - 1, i, la::Int(b_deg));
        break;
      case LieGen::f:
        if (a_deg > 0) b.add(i + 1, i, la::Int(a_deg));
        break;
      case LieGen::h:
        if (a_deg != b_deg) b.add(i, i, la::Int(a_deg - b_deg));
        break;
    }
  }
  return b.build();
}

}  // namespace detail

// Matrix of a standard sl(2) generator on the canonical basis: on U,
// e.t = s, f.s = t, h.s = s, h.t = -t, extended as a derivation to symmetric
// powers and by the Leibniz rule across tensor factors and pair squares.
inline la::SparseMat lie_action(const ModuleExpr& expr, LieGen g) {
  using Kind = ModuleExpr::Kind;
  switch (expr.kind()) {
    case Kind::sym_power:
      return detail::sym_power_action(expr.degree(), g);
    case Kind::vector_mod: {
      const int m = expr.degree();
      if (m < 0) return la::SparseMat(0, 0);
      const auto au = detail::sym_power_action(1, g);
      const auto as = detail::sym_power_action(m, g);
      const auto iu = la::SparseMat::identity(2);
      const auto is = la::SparseMat::identity(m + 1);
      return detail::kron(au, is) + detail::kron(iu, as);
    }
    case Kind::tensor: {
      const auto& ch = expr.children();
      std::vector<std::size_t> dims;
      for (const auto& c : ch) dims.push_back(c.dimension());
      const std::size_t dtot = expr.dimension();
      la::SparseMat acc(dtot, dtot);
      for (std::size_t f = 0; f < ch.size(); ++f) {
        std::size_t left = 1, right = 1;
        for (std::size_t i = 0; i < f; ++i) left *= dims[i];
        for (std::size_t i = f + 1; i < ch.size(); ++i) right *= dims[i];
        auto term = detail::kron(
            detail::kron(la::SparseMat::identity(left), lie_action(ch[f], g)),
            la::SparseMat::identity(right));
        acc = acc + term;
      }
      return acc;
    }
    case Kind::sym_sq: {
      const auto& w = expr.children()[0];
      const auto a = lie_action(w, g);
      const std::size_t d = w.dimension();
      la::SparseBuilder b(expr.dimension(), expr.dimension());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          const std::size_t col = sym_pair_index(d, i, j);
          for (const auto& [r, v] : a.column(i))
            b.add(sym_pair_index(d, std::min(r, j), std::max(r, j)), col, v);
          for (const auto& [r, v] : a.column(j))
            b.add(sym_pair_index(d, std::min(i, r), std::max(i, r)), col, v);
        }
      return b.build();
    }
    case Kind::alt_sq: {
      const auto& w = expr.children()[0];
      const auto a = lie_action(w, g);
      const std::size_t d = w.dimension();
      la::SparseBuilder b(expr.dimension(), expr.dimension());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          const std::size_t col = alt_pair_index(d, i, j);
          for (const auto& [r, v] : a.column(i)) {
            if (r == j) continue;
            const bool flip = r > j;
            b.add(alt_pair_index(d, flip ? j : r, flip ? r : j), col,
                  flip ? -v : v);
          }
          for (const auto& [r, v] : a.column(j)) {
            if (r == i) continue;
            const bool flip = i > r;
            b.add(alt_pair_index(d, flip ? r : i, flip ? i : r), col,
                  flip ? -v : v);
          }
        }
      return b.build();
    }
  }
  return {};
}

// Basis indices grouped by weight, ascending weight, indices ascending.
inline std::map<int, std::vector<std::size_t>> weight_partition(
    const ModuleExpr& expr) {
  std::map<int, std::vector<std::size_t>> part;
  const auto w = detail::weight_vector(expr);
  for (std::size_t i = 0; i < w.size(); ++i) part[w[i]].push_back(i);
  return part;
}

}  // namespace instanton::rep
