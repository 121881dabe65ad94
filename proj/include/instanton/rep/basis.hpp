#pragma once

#include "instanton/rep/expr.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace instanton::rep {

namespace detail {

inline std::string monomial_label(int m, std::size_t i) {
  // basis of S(m) in descending s-degree: index i is s^(m-i) t^i
  const int a = m - static_cast<int>(i);
  const int b = static_cast<int>(i);
  if (a == 0 && b == 0) return "1";
  std::string out;
  if (a > 0) out += (a == 1) ? "s" : "s^" + std::to_string(a);
  if (b > 0) {
    if (!out.empty()) out += "*";
    out += (b == 1) ? "t" : "t^" + std::to_string(b);
  }
  return out;
}

inline std::vector<int> weight_vector(const ModuleExpr& e) {
  using Kind = ModuleExpr::Kind;
  switch (e.kind()) {
    case Kind::sym_power: {
      std::vector<int> w;
      for (int i = 0; i <= e.degree(); ++i) w.push_back(e.degree() - 2 * i);
      return w;
    }
    case Kind::vector_mod: {
      std::vector<int> w;
      const int m = e.degree();
      if (m < 0) return w;
      for (int u = 0; u < 2; ++u)
        for (int i = 0; i <= m; ++i)
          w.push_back((u == 0 ? 1 : -1) + (m - 2 * i));
      return w;
    }
    case Kind::tensor: {
      std::vector<int> w{0};
      for (const auto& c : e.children()) {
        const auto wc = weight_vector(c);
        std::vector<int> nw;
        nw.reserve(w.size() * wc.size());
        for (int a : w)
          for (int b : wc) nw.push_back(a + b);
        w = std::move(nw);
      }
      return w;
    }
    case Kind::sym_sq: {
      const auto wc = weight_vector(e.children()[0]);
      std::vector<int> w;
      for (std::size_t i = 0; i < wc.size(); ++i)
        for (std::size_t j = i; j < wc.size(); ++j) w.push_back(wc[i] + wc[j]);
      return w;
    }
    case Kind::alt_sq: {
      const auto wc = weight_vector(e.children()[0]);
      std::vector<int> w;
      for (std::size_t i = 0; i < wc.size(); ++i)
        for (std::size_t j = i + 1; j < wc.size(); ++j)
          w.push_back(wc[i] + wc[j]);
      return w;
    }
  }
  return {};
}

inline std::string label_at(const ModuleExpr& e, std::size_t idx) {
  using Kind = ModuleExpr::Kind;
  switch (e.kind()) {
    case Kind::sym_power:
      return monomial_label(e.degree(), idx);
    case Kind::vector_mod: {
      const std::size_t d = static_cast<std::size_t>(e.degree()) + 1;
      return std::string(idx / d == 0 ? "s" : "t") + "@" +
             monomial_label(e.degree(), idx % d);
    }
    case Kind::tensor: {
      std::vector<std::size_t> dims;
      for (const auto& c : e.children()) dims.push_back(c.dimension());
      const auto ids = tensor_unrank(dims, idx);
      std::string out;
      for (std::size_t f = 0; f < ids.size(); ++f) {
        if (f) out += "|";
        out += label_at(e.children()[f], ids[f]);
      }
      return out;
    }
    case Kind::sym_sq: {
      const auto& c = e.children()[0];
      const auto [i, j] = sym_pair_at(c.dimension(), idx);
      return "(" + label_at(c, i) + ").(" + label_at(c, j) + ")";
    }
    case Kind::alt_sq: {
      const auto& c = e.children()[0];
      const auto [i, j] = alt_pair_at(c.dimension(), idx);
      return "(" + label_at(c, i) + ")^(" + label_at(c, j) + ")";
    }
  }
  return {};
}

}  // namespace detail

// Canonical ordered monomial basis of a ModuleExpr. Ordering: S(m) by
// descending s-degree; V(m) by U-factor (s before t) then S(m) order;
// tensors lexicographic by factor; Sym2/Alt2 by lexicographic index pairs.
// The textual labels are stable and are what reports and kernel dumps use.
class Basis {
 public:
  explicit Basis(ModuleExpr expr)
      : expr_(std::move(expr)),
        dim_(expr_.dimension()),
        weights_(detail::weight_vector(expr_)) {}

  const ModuleExpr& expr() const { return expr_; }
  std::size_t dimension() const { return dim_; }

  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_.at(i); }

  std::string label(std::size_t i) const {
    if (i >= dim_) throw std::out_of_range("Basis::label");
    return detail::label_at(expr_, i);
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out.push_back(label(i));
    return out;
  }

  std::size_t index_of(const std::string& lbl) const {
    if (index_.empty() && dim_ > 0)
      for (std::size_t i = 0; i < dim_; ++i) index_[label(i)] = i;
    auto it = index_.find(lbl);
    if (it == index_.end())
      throw std::out_of_range("Basis::index_of: unknown label " + lbl);
    return it->second;
  }

 private:
  ModuleExpr expr_;
  std::size_t dim_;
  std::vector<int> weights_;
  mutable std::map<std::string, std::size_t> index_;
};

}  // namespace instanton::rep
