#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace instanton::rep {

// Symbolic descriptor of a finite-dimensional SL(2)-module built from the
// two-dimensional space U = <s,t>: leaves are S(m) = Sym^m U and
// V(m) = U (x) S(m); internal nodes are tensor products and the symmetric /
// alternating square. Negative-degree leaves denote the zero module.
class ModuleExpr {
 public:
  enum class Kind { sym_power, vector_mod, tensor, sym_sq, alt_sq };

  ModuleExpr() : kind_(Kind::sym_power), degree_(-1) {}

  static ModuleExpr S(int m) { return ModuleExpr(Kind::sym_power, m); }
  static ModuleExpr V(int m) { return ModuleExpr(Kind::vector_mod, m); }
  static ModuleExpr tensor(std::vector<ModuleExpr> factors) {
    ModuleExpr e(Kind::tensor, 0);
    e.children_ = std::move(factors);
    return e;
  }
  static ModuleExpr sym_sq(ModuleExpr w) {
    ModuleExpr e(Kind::sym_sq, 0);
    e.children_.push_back(std::move(w));
    return e;
  }
  static ModuleExpr alt_sq(ModuleExpr w) {
    ModuleExpr e(Kind::alt_sq, 0);
    e.children_.push_back(std::move(w));
    return e;
  }

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  const std::vector<ModuleExpr>& children() const { return children_; }

  std::size_t dimension() const {
    switch (kind_) {
      case Kind::sym_power:
        return degree_ < 0 ? 0 : static_cast<std::size_t>(degree_) + 1;
      case Kind::vector_mod:
        return degree_ < 0 ? 0 : 2 * (static_cast<std::size_t>(degree_) + 1);
      case Kind::tensor: {
        std::size_t d = 1;
        for (const auto& c : children_) d *= c.dimension();
        return d;
      }
      case Kind::sym_sq: {
        const std::size_t d = children_[0].dimension();
        return d * (d + 1) / 2;
      }
      case Kind::alt_sq: {
        const std::size_t d = children_[0].dimension();
        return d == 0 ? 0 : d * (d - 1) / 2;
      }
    }
    return 0;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::sym_power: return "S" + std::to_string(degree_);
      case Kind::vector_mod: return "V" + std::to_string(degree_);
      case Kind::tensor: {
        std::string out;
        for (std::size_t i = 0; i < children_.size(); ++i) {
          if (i) out += "*";
          out += children_[i].to_string();
        }
        return out;
      }
      case Kind::sym_sq: return "Sym2(" + children_[0].to_string() + ")";
      case Kind::alt_sq: return "Alt2(" + children_[0].to_string() + ")";
    }
    return {};
  }

  friend bool operator==(const ModuleExpr& a, const ModuleExpr& b) {
    if (a.kind_ != b.kind_ || a.degree_ != b.degree_ ||
        a.children_.size() != b.children_.size())
      return false;
    for (std::size_t i = 0; i < a.children_.size(); ++i)
      if (!(a.children_[i] == b.children_[i])) return false;
    return true;
  }

 private:
  ModuleExpr(Kind k, int m) : kind_(k), degree_(m) {}

  Kind kind_;
  int degree_;
  std::vector<ModuleExpr> children_;
};

inline std::size_t dimension(const ModuleExpr& e) { return e.dimension(); }

// Index arithmetic for the canonical pair bases: symmetric pairs (i <= j)
// and alternating pairs (i < j), both in lexicographic order.
inline std::size_t sym_pair_index(std::size_t d, std::size_t i,
                                  std::size_t j) {
  return i * d - i * (i - 1) / 2 + (j - i);
}

inline std::size_t alt_pair_index(std::size_t d, std::size_t i,
                                  std::size_t j) {
  return i * (d - 1) - i * (i - 1) / 2 + (j - i - 1);
}

inline std::pair<std::size_t, std::size_t> sym_pair_at(std::size_t d,
                                                       std::size_t idx) {
  std::size_t i = 0;
  while (idx >= d - i) {
    idx -= d - i;
    ++i;
  }
  return {i, i + idx};
}

inline std::pair<std::size_t, std::size_t> alt_pair_at(std::size_t d,
                                                       std::size_t idx) {
  std::size_t i = 0;
  while (idx >= d - 1 - i) {
    idx -= d - 1 - i;
    ++i;
  }
  return {i, i + 1 + idx};
}

// Row-major rank/unrank for tensor indices (leftmost factor most
// significant).
inline std::size_t tensor_rank(const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& ids) {
  std::size_t idx = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) idx = idx * dims[f] + ids[f];
  return idx;
}

inline std::vector<std::size_t> tensor_unrank(
    const std::vector<std::size_t>& dims, std::size_t idx) {
  std::vector<std::size_t> ids(dims.size(), 0);
  for (std::size_t f = dims.size(); f-- > 0;) {
    ids[f] = idx % dims[f];
    idx /= dims[f];
  }
  return ids;
}

}  // namespace instanton::rep
