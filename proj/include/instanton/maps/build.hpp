#pragma once

#include "instanton/la/sparse.hpp"
#include "instanton/rep/basis.hpp"
#include "instanton/rep/expr.hpp"
#include "instanton/rep/lie.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace instanton::maps {

using la::Int;
using la::SparseBuilder;
using la::SparseMat;
using rep::ModuleExpr;

// A constructed linear map between two canonically based modules.
// matrix shape is (dim target) x (dim source).
struct MapHandle {
  std::string name;
  int k = 0;
  int n = 0;
  ModuleExpr source;
  ModuleExpr target;
  SparseMat matrix;
};

enum class PhiVariant { sym, tensor, alt };

inline const char* to_string(PhiVariant v) {
  switch (v) {
    case PhiVariant::sym: return "sym";
    case PhiVariant::tensor: return "tensor";
    case PhiVariant::alt: return "alt";
  }
  return "sym";
}

enum class ConnectorKind { sigma, alpha, pi, iota };

namespace detail {

// Multiplication by s and t on the canonical bases. In S(m), index i is
// s^(m-i) t^i, so s-multiplication keeps the index and t-multiplication
// shifts it by one. In V(m) = U (x) S(m) both act on the S(m) part.
inline std::size_t mult_s_sym(std::size_t i) { return i; }
inline std::size_t mult_t_sym(std::size_t i) { return i + 1; }

inline std::size_t mult_s_vec(int m, std::size_t j) {
  const std::size_t d = static_cast<std::size_t>(m) + 1;
  return (j / d) * (d + 1) + (j % d);
}
inline std::size_t mult_t_vec(int m, std::size_t j) {
  const std::size_t d = static_cast<std::size_t>(m) + 1;
  return (j / d) * (d + 1) + (j % d) + 1;
}

// Core Clebsch-Gordan injection g (x) v |-> sg (x) tv - tg (x) sv,
// as a matrix S(a) (x) V(b) -> S(a+1) (x) V(b+1).
inline SparseMat beta_core(int a, int b) {
  const ModuleExpr src =
      ModuleExpr::tensor({ModuleExpr::S(a), ModuleExpr::V(b)});
  const ModuleExpr dst =
      ModuleExpr::tensor({ModuleExpr::S(a + 1), ModuleExpr::V(b + 1)});
  SparseBuilder out(dst.dimension(), src.dimension());
  if (a >= 0 && b >= 0) {
    const std::size_t dv_src = 2 * (static_cast<std::size_t>(b) + 1);
    const std::size_t dv_dst = 2 * (static_cast<std::size_t>(b) + 2);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(a); ++i)
      for (std::size_t j = 0; j < dv_src; ++j) {
        const std::size_t col = i * dv_src + j;
        out.add(mult_s_sym(i) * dv_dst + mult_t_vec(b, j), col, Int(1));
        out.add(mult_t_sym(i) * dv_dst + mult_s_vec(b, j), col, Int(-1));
      }
  }
  return out.build();
}

// Functorial squares of a map between based spaces.
inline SparseMat alt_sq_of_map(const SparseMat& a) {
  const std::size_t d1 = a.cols(), d2 = a.rows();
  SparseBuilder out(d2 == 0 ? 0 : d2 * (d2 - 1) / 2,
                    d1 == 0 ? 0 : d1 * (d1 - 1) / 2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = i + 1; j < d1; ++j) {
      const std::size_t col = rep::alt_pair_index(d1, i, j);
      for (const auto& [r, x] : a.column(i))
        for (const auto& [s, y] : a.column(j)) {
          if (r == s) continue;
          const bool flip = r > s;
          Int prod = x * y;
          if (flip) prod = -prod;
          out.add(rep::alt_pair_index(d2, flip ? s : r, flip ? r : s), col,
                  std::move(prod));
        }
    }
  return out.build();
}

inline SparseMat sym_sq_of_map(const SparseMat& a) {
  const std::size_t d1 = a.cols(), d2 = a.rows();
  SparseBuilder out(d2 * (d2 + 1) / 2, d1 * (d1 + 1) / 2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = i; j < d1; ++j) {
      const std::size_t col = rep::sym_pair_index(d1, i, j);
      for (const auto& [r, x] : a.column(i))
        for (const auto& [s, y] : a.column(j))
          out.add(rep::sym_pair_index(d2, std::min(r, s), std::max(r, s)),
                  col, x * y);
    }
  return out.build();
}

}  // namespace detail

// Clebsch-Gordan injection Alt2(U) (x) S(k-1) (x) V(n-1) -> S(k) (x) V(n),
// (s^t) (x) f (x) g |-> sf (x) tg - tf (x) sg.
inline MapHandle build_beta(int k, int n) {
  MapHandle h;
  h.name = "beta";
  h.k = k;
  h.n = n;
  h.source = ModuleExpr::tensor({ModuleExpr::alt_sq(ModuleExpr::S(1)),
                                 ModuleExpr::S(k - 1), ModuleExpr::V(n - 1)});
  h.target = ModuleExpr::tensor({ModuleExpr::S(k), ModuleExpr::V(n)});
  h.matrix = detail::beta_core(k - 1, n - 1);
  return h;
}

// Multiplication map S(k) (x) V(n) -> V(k+n), f (x) (u (x) h) |-> u (x) fh.
inline MapHandle build_mu(int k, int n) {
  MapHandle h;
  h.name = "mu";
  h.k = k;
  h.n = n;
  h.source = ModuleExpr::tensor({ModuleExpr::S(k), ModuleExpr::V(n)});
  h.target = ModuleExpr::V(k + n);
  SparseBuilder out(h.target.dimension(), h.source.dimension());
  if (k >= 0 && n >= 0) {
    const std::size_t ds = static_cast<std::size_t>(n) + 1;
    const std::size_t dt = static_cast<std::size_t>(k + n) + 1;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i)
      for (std::size_t j = 0; j < 2 * ds; ++j) {
        const std::size_t u = j / ds, r = j % ds;
        out.add(u * dt + (i + r), i * 2 * ds + j, Int(1));
      }
  }
  h.matrix = out.build();
  return h;
}

namespace detail {

// Pairing projections of the square of S(k-1) (x) V(n):
// proj_sym:  (f (x) u) ^ (f' (x) u') |-> f.f' (x) u ^ u'
// proj_alt:  (f (x) u) . (f' (x) u') |-> f ^ f' (x) u ^ u'
inline SparseMat proj_sym_core(std::size_t ds, std::size_t dv) {
  const std::size_t dw = ds * dv;
  const std::size_t alt_v = dv * (dv - 1) / 2;
  SparseBuilder out(ds * (ds + 1) / 2 * alt_v,
                    dw == 0 ? 0 : dw * (dw - 1) / 2);
  for (std::size_t p = 0; p < dw; ++p)
    for (std::size_t q = p + 1; q < dw; ++q) {
      const std::size_t a = p / dv, b = p % dv, c = q / dv, d = q % dv;
      if (b == d) continue;
      const bool flip = b > d;
      const std::size_t sym = rep::sym_pair_index(ds, std::min(a, c),
                                                  std::max(a, c));
      const std::size_t alt =
          rep::alt_pair_index(dv, flip ? d : b, flip ? b : d);
      out.add(sym * alt_v + alt, rep::alt_pair_index(dw, p, q),
              Int(flip ? -1 : 1));
    }
  return out.build();
}

inline SparseMat proj_alt_core(std::size_t ds, std::size_t dv) {
  const std::size_t dw = ds * dv;
  const std::size_t alt_s = ds * (ds - 1) / 2;
  const std::size_t alt_v = dv * (dv - 1) / 2;
  SparseBuilder out(alt_s * alt_v, dw * (dw + 1) / 2);
  for (std::size_t p = 0; p < dw; ++p)
    for (std::size_t q = p; q < dw; ++q) {
      const std::size_t a = p / dv, b = p % dv, c = q / dv, d = q % dv;
      if (a == c || b == d) continue;
      const bool flip_s = a > c;
      const bool flip_v = b > d;
      const std::size_t alts =
          rep::alt_pair_index(ds, flip_s ? c : a, flip_s ? a : c);
      const std::size_t altv =
          rep::alt_pair_index(dv, flip_v ? d : b, flip_v ? b : d);
      const int sign = (flip_s != flip_v) ? -1 : 1;
      out.add(alts * alt_v + altv, rep::sym_pair_index(dw, p, q), Int(sign));
    }
  return out.build();
}

}  // namespace detail

// The dual presentation maps whose kernels carry the second cohomology of
// Sym2, End and Alt2 of the bundle:
//   sym:    Alt2(S(k-2) (x) V(n-1)) -> Sym2 S(k-1) (x) Alt2 V(n)
//   tensor: S(k-2)^2 (x) V(n-1)^2   -> S(k-1)^2 (x) Alt2 V(n)
//   alt:    Sym2(S(k-2) (x) V(n-1)) -> Alt2 S(k-1) (x) Alt2 V(n)
inline MapHandle build_phi_dual(PhiVariant v, int k, int n) {
  if (k < 2 || n < 1)
    throw std::invalid_argument("build_phi_dual: need k >= 2, n >= 1");
  MapHandle h;
  h.k = k;
  h.n = n;
  const ModuleExpr w =
      ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::V(n - 1)});
  const std::size_t ds = static_cast<std::size_t>(k);      // dim S(k-1)
  const std::size_t dv = 2 * (static_cast<std::size_t>(n) + 1);  // dim V(n)
  switch (v) {
    case PhiVariant::sym: {
      h.name = "phi_sym";
      h.source = ModuleExpr::alt_sq(w);
      h.target = ModuleExpr::tensor({ModuleExpr::sym_sq(ModuleExpr::S(k - 1)),
                                     ModuleExpr::alt_sq(ModuleExpr::V(n))});
      h.matrix = detail::proj_sym_core(ds, dv) *
                 detail::alt_sq_of_map(detail::beta_core(k - 2, n - 1));
      break;
    }
    case PhiVariant::alt: {
      h.name = "phi_alt";
      h.source = ModuleExpr::sym_sq(w);
      h.target = ModuleExpr::tensor({ModuleExpr::alt_sq(ModuleExpr::S(k - 1)),
                                     ModuleExpr::alt_sq(ModuleExpr::V(n))});
      h.matrix = detail::proj_alt_core(ds, dv) *
                 detail::sym_sq_of_map(detail::beta_core(k - 2, n - 1));
      break;
    }
    case PhiVariant::tensor: {
      h.name = "phi_tensor";
      h.source = ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::S(k - 2),
                                     ModuleExpr::V(n - 1), ModuleExpr::V(n - 1)});
      h.target = ModuleExpr::tensor({ModuleExpr::S(k - 1), ModuleExpr::S(k - 1),
                                     ModuleExpr::alt_sq(ModuleExpr::V(n))});
      const std::size_t dsrc_s = static_cast<std::size_t>(k - 1);
      const std::size_t dsrc_v = 2 * static_cast<std::size_t>(n);
      const std::size_t alt_v = dv * (dv - 1) / 2;
      SparseBuilder out(h.target.dimension(), h.source.dimension());
      if (k >= 2) {
        auto wedge = [&](std::size_t x, std::size_t y, int sgn,
                         std::size_t sa, std::size_t sb,
                         std::size_t col) {
          if (x == y) return;
          const bool flip = x > y;
          const std::size_t alt =
              rep::alt_pair_index(dv, flip ? y : x, flip ? x : y);
          out.add((sa * ds + sb) * alt_v + alt, col,
                  Int(flip ? -sgn : sgn));
        };
        for (std::size_t a = 0; a < dsrc_s; ++a)
          for (std::size_t b = 0; b < dsrc_s; ++b)
            for (std::size_t c = 0; c < dsrc_v; ++c)
              for (std::size_t d = 0; d < dsrc_v; ++d) {
                const std::size_t col =
                    ((a * dsrc_s + b) * dsrc_v + c) * dsrc_v + d;
                const std::size_t tc = detail::mult_t_vec(n - 1, c);
                const std::size_t td = detail::mult_t_vec(n - 1, d);
                const std::size_t sc = detail::mult_s_vec(n - 1, c);
                const std::size_t sd = detail::mult_s_vec(n - 1, d);
                wedge(tc, td, +1, a, b, col);
                wedge(tc, sd, -1, a, b + 1, col);
                wedge(sc, td, -1, a + 1, b, col);
                wedge(sc, sd, +1, a + 1, b + 1, col);
              }
      }
      h.matrix = out.build();
      break;
    }
  }
  return h;
}

// Symmetrized insertions feeding the epsilon maps:
//   insert_sym: Alt2 S(k-3) (x) Sym2 V(n-2) -> Alt2(S(k-3) (x) V(n-2))
//   insert_alt: Sym2 S(k-3) (x) Sym2 V(n-2) -> Sym2(S(k-3) (x) V(n-2))
// f ^ f' (x) u.u' |-> (f (x) u) ^ (f' (x) u') + (f (x) u') ^ (f' (x) u),
// and the same with . in place of ^.
inline MapHandle build_insertion(PhiVariant v, int k, int n) {
  if (v == PhiVariant::tensor)
    throw std::invalid_argument("build_insertion: sym or alt only");
  MapHandle h;
  h.k = k;
  h.n = n;
  const ModuleExpr s = ModuleExpr::S(k - 3);
  const ModuleExpr vv = ModuleExpr::V(n - 2);
  const ModuleExpr w = ModuleExpr::tensor({s, vv});
  const std::size_t dss = s.dimension();
  const std::size_t dvv = vv.dimension();
  const std::size_t dw = w.dimension();
  const std::size_t sym_v = dvv * (dvv + 1) / 2;
  if (v == PhiVariant::sym) {
    h.name = "insert_sym";
    h.source = ModuleExpr::tensor({ModuleExpr::alt_sq(s), ModuleExpr::sym_sq(vv)});
    h.target = ModuleExpr::alt_sq(w);
    SparseBuilder out(h.target.dimension(), h.source.dimension());
    for (std::size_t p = 0; p < dss; ++p)
      for (std::size_t q = p + 1; q < dss; ++q)
        for (std::size_t r = 0; r < dvv; ++r)
          for (std::size_t sx = r; sx < dvv; ++sx) {
            const std::size_t col =
                rep::alt_pair_index(dss, p, q) * sym_v +
                rep::sym_pair_index(dvv, r, sx);
            // p < q makes both wedge pairs already ordered
            out.add(rep::alt_pair_index(dw, p * dvv + r, q * dvv + sx), col,
                    Int(1));
            out.add(rep::alt_pair_index(dw, p * dvv + sx, q * dvv + r), col,
                    Int(1));
          }
    h.matrix = out.build();
  } else {
    h.name = "insert_alt";
    h.source = ModuleExpr::tensor({ModuleExpr::sym_sq(s), ModuleExpr::sym_sq(vv)});
    h.target = ModuleExpr::sym_sq(w);
    SparseBuilder out(h.target.dimension(), h.source.dimension());
    for (std::size_t p = 0; p < dss; ++p)
      for (std::size_t q = p; q < dss; ++q)
        for (std::size_t r = 0; r < dvv; ++r)
          for (std::size_t sx = r; sx < dvv; ++sx) {
            const std::size_t col =
                rep::sym_pair_index(dss, p, q) * sym_v +
                rep::sym_pair_index(dvv, r, sx);
            const std::size_t w1 = p * dvv + r, w2 = q * dvv + sx;
            const std::size_t w3 = p * dvv + sx, w4 = q * dvv + r;
            out.add(rep::sym_pair_index(dw, std::min(w1, w2),
                                        std::max(w1, w2)),
                    col, Int(1));
            out.add(rep::sym_pair_index(dw, std::min(w3, w4),
                                        std::max(w3, w4)),
                    col, Int(1));
          }
    h.matrix = out.build();
  }
  return h;
}

namespace detail {

// Paired square of the degree-shift injection with the factor pairing
// crossed between the two slots: on w = g (x) v and w' = g' (x) v',
//   B(w, w') =  (sg (x) sv) o (tg' (x) tv') + (tg (x) tv) o (sg' (x) sv')
//             - (sg (x) tv) o (sg' (x) tv') - (tg (x) sv) o (tg' (x) sv')
// with o the wedge (alternating on the diagonal, so well-defined on Alt2)
// or the symmetric product. This is the unique multiplication pattern the
// phi maps annihilate; the naive slot-wise square of the injection is not.
inline SparseMat cross_square(int a, int b, bool wedge) {
  const std::size_t ds0 = ModuleExpr::S(a).dimension();
  const std::size_t dv0 = ModuleExpr::V(b).dimension();
  const std::size_t dv1 = ModuleExpr::V(b + 1).dimension();
  const std::size_t dw0 = ds0 * dv0;
  const std::size_t dw1 = ModuleExpr::S(a + 1).dimension() * dv1;
  const std::size_t src =
      wedge ? (dw0 ? dw0 * (dw0 - 1) / 2 : 0) : dw0 * (dw0 + 1) / 2;
  const std::size_t dst =
      wedge ? (dw1 ? dw1 * (dw1 - 1) / 2 : 0) : dw1 * (dw1 + 1) / 2;
  SparseBuilder out(dst, src);
  struct Pat {
    int x, y, xp, yp, sign;
  };
  static constexpr Pat pats[] = {
      {0, 0, 1, 1, +1}, {1, 1, 0, 0, +1}, {0, 1, 0, 1, -1}, {1, 0, 1, 0, -1}};
  auto mul = [&](int x, int y, std::size_t w) {
    const std::size_t i = w / dv0, j = w % dv0;
    return (i + (x ? 1 : 0)) * dv1 + (y ? mult_t_vec(b, j) : mult_s_vec(b, j));
  };
  for (std::size_t p = 0; p < dw0; ++p)
    for (std::size_t q = wedge ? p + 1 : p; q < dw0; ++q) {
      const std::size_t col = wedge ? rep::alt_pair_index(dw0, p, q)
                                    : rep::sym_pair_index(dw0, p, q);
      for (const auto& pat : pats) {
        const std::size_t w1 = mul(pat.x, pat.y, p);
        const std::size_t w2 = mul(pat.xp, pat.yp, q);
        if (wedge) {
          if (w1 == w2) continue;
          const bool flip = w1 > w2;
          out.add(rep::alt_pair_index(dw1, flip ? w2 : w1, flip ? w1 : w2),
                  col, Int(flip ? -pat.sign : pat.sign));
        } else {
          out.add(rep::sym_pair_index(dw1, std::min(w1, w2),
                                      std::max(w1, w2)),
                  col, Int(pat.sign));
        }
      }
    }
  return out.build();
}

}  // namespace detail

// The square factors of the epsilon maps (the crossed pairing of two
// degree-shift injections):
//   eps1_sym: Alt2(S(k-3) (x) V(n-2)) -> Alt2(S(k-2) (x) V(n-1))
//   eps1_alt: Sym2(S(k-3) (x) V(n-2)) -> Sym2(S(k-2) (x) V(n-1))
inline MapHandle build_epsilon_square(PhiVariant v, int k, int n) {
  if (v == PhiVariant::tensor)
    throw std::invalid_argument("build_epsilon_square: sym or alt only");
  MapHandle h;
  h.k = k;
  h.n = n;
  const ModuleExpr w0 =
      ModuleExpr::tensor({ModuleExpr::S(k - 3), ModuleExpr::V(n - 2)});
  const ModuleExpr w1 =
      ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::V(n - 1)});
  if (v == PhiVariant::sym) {
    h.name = "eps1_sym";
    h.source = ModuleExpr::alt_sq(w0);
    h.target = ModuleExpr::alt_sq(w1);
    h.matrix = detail::cross_square(k - 3, n - 2, true);
  } else {
    h.name = "eps1_alt";
    h.source = ModuleExpr::sym_sq(w0);
    h.target = ModuleExpr::sym_sq(w1);
    h.matrix = detail::cross_square(k - 3, n - 2, false);
  }
  return h;
}

// The epsilon maps onto the kernels of the corresponding phi maps:
//   sym:    Alt2 S(k-3) (x) Sym2 V(n-2) -> Alt2(S(k-2) (x) V(n-1))
//   alt:    Sym2 S(k-3) (x) Sym2 V(n-2) -> Sym2(S(k-2) (x) V(n-1))
//   tensor: S(k-3) (x) S(k-3) (x) Sym2 V(n-2) -> S(k-2)^2 (x) V(n-1)^2
inline MapHandle build_epsilon(PhiVariant v, int k, int n) {
  if (k < 2 || n < 1)
    throw std::invalid_argument("build_epsilon: need k >= 2, n >= 1");
  MapHandle h;
  h.k = k;
  h.n = n;
  if (v != PhiVariant::tensor) {
    const MapHandle ins = build_insertion(v, k, n);
    const MapHandle sq = build_epsilon_square(v, k, n);
    h.name = v == PhiVariant::sym ? "eps_sym" : "eps_alt";
    h.source = ins.source;
    h.target = sq.target;
    h.matrix = sq.matrix * ins.matrix;
    return h;
  }

  h.name = "eps_tensor";
  const ModuleExpr s0 = ModuleExpr::S(k - 3);
  const ModuleExpr v0 = ModuleExpr::V(n - 2);
  h.source = ModuleExpr::tensor({s0, s0, ModuleExpr::sym_sq(v0)});
  h.target = ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::S(k - 2),
                                 ModuleExpr::V(n - 1), ModuleExpr::V(n - 1)});
  const std::size_t dss = s0.dimension();
  const std::size_t dvv = v0.dimension();
  const std::size_t sym_v = dvv * (dvv + 1) / 2;
  const std::size_t ds1 = static_cast<std::size_t>(k) - 1;  // dim S(k-2)
  const std::size_t dv1 = 2 * static_cast<std::size_t>(n);  // dim V(n-1)
  SparseBuilder out(h.target.dimension(), h.source.dimension());
  auto emit = [&](std::size_t fa, std::size_t fb, std::size_t ur,
                  std::size_t us, std::size_t col) {
    // crossed pairing, stored in the S (x) S (x) V (x) V order
    const std::size_t sa = detail::mult_s_sym(fa), ta = detail::mult_t_sym(fa);
    const std::size_t sb = detail::mult_s_sym(fb), tb = detail::mult_t_sym(fb);
    const std::size_t sr = detail::mult_s_vec(n - 2, ur),
                      tr = detail::mult_t_vec(n - 2, ur);
    const std::size_t ss = detail::mult_s_vec(n - 2, us),
                      ts = detail::mult_t_vec(n - 2, us);
    auto idx = [&](std::size_t x1, std::size_t x2, std::size_t y1,
                   std::size_t y2) {
      return ((x1 * ds1 + x2) * dv1 + y1) * dv1 + y2;
    };
    out.add(idx(sa, tb, sr, ts), col, Int(1));
    out.add(idx(ta, sb, tr, ss), col, Int(1));
    out.add(idx(sa, sb, tr, ts), col, Int(-1));
    out.add(idx(ta, tb, sr, ss), col, Int(-1));
  };
  for (std::size_t a = 0; a < dss; ++a)
    for (std::size_t b = 0; b < dss; ++b)
      for (std::size_t r = 0; r < dvv; ++r)
        for (std::size_t sx = r; sx < dvv; ++sx) {
          const std::size_t col =
              (a * dss + b) * sym_v + rep::sym_pair_index(dvv, r, sx);
          emit(a, b, r, sx, col);
          emit(a, b, sx, r, col);
        }
  h.matrix = out.build();
  return h;
}

// Standard Sym2 -> (x)2 -> Alt2 splitting maps on a based space W, and the
// wedge-to-tensor comparison map iota used in the commuting-diagram checks.
inline MapHandle build_connector(ConnectorKind kind, const ModuleExpr& w) {
  MapHandle h;
  const std::size_t d = w.dimension();
  switch (kind) {
    case ConnectorKind::sigma: {
      h.name = "sigma";
      h.source = ModuleExpr::sym_sq(w);
      h.target = ModuleExpr::tensor({w, w});
      SparseBuilder out(d * d, d * (d + 1) / 2);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          const std::size_t col = rep::sym_pair_index(d, i, j);
          out.add(i * d + j, col, Int(1));
          out.add(j * d + i, col, Int(1));
        }
      h.matrix = out.build();
      break;
    }
    case ConnectorKind::pi: {
      h.name = "pi";
      h.source = ModuleExpr::tensor({w, w});
      h.target = ModuleExpr::sym_sq(w);
      SparseBuilder out(d * (d + 1) / 2, d * d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          out.add(rep::sym_pair_index(d, std::min(i, j), std::max(i, j)),
                  i * d + j, Int(1));
      h.matrix = out.build();
      break;
    }
    case ConnectorKind::alpha: {
      h.name = "alpha";
      h.source = ModuleExpr::tensor({w, w});
      h.target = ModuleExpr::alt_sq(w);
      SparseBuilder out(d == 0 ? 0 : d * (d - 1) / 2, d * d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          const bool flip = i > j;
          out.add(rep::alt_pair_index(d, flip ? j : i, flip ? i : j),
                  i * d + j, Int(flip ? -1 : 1));
        }
      h.matrix = out.build();
      break;
    }
    case ConnectorKind::iota:
      throw std::invalid_argument("build_connector: iota needs (k, n)");
  }
  return h;
}

// iota: Alt2 S(k-1) (x) Alt2 V(n) -> S(k-1) (x) S(k-1) (x) Alt2 V(n),
// f ^ f' (x) w |-> (f (x) f' - f' (x) f) (x) w.
inline MapHandle build_iota(int k, int n) {
  MapHandle h;
  h.name = "iota";
  h.k = k;
  h.n = n;
  const std::size_t ds = static_cast<std::size_t>(k);
  const ModuleExpr altv = ModuleExpr::alt_sq(ModuleExpr::V(n));
  const std::size_t dav = altv.dimension();
  h.source = ModuleExpr::tensor({ModuleExpr::alt_sq(ModuleExpr::S(k - 1)), altv});
  h.target = ModuleExpr::tensor({ModuleExpr::S(k - 1), ModuleExpr::S(k - 1), altv});
  SparseBuilder out(ds * ds * dav, h.source.dimension());
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = i + 1; j < ds; ++j)
      for (std::size_t q = 0; q < dav; ++q) {
        const std::size_t col = rep::alt_pair_index(ds, i, j) * dav + q;
        out.add((i * ds + j) * dav + q, col, Int(1));
        out.add((j * ds + i) * dav + q, col, Int(-1));
      }
  h.matrix = out.build();
  return h;
}

// Regrouping permutation (S (x) V) (x) (S (x) V) -> S (x) S (x) V (x) V for
// the tensor-convention source of phi_tensor / eps_tensor.
inline MapHandle build_regroup(int k, int n) {
  MapHandle h;
  h.name = "regroup";
  h.k = k;
  h.n = n;
  const ModuleExpr s = ModuleExpr::S(k - 2);
  const ModuleExpr v = ModuleExpr::V(n - 1);
  const ModuleExpr w = ModuleExpr::tensor({s, v});
  h.source = ModuleExpr::tensor({w, w});
  h.target = ModuleExpr::tensor({s, s, v, v});
  const std::size_t ds = s.dimension(), dv = v.dimension();
  const std::size_t dw = ds * dv;
  SparseBuilder out(h.target.dimension(), h.source.dimension());
  for (std::size_t p = 0; p < dw; ++p)
    for (std::size_t q = 0; q < dw; ++q) {
      const std::size_t a = p / dv, b = p % dv, c = q / dv, d = q % dv;
      out.add(((a * ds + c) * dv + b) * dv + d, p * dw + q, Int(1));
    }
  h.matrix = out.build();
  return h;
}

// (pi (x) id): S(k-1) (x) S(k-1) (x) Alt2 V(n) -> Sym2 S(k-1) (x) Alt2 V(n).
inline MapHandle build_pi_tensor(int k, int n) {
  MapHandle h;
  h.name = "pi_tensor";
  h.k = k;
  h.n = n;
  const std::size_t ds = static_cast<std::size_t>(k);
  const ModuleExpr altv = ModuleExpr::alt_sq(ModuleExpr::V(n));
  const std::size_t dav = altv.dimension();
  h.source = ModuleExpr::tensor({ModuleExpr::S(k - 1), ModuleExpr::S(k - 1), altv});
  h.target = ModuleExpr::tensor({ModuleExpr::sym_sq(ModuleExpr::S(k - 1)), altv});
  SparseBuilder out(h.target.dimension(), h.source.dimension());
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = 0; j < ds; ++j)
      for (std::size_t q = 0; q < dav; ++q)
        out.add(rep::sym_pair_index(ds, std::min(i, j), std::max(i, j)) * dav +
                    q,
                (i * ds + j) * dav + q, Int(1));
  h.matrix = out.build();
  return h;
}

// Named registry used by the CLI export and by the whole-point checks.
inline MapHandle build_named_map(const std::string& name, int k, int n) {
  const ModuleExpr w =
      ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::V(n - 1)});
  if (name == "beta") return build_beta(k, n);
  if (name == "mu") return build_mu(k, n);
  if (name == "phi_sym") return build_phi_dual(PhiVariant::sym, k, n);
  if (name == "phi_tensor") return build_phi_dual(PhiVariant::tensor, k, n);
  if (name == "phi_alt") return build_phi_dual(PhiVariant::alt, k, n);
  if (name == "eps_sym") return build_epsilon(PhiVariant::sym, k, n);
  if (name == "eps_tensor") return build_epsilon(PhiVariant::tensor, k, n);
  if (name == "eps_alt") return build_epsilon(PhiVariant::alt, k, n);
  if (name == "eps1_sym") return build_epsilon_square(PhiVariant::sym, k, n);
  if (name == "eps1_alt") return build_epsilon_square(PhiVariant::alt, k, n);
  if (name == "insert_sym") return build_insertion(PhiVariant::sym, k, n);
  if (name == "insert_alt") return build_insertion(PhiVariant::alt, k, n);
  if (name == "iota") return build_iota(k, n);
  if (name == "regroup") return build_regroup(k, n);
  if (name == "pi_tensor") return build_pi_tensor(k, n);
  if (name == "sigma" || name == "pi" || name == "alpha") {
    ConnectorKind kind = name == "sigma"  ? ConnectorKind::sigma
                         : name == "pi"   ? ConnectorKind::pi
                                          : ConnectorKind::alpha;
    MapHandle h = build_connector(kind, w);
    h.k = k;
    h.n = n;
    return h;
  }
  throw std::invalid_argument("unknown map name: " + name);
}

inline const std::vector<std::string>& map_names() {
  static const std::vector<std::string> names = {
      "beta",       "mu",         "phi_sym",   "phi_tensor", "phi_alt",
      "eps_sym",    "eps_tensor", "eps_alt",   "eps1_sym",   "eps1_alt",
      "insert_sym", "insert_alt", "iota",      "regroup",    "pi_tensor",
      "sigma",      "pi",         "alpha"};
  return names;
}

// Labeled dump of a right-kernel basis of a map, one block per vector.
inline void write_kernel(std::ostream& os, const MapHandle& h,
                         const std::vector<std::vector<Int>>& kernel) {
  const rep::Basis src(h.source);
  os << "kernel " << h.name << ' ' << h.k << ' ' << h.n << ' '
     << kernel.size() << '\n';
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    os << "vector " << i << '\n';
    for (std::size_t j = 0; j < kernel[i].size(); ++j)
      if (kernel[i][j] != 0)
        os << kernel[i][j] << ' ' << src.label(j) << '\n';
  }
}

// Equivariance and weight checks shared by tests and the grid runner.
inline bool is_equivariant(const MapHandle& h) {
  for (rep::LieGen g : {rep::LieGen::e, rep::LieGen::f, rep::LieGen::h}) {
    const auto left = rep::lie_action(h.target, g) * h.matrix;
    const auto right = h.matrix * rep::lie_action(h.source, g);
    if (!(left - right).is_zero()) return false;
  }
  return true;
}

inline bool preserves_weight(const MapHandle& h) {
  const auto ws = rep::detail::weight_vector(h.source);
  const auto wt = rep::detail::weight_vector(h.target);
  for (std::size_t c = 0; c < h.matrix.cols(); ++c)
    for (const auto& [r, v] : h.matrix.column(c))
      if (wt[r] != ws[c]) return false;
  return true;
}

}  // namespace instanton::maps
