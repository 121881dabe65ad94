#include "instanton/maps/build.hpp"

#include "instanton/la/modular.hpp"
#include "instanton/la/rank.hpp"
#include "instanton/rep/basis.hpp"
#include "instanton/rep/lie.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace instanton;
using namespace instanton::maps;
using instanton::la::Int;
using instanton::la::SparseMat;
using instanton::rep::Basis;
using instanton::rep::ModuleExpr;

TEST_CASE("beta on the smallest case expands the defining formula") {
  const MapHandle beta = build_beta(1, 1);
  REQUIRE(beta.source.dimension() == 2);  // 1 * k * 2n
  REQUIRE(beta.matrix.rows() == 8);       // (k+1) * 2(n+1)
  const Basis src(beta.source);
  const Basis dst(beta.target);
  const std::size_t col = src.index_of("(s)^(t)|1|s@1");
  // (s^t) (x) 1 (x) (s (x) 1) |-> s (x) (s (x) t) - t (x) (s (x) s)
  REQUIRE(beta.matrix.at(dst.index_of("s|s@t"), col) == 1);
  REQUIRE(beta.matrix.at(dst.index_of("t|s@s"), col) == -1);
  REQUIRE(beta.matrix.column(col).size() == 2);
}

TEST_CASE("beta is injective on small points") {
  for (auto [k, n] : {std::pair{1, 1}, {2, 2}, {3, 2}}) {
    const MapHandle beta = build_beta(k, n);
    REQUIRE(beta.source.dimension() == static_cast<std::size_t>(2 * n * k));
    REQUIRE(la::rank_exact(beta.matrix) == beta.matrix.cols());
  }
}

TEST_CASE("mu multiplies monomials") {
  const MapHandle mu = build_mu(1, 1);
  const Basis src(mu.source);
  const Basis dst(mu.target);
  const std::size_t col = src.index_of("s|t@t");
  REQUIRE(mu.matrix.at(dst.index_of("t@s*t"), col) == 1);
  REQUIRE(mu.matrix.column(col).size() == 1);
}

TEST_CASE("mu after beta vanishes and mu is surjective") {
  const MapHandle beta = build_beta(3, 2);
  const MapHandle mu32 = build_mu(3, 2);
  REQUIRE((mu32.matrix * beta.matrix).is_zero());

  const MapHandle mu22 = build_mu(2, 2);
  REQUIRE(mu22.matrix.rows() == 10);  // dim V(4)
  REQUIRE(la::rank_exact(mu22.matrix) == 10);
}

TEST_CASE("phi sym at (2,1) is the four-term formula on the only column") {
  const MapHandle phi = build_phi_dual(PhiVariant::sym, 2, 1);
  REQUIRE(phi.source.dimension() == 1);
  REQUIRE(phi.target.dimension() == 18);
  const Basis dst(phi.target);
  REQUIRE(phi.matrix.column(0).size() == 4);
  REQUIRE(phi.matrix.at(dst.index_of("(s).(s)|(s@t)^(t@t)"), 0) == 1);
  REQUIRE(phi.matrix.at(dst.index_of("(s).(t)|(s@t)^(t@s)"), 0) == -1);
  REQUIRE(phi.matrix.at(dst.index_of("(s).(t)|(s@s)^(t@t)"), 0) == -1);
  REQUIRE(phi.matrix.at(dst.index_of("(t).(t)|(s@s)^(t@s)"), 0) == 1);
}

TEST_CASE("phi shapes and kernel dims at (4,2), against the dense oracle") {
  const MapHandle sym = build_phi_dual(PhiVariant::sym, 4, 2);
  REQUIRE(sym.matrix.rows() == 150);
  REQUIRE(sym.matrix.cols() == 66);
  REQUIRE(la::rank_exact(sym.matrix) == 63);
  REQUIRE(la::rank_exact(sym.matrix.transpose()) == 63);
  REQUIRE(oracle::kernel_dim(sym.matrix) == 3);

  const MapHandle ten = build_phi_dual(PhiVariant::tensor, 4, 2);
  REQUIRE(ten.matrix.cols() == 144);
  REQUIRE(oracle::kernel_dim(ten.matrix) == 12);
  REQUIRE(la::rank_exact(ten.matrix) == 144 - 12);

  const MapHandle alt = build_phi_dual(PhiVariant::alt, 4, 2);
  REQUIRE(alt.matrix.cols() == 78);
  REQUIRE(oracle::kernel_dim(alt.matrix) == 9);
  REQUIRE(la::rank_exact(alt.matrix) == 78 - 9);
}

TEST_CASE("phi entry ranges") {
  // sym and tensor have entries in {-1,1}; on a diagonal column
  // (g (x) v).(g (x) v) the alt formula collapses to 2 sg^tg (x) sv^tv,
  // so phi_alt carries 2 there
  for (auto v : {PhiVariant::sym, PhiVariant::tensor}) {
    const MapHandle phi = build_phi_dual(v, 5, 2);
    for (const auto& t : phi.matrix.triplets())
      REQUIRE((t.value == 1 || t.value == -1));
  }
  const MapHandle pa = build_phi_dual(PhiVariant::alt, 5, 2);
  const std::size_t dw =
      rep::ModuleExpr::tensor({rep::ModuleExpr::S(3), rep::ModuleExpr::V(1)})
          .dimension();
  for (const auto& t : pa.matrix.triplets()) {
    if (t.value == 2) {
      const auto [i, j] = rep::sym_pair_at(dw, t.col);
      REQUIRE(i == j);
    } else {
      REQUIRE((t.value == 1 || t.value == -1));
    }
  }
}

TEST_CASE("multimodular rank of phi sym at (5,3)") {
  const MapHandle phi = build_phi_dual(PhiVariant::sym, 5, 3);
  REQUIRE(phi.matrix.cols() == 276);
  const auto res = la::rank_modular(phi.matrix, 3, 17);
  REQUIRE(res.agreed);
  REQUIRE(res.rank == 276 - 30);  // kernel C(3,2)*C(5,2)
  REQUIRE(res.rank == la::rank_exact(phi.matrix));
}

TEST_CASE("kernel basis of phi maps") {
  // kernel dim C(1,2)*C(3,2) = 0
  REQUIRE(la::kernel_basis(build_phi_dual(PhiVariant::sym, 3, 2).matrix)
              .empty());
  // dim S0 (x) S0 (x) Sym2 V0 = 3
  const MapHandle ten = build_phi_dual(PhiVariant::tensor, 3, 2);
  const auto kb = la::kernel_basis(ten.matrix);
  REQUIRE(kb.size() == 3);
  for (const auto& v : kb)
    for (const auto& y : ten.matrix.apply(v)) REQUIRE(y == 0);
}

TEST_CASE("epsilon degenerate sources are empty") {
  REQUIRE(build_epsilon(PhiVariant::sym, 3, 2).matrix.cols() == 0);
  REQUIRE(build_epsilon(PhiVariant::sym, 2, 2).matrix.cols() == 0);
  REQUIRE(build_epsilon(PhiVariant::alt, 2, 3).matrix.cols() == 0);
  REQUIRE(build_epsilon(PhiVariant::tensor, 4, 1).matrix.cols() == 0);
}

TEST_CASE("epsilon ranks at (4,2)") {
  const MapHandle es = build_epsilon(PhiVariant::sym, 4, 2);
  REQUIRE(es.matrix.cols() == 3);  // C(2,2) * C(3,2)
  REQUIRE(la::rank_exact(es.matrix) == 3);

  const MapHandle ea = build_epsilon(PhiVariant::alt, 4, 2);
  REQUIRE(ea.matrix.cols() == 9);  // C(3,2) * 3
  REQUIRE(la::rank_exact(ea.matrix) == 9);

  const MapHandle et = build_epsilon(PhiVariant::tensor, 4, 2);
  REQUIRE(et.matrix.cols() == 12);
  REQUIRE(la::rank_exact(et.matrix) == 12);
}

TEST_CASE("epsilon entry ranges") {
  // sym and tensor stay within {-2,...,2}; the alt variant reaches 4 on the
  // doubly-diagonal columns (f.f) (x) (u.u), where the insertion doubling
  // meets the diagonal of the crossed square
  for (auto v : {PhiVariant::sym, PhiVariant::tensor}) {
    const MapHandle eps = build_epsilon(v, 5, 3);
    for (const auto& t : eps.matrix.triplets()) {
      REQUIRE(t.value <= 2);
      REQUIRE(t.value >= -2);
      REQUIRE(t.value != 0);
    }
  }
  const MapHandle ea = build_epsilon(PhiVariant::alt, 5, 3);
  bool found4 = false;
  for (const auto& t : ea.matrix.triplets()) {
    REQUIRE(t.value != 0);
    REQUIRE(t.value <= 4);
    REQUIRE(t.value >= -2);
    if (t.value == 4) found4 = true;
  }
  REQUIRE(found4);
}

TEST_CASE("image of epsilon lies in the kernel of phi") {
  for (auto v : {PhiVariant::sym, PhiVariant::tensor, PhiVariant::alt})
    for (auto [k, n] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 2}}) {
      const MapHandle phi = build_phi_dual(v, k, n);
      const MapHandle eps = build_epsilon(v, k, n);
      REQUIRE((phi.matrix * eps.matrix).is_zero());
    }
}

TEST_CASE("the displayed alt epsilon expansion has a typo; Sym2(beta1) is "
          "the map that annihilates") {
  // displayed four-term expansion: the first term repeats and the middle
  // signs cannot come from Sym2 of the degree-shift injection
  const int k = 4, n = 2;
  const ModuleExpr w0 =
      ModuleExpr::tensor({ModuleExpr::S(k - 3), ModuleExpr::V(n - 2)});
  const ModuleExpr w1 =
      ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::V(n - 1)});
  const std::size_t dv0 = ModuleExpr::V(n - 2).dimension();
  const std::size_t dv1 = ModuleExpr::V(n - 1).dimension();
  const std::size_t d0 = w0.dimension(), d1 = w1.dimension();
  auto vs = [&](std::size_t j) {
    return (j / (dv0 / 2)) * (dv1 / 2) + (j % (dv0 / 2));
  };
  auto vt = [&](std::size_t j) { return vs(j) + 1; };
  la::SparseBuilder printed(d1 * (d1 + 1) / 2, d0 * (d0 + 1) / 2);
  for (std::size_t p = 0; p < d0; ++p)
    for (std::size_t q = p; q < d0; ++q) {
      const std::size_t col = rep::sym_pair_index(d0, p, q);
      const std::size_t f = p / dv0, u = p % dv0;
      const std::size_t f1 = q / dv0, u1 = q % dv0;
      auto pair = [&](std::size_t a, std::size_t b, std::size_t c,
                      std::size_t d, long val) {
        const std::size_t x = a * dv1 + b, y = c * dv1 + d;
        printed.add(rep::sym_pair_index(d1, std::min(x, y), std::max(x, y)),
                    col, Int(val));
      };
      pair(f, vt(u), f1, vt(u1), 2);       // term printed twice
      pair(f, vs(u), f1 + 1, vt(u1), -1);  // (sf (x) su).(tf' (x) tu')
      pair(f + 1, vt(u), f1, vs(u1), -1);  // (tf (x) tu).(sf' (x) su')
    }
  const MapHandle ibar = build_insertion(PhiVariant::alt, k, n);
  const SparseMat eps_printed = printed.build() * ibar.matrix;
  const MapHandle phi = build_phi_dual(PhiVariant::alt, k, n);
  REQUIRE_FALSE((phi.matrix * eps_printed).is_zero());

  // the naive slot-wise square of the injection fails as well; only the
  // crossed pairing lands in the kernel
  const SparseMat eps_naive =
      maps::detail::sym_sq_of_map(maps::detail::beta_core(k - 3, n - 2)) *
      ibar.matrix;
  REQUIRE_FALSE((phi.matrix * eps_naive).is_zero());
  REQUIRE(
      (phi.matrix * build_epsilon(PhiVariant::alt, k, n).matrix).is_zero());
}

TEST_CASE("connector identities on W = S1 (x) V0") {
  const ModuleExpr w = ModuleExpr::tensor({ModuleExpr::S(1), ModuleExpr::V(0)});
  const MapHandle sigma = build_connector(ConnectorKind::sigma, w);
  const MapHandle alpha = build_connector(ConnectorKind::alpha, w);
  const MapHandle pi = build_connector(ConnectorKind::pi, w);

  REQUIRE((alpha.matrix * sigma.matrix).is_zero());
  const SparseMat two_id = SparseMat::identity(10).scaled(Int(2));
  REQUIRE((pi.matrix * sigma.matrix) == two_id);
  REQUIRE(alpha.matrix.rows() == 6);
  REQUIRE(alpha.matrix.cols() == 16);
  REQUIRE(la::rank_exact(alpha.matrix) == 6);
  REQUIRE(la::rank_exact(sigma.matrix) == 10);
}

TEST_CASE("the phi squares of the snake diagram commute with constant one") {
  for (auto [k, n] : {std::pair{3, 2}, {4, 2}, {5, 3}}) {
    const ModuleExpr w =
        ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::V(n - 1)});
    const MapHandle phi_t = build_phi_dual(PhiVariant::tensor, k, n);
    const MapHandle phi_s = build_phi_dual(PhiVariant::sym, k, n);
    const MapHandle phi_a = build_phi_dual(PhiVariant::alt, k, n);
    const MapHandle sigma = build_connector(ConnectorKind::sigma, w);
    const MapHandle alpha = build_connector(ConnectorKind::alpha, w);
    const MapHandle regroup = build_regroup(k, n);
    const MapHandle iota = build_iota(k, n);
    const MapHandle pi_t = build_pi_tensor(k, n);

    // phi_tensor . regroup . sigma = iota . phi_alt
    const SparseMat left1 = phi_t.matrix * regroup.matrix * sigma.matrix;
    const SparseMat right1 = iota.matrix * phi_a.matrix;
    REQUIRE(left1 == right1);
    REQUIRE_FALSE(left1.is_zero());

    // phi_sym . alpha = (pi (x) id) . phi_tensor . regroup
    const SparseMat left2 = phi_s.matrix * alpha.matrix;
    const SparseMat right2 = pi_t.matrix * phi_t.matrix * regroup.matrix;
    REQUIRE(left2 == right2);
    REQUIRE_FALSE(left2.is_zero());
  }
}

TEST_CASE("epsilon columns fit the snake rows") {
  for (auto [k, n] : {std::pair{5, 2}, {5, 3}, {6, 3}}) {
    const ModuleExpr s0 = ModuleExpr::S(k - 3);
    const ModuleExpr w1 =
        ModuleExpr::tensor({ModuleExpr::S(k - 2), ModuleExpr::V(n - 1)});
    const std::size_t sym_v =
        ModuleExpr::sym_sq(ModuleExpr::V(n - 2)).dimension();
    const MapHandle eps_t = build_epsilon(PhiVariant::tensor, k, n);
    const MapHandle eps_s = build_epsilon(PhiVariant::sym, k, n);
    const MapHandle eps_a = build_epsilon(PhiVariant::alt, k, n);
    const MapHandle regroup = build_regroup(k, n);
    const MapHandle sigma_s = build_connector(ConnectorKind::sigma, s0);
    const MapHandle alpha_s = build_connector(ConnectorKind::alpha, s0);
    const MapHandle sigma_w = build_connector(ConnectorKind::sigma, w1);
    const MapHandle alpha_w = build_connector(ConnectorKind::alpha, w1);
    const auto id_symv = SparseMat::identity(sym_v);

    // eps_tensor . (sigma_S (x) id) = regroup . sigma_W . eps_alt
    const SparseMat left1 =
        eps_t.matrix * rep::detail::kron(sigma_s.matrix, id_symv);
    const SparseMat right1 = regroup.matrix * sigma_w.matrix * eps_a.matrix;
    REQUIRE(left1 == right1);

    // eps_sym . (alpha_S (x) id) = alpha_W . regroup^T . eps_tensor
    const SparseMat left2 =
        eps_s.matrix * rep::detail::kron(alpha_s.matrix, id_symv);
    const SparseMat right2 =
        alpha_w.matrix * regroup.matrix.transpose() * eps_t.matrix;
    REQUIRE(left2 == right2);
  }
}

TEST_CASE("every named map is equivariant and weight preserving") {
  for (auto [k, n] : {std::pair{3, 2}, {4, 2}}) {
    for (const auto& name : map_names()) {
      const MapHandle h = build_named_map(name, k, n);
      INFO(name << " at k=" << k << " n=" << n);
      REQUIRE(h.matrix.rows() == h.target.dimension());
      REQUIRE(h.matrix.cols() == h.source.dimension());
      REQUIRE(is_equivariant(h));
      REQUIRE(preserves_weight(h));
    }
  }
}

TEST_CASE("unknown map names are rejected") {
  REQUIRE_THROWS_AS(build_named_map("bogus", 4, 2), std::invalid_argument);
}

TEST_CASE("labeled kernel dump") {
  const MapHandle phi = build_phi_dual(PhiVariant::tensor, 3, 2);
  std::ostringstream os;
  write_kernel(os, phi, la::kernel_basis(phi.matrix));
  const std::string text = os.str();
  REQUIRE(text.rfind("kernel phi_tensor 3 2 3\n", 0) == 0);
  REQUIRE(text.find("vector 0\n") != std::string::npos);
  REQUIRE(text.find("|") != std::string::npos);  // labels present

  const MapHandle empty = build_phi_dual(PhiVariant::sym, 3, 2);
  std::ostringstream os2;
  write_kernel(os2, empty, la::kernel_basis(empty.matrix));
  REQUIRE(os2.str() == "kernel phi_sym 3 2 0\n");
}
