#include "instanton/cohom/cohomology.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace instanton;
using namespace instanton::cohom;
using maps::PhiVariant;

TEST_CASE("kernel dimensions of the phi maps") {
  REQUIRE(compute_h2(PhiVariant::sym, 2, 1) == 0);
  REQUIRE(compute_h2(PhiVariant::sym, 2, 3) == 0);
  REQUIRE(compute_h2(PhiVariant::sym, 4, 2) == 3);
  REQUIRE(compute_h2(PhiVariant::sym, 5, 3) == 30);
  REQUIRE(compute_h2(PhiVariant::tensor, 4, 2) == 12);
  REQUIRE(compute_h2(PhiVariant::alt, 4, 2) == 9);
  REQUIRE_THROWS_AS(compute_h2(PhiVariant::sym, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("kernel dims against the dense oracle at (5,2)") {
  for (auto v : {PhiVariant::sym, PhiVariant::tensor, PhiVariant::alt}) {
    const auto phi = maps::build_phi_dual(v, 5, 2);
    REQUIRE(compute_h2(v, 5, 2) == oracle::kernel_dim(phi.matrix));
  }
}

TEST_CASE("blocked rank equals exact rank on equivariant maps") {
  for (auto [k, n] : {std::pair{3, 1}, {4, 2}, {5, 3}, {6, 2}}) {
    for (const auto& name : maps::map_names()) {
      const auto h = maps::build_named_map(name, k, n);
      INFO(name << " at (" << k << "," << n << ")");
      REQUIRE(equivariant_rank(h) == la::rank_exact(h.matrix));
    }
  }
}

TEST_CASE("multimodular engine agrees with exact on compute_h2") {
  EngineConfig mm;
  mm.engine = RankEngine::multimodular;
  mm.seed = 7;
  for (auto v : {PhiVariant::sym, PhiVariant::tensor, PhiVariant::alt})
    REQUIRE(compute_h2(v, 5, 3, mm) == compute_h2(v, 5, 3));
}

TEST_CASE("cokernel dimensions") {
  // target 18, source 1, rank 1
  REQUIRE(compute_h1_N(PhiVariant::sym, 2, 1) == 17);
  // target Alt2 S1 (x) Alt2 V1 = 6, source Sym2(S0 (x) V0) = 3, rank 3
  REQUIRE(compute_h1_N(PhiVariant::alt, 2, 1) == 3);
}

TEST_CASE("euler characteristic, corrected and printed") {
  REQUIRE(chi_s2(2, 1) == -13);
  REQUIRE(chi_s2(2, 2) == -35);
  REQUIRE(chi_s2_printed(2, 1) == -1);  // 3 - 2k at k=2
  // corrected chi reproduces h2 - h1 with the known n=1 value
  for (int k = 2; k <= 8; ++k) REQUIRE(chi_s2(k, 1) == 0 - (8 * k - 3));
}

TEST_CASE("closed forms") {
  REQUIRE(closed_forms(2, 2).h1_s2_formula == 35);
  REQUIRE(closed_forms(3, 2).h1_s2_formula == 53);
  REQUIRE(closed_forms(3, 2).k3_dim_formula == 53);
  for (int k = 2; k <= 9; ++k)
    REQUIRE(closed_forms(k, 1).h1_s2_formula == 8 * k - 3);
  // the k=3 corollary value equals the theorem value at k=3 for every n
  for (int n = 1; n <= 6; ++n)
    REQUIRE(closed_forms(3, n).k3_dim_formula ==
            closed_forms(3, n).h1_s2_formula);
  REQUIRE(closed_forms(4, 2).h2_s2_formula == 3);
  REQUIRE(closed_forms(4, 2).h2_end_formula == 12);
  REQUIRE(h2_alt_closed(4, 2) == 9);
}

TEST_CASE("snake identity of the closed forms") {
  for (int k = 2; k <= 9; ++k)
    for (int n = 1; n <= 5; ++n)
      REQUIRE(closed_forms(k, n).h2_end_formula ==
              closed_forms(k, n).h2_s2_formula + h2_alt_closed(k, n));
}

TEST_CASE("verify_formulas at (4,2)") {
  const VerdictReport rep = verify_formulas(4, 2);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.find("h2_sym")->computed == 3);
  REQUIRE(rep.find("h2_tensor")->computed == 12);
  REQUIRE(rep.find("h2_alt")->computed == 9);
  REQUIRE(rep.find("h2_snake_additivity")->pass);
  REQUIRE(rep.find("h1_theorem")->computed == 71);
  REQUIRE(rep.find("chi_printed_flagged")->pass);
  REQUIRE(rep.data.at("h1_s2E") == 71);
  REQUIRE(rep.find("h1_n1_known") == nullptr);
}

TEST_CASE("verify_formulas at k=2 and n=1 degenerate rows") {
  for (int n = 1; n <= 3; ++n) {
    const VerdictReport rep = verify_formulas(2, n);
    REQUIRE(rep.all_pass());
    REQUIRE(rep.find("h2_sym")->computed == 0);
    REQUIRE(rep.find("h2_tensor")->computed == 0);
    REQUIRE(rep.find("h1_theorem")->computed ==
            2 * 2 * (5 * n - 1) + 4 * n * n - 10 * n + 3);
  }
  for (int k = 2; k <= 5; ++k) {
    const VerdictReport rep = verify_formulas(k, 1);
    REQUIRE(rep.all_pass());
    REQUIRE(rep.find("h2_sym")->computed == 0);
    REQUIRE(rep.find("h1_n1_known")->computed == 8 * k - 3);
  }
}

TEST_CASE("cohomology record collects the pieces") {
  const CohomRecord r = cohomology_record(4, 2);
  REQUIRE(r.h2_s2 == 3);
  REQUIRE(r.h2_end == 12);
  REQUIRE(r.h2_alt2 == 9);
  REQUIRE(r.h1_s2E == 71);
  REQUIRE(r.chi == 3 - 71);
  REQUIRE(r.h1_s2N == compute_h1_N(PhiVariant::sym, 4, 2));
}

TEST_CASE("clebsch-gordan sequence claims") {
  for (auto [k, n] : {std::pair{1, 1}, {2, 2}, {5, 5}, {3, 1}}) {
    for (const auto& c : sequence_claims(k, n)) {
      INFO(c.id << " at (" << k << "," << n << ")");
      REQUIRE(c.pass);
    }
  }
}

TEST_CASE("equivariance claims") {
  for (const auto& c : equivariance_claims(4, 2)) REQUIRE(c.pass);
  for (const auto& c : equivariance_claims(2, 1)) REQUIRE(c.pass);
}
