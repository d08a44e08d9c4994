#include <doctest.h>

#include "avalanche/bounds.hpp"
#include "avalanche/construct.hpp"
#include "avalanche/criteria.hpp"
#include "avalanche/formats.hpp"
#include "avalanche/oracles.hpp"
#include "avalanche/verify.hpp"

using namespace avalanche;

TEST_CASE("nonlinearity of affine and bent functions") {
  CHECK(nonlinearity(walsh_transform(affine_function(4, 0b1010, true))) == 0);

  Anf a;
  a.n = 4;
  a.monomials = {0b0011, 0b1100};
  BooleanFunction bent = from_anf(a);
  CHECK(nonlinearity(walsh_transform(bent)) == 6);
  CHECK(nonlinearity_by_affine_distance(bent) == 6);
}

TEST_CASE("gac indicators at the extremes") {
  GacIndicators aff = gac_indicators(autocorrelation(affine_function(3, 0b010, false)));
  CHECK(aff.sigma == 512);  // 2^{3n}
  CHECK(aff.delta_abs == 8);

  Anf a;
  a.n = 4;
  a.monomials = {0b0011, 0b1100};
  GacIndicators bent = gac_indicators(autocorrelation(from_anf(a)));
  CHECK(bent.sigma == 256);  // 2^{2n}
  CHECK(bent.delta_abs == 0);
}

TEST_CASE("pc profile of a bent function") {
  Anf a;
  a.n = 4;
  a.monomials = {0b0011, 0b1100};
  PcProfile p = pc_profile(autocorrelation(from_anf(a)));
  CHECK(p.pc_vectors.size() == 15);
  CHECK(p.non_pc_vectors.empty());
  CHECK(p.pc_degree == 4);
  CHECK(p.sac);
}

TEST_CASE("pc degree drops to zero when a unit vector fails") {
  BooleanFunction f = affine_function(3, 0b001, false);  // x1
  PcProfile p = pc_profile(autocorrelation(f));
  CHECK(p.pc_degree == 0);
  CHECK_FALSE(p.sac);
}

TEST_CASE("pair-sum SAC check") {
  CHECK_FALSE(sac_check_blockwise(affine_function(3, 0b100, false)));
  CHECK_THROWS_AS(sac_check_blockwise(BooleanFunction(2)),
                  std::invalid_argument);

  Anf a;
  a.n = 3;
  a.monomials = {0b011};  // x1x2 on V_3
  BooleanFunction f = sac_concat(from_anf(a), false).f;
  CHECK(sac_check_blockwise(f));
  CHECK(pc_profile(autocorrelation(f)).sac);
}

TEST_CASE("pair-sum SAC check accepts the first reference example") {
  BooleanFunction e1 = function_of(parse_block_string(kExample1Blocks));
  CHECK(sac_check_blockwise(e1));
}

TEST_CASE("pair-sum SAC check agrees with the autocorrelation route") {
  Rng rng(23);
  for (int n = 3; n <= 6; ++n)
    for (int rep = 0; rep < 50; ++rep) {
      BooleanFunction f = rng.function(n);
      CHECK(sac_check_blockwise(f) == pc_profile(autocorrelation(f)).sac);
    }
}

TEST_CASE("linear structures") {
  LinearStructures aff = linear_structures(autocorrelation(affine_function(3, 0b110, true)));
  CHECK(aff.vectors.size() == 7);
  CHECK(aff.count_even_weight == 3);  // weights of 1..7: three are even

  BooleanFunction andf = from_anf([] {
    Anf a;
    a.n = 2;
    a.monomials = {0b11};
    return a;
  }());
  CHECK(linear_structures(autocorrelation(andf)).vectors.empty());
}

TEST_CASE("analyze cross-computes sigma and fills the report") {
  BooleanFunction f = sac_concat(affine_function(3, 0b100, false), false).f;
  GacReport g = analyze(f);
  CHECK(g.n == 4);
  CHECK(g.balanced);
  CHECK(g.sigma == 1024);  // 2^{3n-2}
  CHECK(g.nonlinearity == 4);
  CHECK(g.delta_abs == 16);
  CHECK(g.sac);
  CHECK(g.algebraic_degree == 2);
  CHECK(g.pc_vectors.size() + g.non_pc_vectors.size() == f.size() - 1);
  for (uint64_t v : g.linear_structures) {
    bool in_non_pc = false;
    for (uint64_t w : g.non_pc_vectors) in_non_pc |= (v == w);
    CHECK(in_non_pc);
  }
}

TEST_CASE("bound formulas at the published spot values") {
  CHECK(son_sigma_lower(8) == 67584);
  SungBound s = sung_sigma_lower(8, 251);
  CHECK(s.case_no == 3);
  CHECK(s.num / s.den == 81920);
  CHECK(nl_upper_from_sigma(8, 262144) == 112);
}

TEST_CASE("sung piecewise branch selection") {
  CHECK(sung_sigma_lower(8, 11).case_no == 1);
  CHECK(sung_sigma_lower(8, 10).case_no == 2);
  CHECK(sung_sigma_lower(8, 10).non_monotone);
  CHECK_FALSE(sung_sigma_lower(8, 0).non_monotone);
  CHECK(sung_sigma_lower(8, 223).case_no == 1);   // boundary: 2^n - 2^{n-3} - 1
  CHECK(sung_sigma_lower(8, 224).case_no == 3);
  CHECK(sung_sigma_lower(8, 254).case_no == 3);   // t = 2^n - 2
  CHECK_THROWS_AS(sung_sigma_lower(8, 255), std::invalid_argument);
}

TEST_CASE("theorem 1 band formulas") {
  CHECK(thm1_sigma_lower(4, 1) == 512);
  CHECK(thm1_sigma_upper(4) == 1024);
  // affine h on V_3: L_h_even = 3, so the band collapses to N = 2^{n-2}
  CHECK(nl_within_thm1_band(4, 3, 4));
  CHECK_FALSE(nl_within_thm1_band(4, 3, 5));
  CHECK_FALSE(nl_within_thm1_band(4, 3, 3));
}

TEST_CASE("bounds report against a concrete analysis") {
  BooleanFunction e1 = function_of(parse_block_string(kExample1Blocks));
  GacReport g = analyze(e1);
  BoundsReport b = bounds_report(8, std::nullopt, std::nullopt, &g);
  CHECK(b.t == g.pc_vectors.size());
  CHECK(b.violations.empty());
  CHECK(b.nl_upper_sigma == 112);
  bool found_sung = false;
  for (const BoundLine& line : b.lines)
    if (line.name == "sung_sigma_lower") {
      found_sung = true;
      CHECK(line.satisfied.has_value());
      CHECK(*line.satisfied);
    }
  CHECK(found_sung);
}

TEST_CASE("verbatim sung bound can exceed the universal range at tiny n") {
  // parity on V_3 is balanced with t = 0; the even case evaluates to
  // 2^6 + 2^6 (2^3 + 2) = 704 above the 2^{3n} = 512 ceiling, so the
  // report flags it
  BooleanFunction f = inner_g(3, false);
  GacReport g = analyze(f);
  CHECK(g.sigma == 512);
  BoundsReport b = bounds_report(3, std::nullopt, std::nullopt, &g);
  REQUIRE(b.sung_lower.has_value());
  CHECK(b.sung_lower->case_no == 2);
  CHECK(b.sung_lower->num == 704);
  CHECK(b.violations == std::vector<std::string>{"sung_sigma_lower"});
}

TEST_CASE("pair counts recover the autocorrelation for balanced functions") {
  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    BooleanFunction f = rng.balanced_function(5);
    AutocorrVector ac = autocorrelation(f);
    for (uint64_t a = 0; a < f.size(); ++a)
      CHECK(8 * ac.pair_count(a) - 32 == ac.values[a]);
  }
}
