#include <doctest.h>

#include "avalanche/blocks.hpp"
#include "avalanche/construct.hpp"
#include "avalanche/criteria.hpp"
#include "avalanche/formats.hpp"
#include "avalanche/verify.hpp"

using namespace avalanche;

namespace {

BooleanFunction from_string(int n, const char* bits01) {
  std::vector<uint8_t> bits;
  for (const char* p = bits01; *p; ++p) bits.push_back(*p == '1');
  return BooleanFunction::from_bits(n, bits);
}

}  // namespace

TEST_CASE("block sequence of small functions") {
  BlockSequence a = blockseq_of(affine_function(2, 0b01, false));  // x1
  REQUIRE(a.blocks.size() == 1);
  CHECK(a.blocks[0] == BlockLetter{BlockBase::A, false});

  BlockSequence cc = blockseq_of(inner_g(3, false));  // 01101001
  REQUIRE(cc.blocks.size() == 2);
  CHECK(cc.blocks[0] == BlockLetter{BlockBase::C, false});
  CHECK(cc.blocks[1] == BlockLetter{BlockBase::C, true});

  CHECK_THROWS_AS(blockseq_of(BooleanFunction(1)), std::invalid_argument);
}

TEST_CASE("every nibble decodes to exactly one letter") {
  for (int nib = 0; nib < 16; ++nib)
    CHECK(BlockLetter::from_nibble(static_cast<uint8_t>(nib)).nibble() == nib);
}

TEST_CASE("block sequence round trip") {
  Rng rng(41);
  for (int n : {2, 3, 5, 7}) {
    BooleanFunction f = rng.function(n);
    CHECK(function_of(blockseq_of(f)) == f);
  }
}

TEST_CASE("blockwise affine test") {
  for (uint32_t coeffs = 0; coeffs < 16; ++coeffs)
    for (int c = 0; c < 2; ++c)
      CHECK(is_blockwise_affine(affine_function(4, coeffs, c != 0)));

  CHECK_FALSE(is_blockwise_affine(from_string(2, "0001")));  // degree 2
  CHECK(is_blockwise_affine(from_string(3, "01101001")));    // 1.x
  CHECK_FALSE(is_blockwise_affine(from_string(3, "01101000")));
}

TEST_CASE("inner parity function") {
  CHECK(inner_g(2, false) == from_string(2, "0110"));
  CHECK(inner_g(3, true) == from_string(3, "10010110"));

  // g(x) = ~g(x ^ a) for every odd-weight a, m = 4
  BooleanFunction g = inner_g(4, false);
  for (uint64_t a = 1; a < 16; ++a) {
    if (hamming_weight(a) % 2 == 0) continue;
    CHECK(g.shifted(a) == g.complemented());
  }
}

TEST_CASE("sac concatenation fixture") {
  BooleanFunction h = affine_function(3, 0b001, false);  // x1 on V_3
  SacConcatResult r = sac_concat(h, false);
  CHECK(r.f == from_string(4, "0000111101100110"));
  CHECK(r.balanced);
  CHECK(sac_check_blockwise(r.f));
  GacReport g = analyze(r.f);
  CHECK(g.sigma == 1024);
  CHECK(g.nonlinearity == 4);
  CHECK(g.delta_abs == 16);
}

TEST_CASE("sac concatenation flags unbalanced outputs") {
  SacConcatResult r = sac_concat(BooleanFunction(2), false);  // h = 0
  CHECK(r.f.weight() == 2);
  CHECK_FALSE(r.balanced);
}

TEST_CASE("sac concatenation with an odd shift") {
  Anf a;
  a.n = 3;
  a.monomials = {0b011};
  BooleanFunction h = from_anf(a);  // x1x2
  SacConcatResult r = sac_concat(h, true, basis_vector(3, 1));
  CHECK(pc_profile(autocorrelation(r.f)).sac);

  CHECK_THROWS_AS(sac_concat(h, false, uint64_t{0b101}), construct_error);
  CHECK_THROWS_AS(sac_concat(h, false, uint64_t{0}), construct_error);
}

TEST_CASE("sac concatenation always lands on SAC") {
  Rng rng(43);
  for (int n = 3; n <= 8; ++n)
    for (int rep = 0; rep < 25; ++rep) {
      BooleanFunction h = rng.function(n);
      SacConcatResult r = sac_concat(h, rng.flip());
      CHECK(sac_check_blockwise(r.f));
      CHECK(pc_profile(autocorrelation(r.f)).sac);
    }
}

TEST_CASE("base letter from the last two coefficients") {
  CHECK(base_block(3, 0b010, false) == BlockLetter{BlockBase::A, false});
  CHECK(base_block(3, 0, true) == BlockLetter{BlockBase::D, true});
  CHECK(base_block(2, 0b11, false) == BlockLetter{BlockBase::C, false});

  // agrees with the rendered blocks on every affine function up to n = 6
  for (int m = 2; m <= 6; ++m)
    for (uint32_t coeffs = 0; coeffs < (uint32_t{1} << m); ++coeffs)
      for (int c = 0; c < 2; ++c) {
        BlockLetter expect = base_block(m, coeffs, c != 0);
        BlockSequence bs = blockseq_of(affine_function(m, coeffs, c != 0));
        CHECK(based_on_single_letter(bs));
        CHECK(bs.blocks.front().base == expect.base);
        CHECK(bs.blocks.front().complemented == expect.complemented);
      }
}

TEST_CASE("opposite transform on single blocks") {
  for (uint32_t coeffs = 0; coeffs < 4; ++coeffs)
    for (int c = 0; c < 2; ++c) {
      BooleanFunction g = affine_function(2, coeffs, c != 0);
      CHECK(opposite(g, Granularity::Block) == g);
    }
}

TEST_CASE("opposite transform flips the copy pattern") {
  BooleanFunction a_abar = from_string(3, "00111100");  // [A, ~A]
  BooleanFunction a_a = from_string(3, "00110011");     // [A, A]
  CHECK(opposite(a_abar) == a_a);
  CHECK(opposite(a_a) == a_abar);
}

TEST_CASE("opposite commutes with complement and is an involution") {
  Rng rng(47);
  for (int n = 2; n <= 10; ++n)
    for (int rep = 0; rep < 100; ++rep) {
      BooleanFunction g = rng.affine(n);
      CHECK(opposite(g.complemented()) == opposite(g).complemented());
      CHECK(opposite(opposite(g)) == g);
    }
  // exhaustive at small n, both granularities
  for (int n = 2; n <= 5; ++n)
    for (uint32_t coeffs = 0; coeffs < (uint32_t{1} << n); ++coeffs)
      for (int c = 0; c < 2; ++c) {
        BooleanFunction g = affine_function(n, coeffs, c != 0);
        BooleanFunction ob = opposite(g, Granularity::Block);
        CHECK(opposite(ob, Granularity::Block) == g);
        CHECK(blockseq_of(ob).blocks.front().base ==
              blockseq_of(g).blocks.front().base);
        BooleanFunction obit = opposite(g, Granularity::Bit);
        CHECK(opposite(obit, Granularity::Bit) == g);
      }
}

TEST_CASE("bit-granularity opposite maps A to B and C to D") {
  BooleanFunction a = from_string(2, "0011");
  BooleanFunction b = from_string(2, "0101");
  BooleanFunction c = from_string(2, "0110");
  BooleanFunction d = from_string(2, "0000");
  CHECK(opposite(a, Granularity::Bit) == b);
  CHECK(opposite(b, Granularity::Bit) == a);
  CHECK(opposite(c, Granularity::Bit) == d);
  CHECK(opposite(d, Granularity::Bit) == c);
}

TEST_CASE("opposite rejects non-affine input") {
  CHECK_THROWS_AS(opposite(from_string(2, "0001")), construct_error);
}

TEST_CASE("theorem 2 default selection") {
  std::vector<AffineSpec> sel = theorem2_default_selection(10);
  REQUIRE(sel.size() == 8);
  // A-class first: x2 then x1^x2, on m = 3 variables
  CHECK(sel[0].coeffs == 0b010);
  CHECK(sel[1].coeffs == 0b011);
  CHECK(sel[2].coeffs == 0b100);  // B-class: x3
  for (const AffineSpec& s : sel) CHECK_FALSE(s.constant);
}

TEST_CASE("theorem 2 preconditions") {
  CHECK_THROWS_WITH_AS(theorem2_family(7),
                       "n must satisfy n=2k>=8 or n=2k+1>=9", construct_error);
  CHECK_THROWS_AS(theorem2_family(6), construct_error);

  // wrong count
  std::vector<AffineSpec> two = {{0b01, false}, {0b10, false}};
  CHECK_THROWS_AS(theorem2_family(8, &two), construct_error);

  // condition (i): two functions based on A, none on B
  std::vector<AffineSpec> bad_quarter = {
      {0b01, false}, {0b01, true}, {0b11, false}, {0b00, false}};
  CHECK_THROWS_WITH_AS(theorem2_family(8, &bad_quarter),
                       "condition (i) violated: base letters not in equal quarters",
                       construct_error);

  // a duplicated class empties another; the quarter check catches it first
  std::vector<AffineSpec> bad_pair = {
      {0b01, false}, {0b10, false}, {0b11, false}, {0b11, true}};
  CHECK_THROWS_WITH_AS(theorem2_family(8, &bad_pair),
                       "condition (i) violated: base letters not in equal quarters",
                       construct_error);
}

TEST_CASE("theorem 2 duplicate linear parts within a letter class") {
  // quarters hold, but the two A-class entries share a linear part
  std::vector<AffineSpec> sel = {
      {0b0010, false}, {0b0010, true},   // A class, same coefficients
      {0b0100, false}, {0b0101, false},  // B
      {0b0110, false}, {0b0111, false},  // C
      {0b0000, false}, {0b0001, false},  // D
  };
  CHECK_THROWS_WITH_AS(theorem2_family(10, &sel),
                       "condition (ii) violated: some g_i ^ g_j is unbalanced",
                       construct_error);
}

TEST_CASE("theorem 2 default equals the reference listing at n = 8") {
  BooleanFunction f = theorem2_family(8);
  CHECK(f == function_of(parse_block_string(kExample1Blocks)));
}

TEST_CASE("theorem 2 accepts a permuted valid selection") {
  std::vector<AffineSpec> sel = {
      {0b10, false}, {0b01, false}, {0b00, false}, {0b11, false}};
  BooleanFunction f = theorem2_family(8, &sel);
  GacReport g = analyze(f);
  CHECK(g.balanced);
  CHECK(g.sac);
  CHECK(g.sigma == pow2_128(18));
  CHECK(g.nonlinearity == 112);
}
