#include <doctest.h>

#include "avalanche/construct.hpp"
#include "avalanche/formats.hpp"
#include "avalanche/verify.hpp"

using namespace avalanche;

TEST_CASE("hex format round trip") {
  BooleanFunction c = parse_hex("n=2:6");
  CHECK(c.num_vars() == 2);
  CHECK(c == inner_g(2, false));
  CHECK(to_hex(c) == "n=2:6");

  BooleanFunction x1 = affine_function(2, 0b01, false);
  CHECK(to_hex(x1) == "n=2:3");

  Rng rng(53);
  for (int n : {2, 4, 7, 9}) {
    BooleanFunction f = rng.function(n);
    CHECK(parse_hex(to_hex(f)) == f);
  }
}

TEST_CASE("hex format errors") {
  CHECK_THROWS_AS(parse_hex("6"), parse_error);          // missing prefix
  CHECK_THROWS_AS(parse_hex("n=2;6"), parse_error);
  CHECK_THROWS_AS(parse_hex("n=x:6"), parse_error);
  CHECK_THROWS_AS(parse_hex("n=2:66"), parse_error);     // wrong digit count
  CHECK_THROWS_AS(parse_hex("n=3:6"), parse_error);
  CHECK_THROWS_AS(parse_hex("n=2:g"), parse_error);
  CHECK_THROWS_AS(parse_hex("n=1:1"), range_error);
  CHECK_THROWS_AS(parse_hex("n=25:00"), range_error);
  CHECK_THROWS_AS(parse_hex("n=30:00"), range_error);
}

TEST_CASE("anf text round trip") {
  Anf a = parse_anf_string("x1 + x7 + x1x5", 8);
  CHECK(a.monomials.size() == 3);
  CHECK(to_anf_string(a) == "x1 + x7 + x1x5");

  CHECK(parse_anf_string("x1 * x2 + 1", 4).monomials ==
        std::set<uint32_t>{0b11, 0});
  CHECK(parse_anf_string("1", 2).monomials == std::set<uint32_t>{0});
  CHECK(parse_anf_string("0", 2).monomials.empty());
  CHECK(to_anf_string(Anf{2, {}}) == "0");
  CHECK(to_anf_string(Anf{2, {0}}) == "1");

  // repeated monomials cancel
  CHECK(parse_anf_string("x1 + x1", 3).monomials.empty());
  CHECK(parse_anf_string("x1x2 + x2x1", 3).monomials.empty());

  // print order: degree first, then variable tuples
  Anf b = parse_anf_string("x5x6 + x1 + x2x5 + x7", 8);
  CHECK(to_anf_string(b) == "x1 + x7 + x2x5 + x5x6");
}

TEST_CASE("anf text errors") {
  CHECK_THROWS_AS(parse_anf_string("x0 + x1", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x9", 8), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1 ++ x2", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1 +", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("  ", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("y1", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("* x1", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1 *", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1 ** x2", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1 * + x2", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1 1", 4), parse_error);
  CHECK_THROWS_AS(parse_anf_string("x1", 30), range_error);
}

TEST_CASE("block string round trip") {
  BlockSequence bs = parse_block_string("C ~C");
  CHECK(bs.n == 3);
  CHECK(to_hex(function_of(bs)) == "n=3:69");
  CHECK(to_block_string(bs) == "C ~C");

  // whitespace and case are forgiving on input
  CHECK(function_of(parse_block_string(" c~C ")) == function_of(bs));

  BlockSequence one = parse_block_string("U");
  CHECK(one.n == 2);
  CHECK(one.blocks[0] == BlockLetter{BlockBase::U, false});

  Rng rng(59);
  for (int n : {2, 4, 6}) {
    BooleanFunction f = rng.function(n);
    CHECK(function_of(parse_block_string(to_block_string(blockseq_of(f)))) == f);
  }
}

TEST_CASE("block string errors") {
  CHECK_THROWS_AS(parse_block_string("E"), parse_error);
  CHECK_THROWS_AS(parse_block_string("~~A"), parse_error);
  CHECK_THROWS_AS(parse_block_string("A ~"), parse_error);
  CHECK_THROWS_AS(parse_block_string(""), parse_error);
  CHECK_THROWS_AS(parse_block_string("A B C"), parse_error);  // not a power of 2
}

TEST_CASE("reference fixtures parse to the same function") {
  BooleanFunction blocks = function_of(parse_block_string(kExample1Blocks));
  BooleanFunction anf = from_anf(parse_anf_string(kExample1Anf, 8));
  BooleanFunction hex = parse_hex(kExample1Hex);
  CHECK(blocks == anf);
  CHECK(blocks == hex);
  // canonical printing reproduces the fixture strings
  CHECK(to_block_string(blockseq_of(blocks)) == kExample1Blocks);
  CHECK(to_anf_string(to_anf(blocks)) == kExample1Anf);
}
