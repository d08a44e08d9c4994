#include <doctest.h>

#include "avalanche/anf.hpp"
#include "avalanche/formats.hpp"
#include "avalanche/report.hpp"
#include "avalanche/verify.hpp"

using namespace avalanche;

TEST_CASE("vector rendering") {
  CHECK(vector_bits(192, 8) == "11000000");
  CHECK(vector_bits(140, 8) == "10001100");
  CHECK(vector_bits(76, 8) == "01001100");
  CHECK(vector_bits(0, 4) == "0000");
}

TEST_CASE("report serialization round-trips byte-identically") {
  BooleanFunction e1 = function_of(parse_block_string(kExample1Blocks));
  AnalysisReport r = analyze_function(e1, "blocks");
  std::string doc = serialize_report(r);
  CHECK(normalize_document(doc) == doc);
  CHECK(normalize_document(normalize_document(doc)) == doc);

  Anf a;
  a.n = 4;
  a.monomials = {0b0011, 0b1100};
  AnalysisReport bent = analyze_function(from_anf(a), "anf");
  std::string doc2 = serialize_report(bent);
  CHECK(normalize_document(doc2) == doc2);
}

TEST_CASE("report carries the three renderings and the indicators") {
  BooleanFunction e1 = function_of(parse_block_string(kExample1Blocks));
  AnalysisReport r = analyze_function(e1, "blocks");
  CHECK(r.n == 8);
  CHECK(r.hex == kExample1Hex);
  REQUIRE(r.anf.has_value());
  CHECK(*r.anf == kExample1Anf);
  REQUIRE(r.blocks.has_value());
  CHECK(*r.blocks == kExample1Blocks);
  CHECK(r.anf_terms == 10);
  CHECK(r.gac.nonlinearity == 112);
  CHECK(r.bounds.violations.empty());

  std::string doc = serialize_report(r);
  CHECK(doc.find("\"sigma\": \"262144\"") != std::string::npos);
  CHECK(doc.find("\"11000000\"") != std::string::npos);

  std::string table = render_table(r);
  CHECK(table.find("nonlinearity") != std::string::npos);
  CHECK(table.find("112") != std::string::npos);
}

TEST_CASE("reports are stable across repeated analysis") {
  Rng rng(61);
  BooleanFunction f = rng.function(6);
  CHECK(serialize_report(analyze_function(f, "hex")) ==
        serialize_report(analyze_function(f, "hex")));
}
