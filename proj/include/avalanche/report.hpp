#pragma once

#include <optional>
#include <string>

#include "avalanche/bounds.hpp"
#include "avalanche/boolean_function.hpp"
#include "avalanche/criteria.hpp"

namespace avalanche {

/// Full analyzer output for one function. Vector lists and the ANF render
/// are included up to fixed size caps; the counts are always present.
struct AnalysisReport {
  std::string source;  // hex | anf | blocks | construct:...
  int n = 0;
  GacReport gac;
  BoundsReport bounds;
  std::string hex;
  std::optional<std::string> anf;
  uint64_t anf_terms = 0;
  std::optional<std::string> blocks;
};

inline constexpr uint64_t kVectorListCap = 1024;
inline constexpr uint64_t kAnfTermCap = 4096;
inline constexpr int kBlockRenderMaxVars = 16;

AnalysisReport analyze_function(const BooleanFunction& f, std::string source);

/// Key order is fixed; serializing, parsing and re-serializing is
/// byte-identical.
std::string serialize_report(const AnalysisReport& r);
std::string render_table(const AnalysisReport& r);

/// parse + dump with the serializer's settings (round-trip checks).
std::string normalize_document(const std::string& text);

/// alpha rendered as the bit string x_1 .. x_n.
std::string vector_bits(uint64_t alpha, int n);

}  // namespace avalanche
