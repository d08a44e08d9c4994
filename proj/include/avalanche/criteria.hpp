#pragma once

#include <cstdint>
#include <vector>

#include "avalanche/boolean_function.hpp"
#include "avalanche/int128.hpp"
#include "avalanche/transforms.hpp"

namespace avalanche {

/// Everything the analyzer measures about one function.
struct GacReport {
  int n = 0;
  uint64_t weight = 0;
  bool balanced = false;
  int64_t nonlinearity = 0;
  uint128 sigma = 0;    // sum over all alpha (including 0) of Delta(alpha)^2
  int64_t delta_abs = 0;  // max over alpha != 0 of |Delta(alpha)|
  bool sac = false;
  int pc_degree = 0;
  std::vector<uint64_t> pc_vectors;       // nonzero alpha with Delta = 0
  std::vector<uint64_t> non_pc_vectors;   // nonzero alpha with Delta != 0
  std::vector<uint64_t> linear_structures;  // nonzero alpha with |Delta| = 2^n
  uint64_t linear_structures_even_weight = 0;
  int algebraic_degree = 0;
};

/// N_f = 2^{n-1} - max|W|/2.
int64_t nonlinearity(const WalshSpectrum& s);

struct GacIndicators {
  uint128 sigma = 0;
  int64_t delta_abs = 0;
};
GacIndicators gac_indicators(const AutocorrVector& ac);

struct PcProfile {
  std::vector<uint64_t> pc_vectors;
  std::vector<uint64_t> non_pc_vectors;
  int pc_degree = 0;
  bool sac = false;
};
PcProfile pc_profile(const AutocorrVector& ac);

struct LinearStructures {
  std::vector<uint64_t> vectors;
  uint64_t count_even_weight = 0;
};
LinearStructures linear_structures(const AutocorrVector& ac);

/// Pair-sum SAC characterization evaluated straight off the table: plain
/// bit pairs for the two finest scales, 4-bit block sums above that. An
/// oracle for the autocorrelation route, never computed through it.
bool sac_check_blockwise(const BooleanFunction& f);  // needs n >= 3

/// Full report; sigma is cross-computed from Delta^2 and from W^4 / 2^n and
/// the two must agree.
GacReport analyze(const BooleanFunction& f);

}  // namespace avalanche
