#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "avalanche/blocks.hpp"
#include "avalanche/boolean_function.hpp"

namespace avalanche {

/// A construction precondition was violated.
struct construct_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// g(x) = x_1 ^ ... ^ x_m ^ b; satisfies g(x) = ~g(x^a) for odd-weight a.
BooleanFunction inner_g(int m, bool b);

struct SacConcatResult {
  BooleanFunction f;
  /// Not guaranteed by the construction; callers that need a balanced
  /// output must check this flag.
  bool balanced = false;
};

/// (h | h^g), or (h | l^g) with l(x) = h(x^a) when an odd-weight shift a is
/// given. The output always satisfies the SAC.
SacConcatResult sac_concat(const BooleanFunction& h, bool b,
                           std::optional<uint64_t> a = {});

enum class Granularity { Block, Bit };

/// The "opposite" involution on affine functions: copy the first unit, then
/// complement each dyadic prefix exactly where the source repeats it.
/// Units are 4-bit blocks or single bits.
BooleanFunction opposite(const BooleanFunction& g,
                         Granularity gran = Granularity::Block);

/// One segment function g_i: coefficient mask (bit j-1 <-> c_j) + constant.
struct AffineSpec {
  uint32_t coeffs = 0;
  bool constant = false;
};

/// The default g_i: linear functions with constant 0, a quarter per base
/// letter, free coefficients enumerated in increasing binary order within
/// each (c_{m-1}, c_m) class, classes ordered A, B, C, D.
std::vector<AffineSpec> theorem2_default_selection(int n);

/// Segment width m for the family: k-2 when n = 2k, k-1 when n = 2k+1.
int theorem2_segment_vars(int n);

/// Balanced SAC function on n = 2k >= 8 or n = 2k+1 >= 9 variables built
/// from 2^{k-1} segments over the g_i and their opposites.
BooleanFunction theorem2_family(int n,
                                const std::vector<AffineSpec>* selection = nullptr,
                                Granularity gran = Granularity::Block);

}  // namespace avalanche
