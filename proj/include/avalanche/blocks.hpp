#pragma once

#include <cstdint>
#include <vector>

#include "avalanche/boolean_function.hpp"

namespace avalanche {

/// The eight 4-bit base blocks. A..D is the alphabet every affine function
/// decomposes over; U..Y covers the remaining patterns, so every 4-bit chunk
/// of any truth table maps to exactly one letter, complemented or not.
enum class BlockBase : uint8_t { A, B, C, D, U, V, X, Y };

struct BlockLetter {
  BlockBase base = BlockBase::D;
  bool complemented = false;

  /// 4-bit pattern, first table bit in the high position:
  /// A=0011 B=0101 C=0110 D=0000 U=1000 V=0001 X=0100 Y=0010.
  uint8_t nibble() const;
  static BlockLetter from_nibble(uint8_t nib);
  char symbol() const;

  bool operator==(const BlockLetter&) const = default;
};

/// A truth table rendered as 2^{n-2} blocks.
struct BlockSequence {
  int n = 0;
  std::vector<BlockLetter> blocks;

  bool operator==(const BlockSequence&) const = default;
};

BlockSequence blockseq_of(const BooleanFunction& f);  // needs n >= 2
BooleanFunction function_of(const BlockSequence& bs);

/// True iff every dyadic window repeats or complements its first half at
/// every scale, and the function has algebraic degree <= 1.
bool is_blockwise_affine(const BooleanFunction& f);

/// Base letter of the affine function with the given coefficients on m >= 2
/// variables: (c_{m-1}, c_m) = (1,0) -> A, (0,1) -> B, (1,1) -> C,
/// (0,0) -> D; complemented iff the constant term is 1.
BlockLetter base_block(int m, uint32_t coeffs, bool constant);

/// True iff all blocks share one base letter (the affine shape).
bool based_on_single_letter(const BlockSequence& bs);

}  // namespace avalanche
