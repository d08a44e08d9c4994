#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace avalanche {

inline constexpr int kMinVars = 1;
inline constexpr int kMaxVars = 24;

/// Truth table of a Boolean function on n variables, one bit per input.
///
/// Table bit i holds f at the input whose n-bit expansion is i with x_1 as
/// the most significant bit. Consequently the first half of the table is the
/// x_1 = 0 sub-function, which is what makes (h1|h2) concatenation line up
/// with the half-split used everywhere else in this library.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  explicit BooleanFunction(int n);
  static BooleanFunction from_bits(int n, std::span<const uint8_t> bits);
  static BooleanFunction from_words(int n, std::vector<uint64_t> words);

  int num_vars() const { return n_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  bool bit(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set_bit(uint64_t i, bool v);
  int sign(uint64_t i) const { return bit(i) ? -1 : 1; }  // (-1)^f(i)

  uint64_t weight() const;
  bool is_balanced() const { return weight() == size() / 2; }

  BooleanFunction complemented() const;
  /// x -> f(x ^ a)
  BooleanFunction shifted(uint64_t a) const;
  /// which = 0: the x_1 = 0 slice; which = 1: the x_1 = 1 slice.
  BooleanFunction half(int which) const;

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const BooleanFunction&) const = default;

  friend BooleanFunction operator^(const BooleanFunction& f,
                                   const BooleanFunction& g);

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

uint64_t distance(const BooleanFunction& f, const BooleanFunction& g);

/// (h1|h2): h1 occupies the x_1 = 0 half of the result.
BooleanFunction concat(const BooleanFunction& h1, const BooleanFunction& h2);

/// f(x) = c_1 x_1 ^ ... ^ c_m x_m ^ c, coefficients as a mask with bit j-1
/// standing for c_j.
BooleanFunction affine_function(int m, uint32_t coeffs, bool constant);

/// Basis vector e_i as a table index mask (1-based i, x_1 = MSB).
inline uint64_t basis_vector(int n, int i) { return uint64_t{1} << (n - i); }

inline int hamming_weight(uint64_t v) { return std::popcount(v); }

/// Variable-space mask (bit j-1 <-> x_j) to table-index mask and back;
/// the map is its own inverse.
inline uint32_t reverse_mask(uint32_t mask, int n) {
  uint32_t out = 0;
  for (int p = 0; p < n; ++p)
    if ((mask >> p) & 1) out |= uint32_t{1} << (n - 1 - p);
  return out;
}

}  // namespace avalanche
