#pragma once

#include <cstdint>
#include <vector>

#include "avalanche/boolean_function.hpp"

namespace avalanche {

/// Signed correlations W(w) = sum_x (-1)^{f(x) ^ w.x}, indexed like the
/// truth table (x_1 = MSB). Parseval: sum W^2 = 2^{2n}.
struct WalshSpectrum {
  int n = 0;
  std::vector<int64_t> values;

  int64_t max_abs() const;
};

/// Delta(a) = sum_x (-1)^{f(x)} (-1)^{f(x^a)}. Delta(0) = 2^n always.
struct AutocorrVector {
  int n = 0;
  std::vector<int64_t> values;

  /// S(a) = wt(x -> f(x)^f(x^a)) = (2^n - Delta(a)) / 2.
  int64_t derivative_weight(uint64_t alpha) const {
    return ((int64_t{1} << n) - values[alpha]) / 2;
  }
  /// b(a) = (Delta(a) + 2^n) / 8; integral whenever wt(f) is even.
  int64_t pair_count(uint64_t alpha) const {
    return (values[alpha] + (int64_t{1} << n)) / 8;
  }
};

/// In-place +/- butterfly, the core of both transforms.
void walsh_butterfly(std::vector<int64_t>& v);

WalshSpectrum walsh_transform(const BooleanFunction& f);

/// Via spectrum, square, inverse butterfly; exact integers throughout.
AutocorrVector autocorrelation(const BooleanFunction& f);

/// S(alpha) computed directly as wt(f ^ f(.^alpha)).
int64_t derivative_weight(const BooleanFunction& f, uint64_t alpha);

}  // namespace avalanche
