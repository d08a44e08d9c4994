#include "avalanche/oracles.hpp"

#include <bit>

namespace avalanche {

std::vector<int64_t> walsh_by_definition(const BooleanFunction& f) {
  const uint64_t size = f.size();
  std::vector<int64_t> out(size);
  for (uint64_t w = 0; w < size; ++w) {
    int64_t sum = 0;
    for (uint64_t x = 0; x < size; ++x) {
      int s = (std::popcount(w & x) & 1) ? -f.sign(x) : f.sign(x);
      sum += s;
    }
    out[w] = sum;
  }
  return out;
}

std::vector<int64_t> autocorrelation_by_definition(const BooleanFunction& f) {
  const uint64_t size = f.size();
  std::vector<int64_t> out(size);
  for (uint64_t a = 0; a < size; ++a) {
    int64_t sum = 0;
    for (uint64_t x = 0; x < size; ++x)
      sum += int64_t{f.sign(x)} * f.sign(x ^ a);
    out[a] = sum;
  }
  return out;
}

int64_t nonlinearity_by_affine_distance(const BooleanFunction& f) {
  const uint64_t size = f.size();
  int64_t best = static_cast<int64_t>(size);
  for (uint64_t coeffs = 0; coeffs < size; ++coeffs) {
    for (int c = 0; c < 2; ++c) {
      int64_t d = 0;
      for (uint64_t x = 0; x < size; ++x) {
        int lin = (std::popcount(coeffs & x) & 1) ^ c;
        if (lin != static_cast<int>(f.bit(x))) ++d;
      }
      if (d < best) best = d;
    }
  }
  return best;
}

bool sac_by_unit_derivatives(const BooleanFunction& f) {
  const uint64_t size = f.size();
  const int64_t target = static_cast<int64_t>(size / 2);
  for (int i = 1; i <= f.num_vars(); ++i) {
    uint64_t e = basis_vector(f.num_vars(), i);
    int64_t flips = 0;
    for (uint64_t x = 0; x < size; ++x)
      if (f.bit(x) != f.bit(x ^ e)) ++flips;
    if (flips != target) return false;
  }
  return true;
}

}  // namespace avalanche
