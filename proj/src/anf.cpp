#include "avalanche/anf.hpp"

#include <stdexcept>

namespace avalanche {

namespace {

constexpr uint64_t kClear[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

// XOR each lower coset half onto the upper one, per index bit; self-inverse.
void moebius_inplace(std::vector<uint64_t>& w, int n) {
  for (int s = 0; s < n && s < 6; ++s)
    for (uint64_t& word : w) word ^= (word & kClear[s]) << (1u << s);
  for (int s = 6; s < n; ++s) {
    uint64_t stride = uint64_t{1} << (s - 6);
    for (uint64_t base = 0; base < w.size(); base += 2 * stride)
      for (uint64_t k = 0; k < stride; ++k)
        w[base + stride + k] ^= w[base + k];
  }
}

}  // namespace

Anf to_anf(const BooleanFunction& f) {
  const int n = f.num_vars();
  std::vector<uint64_t> w = f.words();
  moebius_inplace(w, n);
  Anf a;
  a.n = n;
  for (uint64_t i = 0; i < f.size(); ++i)
    if ((w[i >> 6] >> (i & 63)) & 1)
      a.monomials.insert(reverse_mask(static_cast<uint32_t>(i), n));
  return a;
}

AnfSummary anf_summary(const BooleanFunction& f) {
  std::vector<uint64_t> w = f.words();
  moebius_inplace(w, f.num_vars());
  AnfSummary s;
  // monomial weight equals the popcount of the coefficient index, which the
  // variable-order reversal preserves
  for (uint64_t i = 0; i < f.size(); ++i) {
    if ((w[i >> 6] >> (i & 63)) & 1) {
      ++s.terms;
      int d = hamming_weight(i);
      if (d > s.degree) s.degree = d;
    }
  }
  return s;
}

BooleanFunction from_anf(const Anf& a) {
  BooleanFunction coeffs(a.n);
  for (uint32_t m : a.monomials) {
    if (m >> a.n) throw std::invalid_argument("variable index out of range");
    coeffs.set_bit(reverse_mask(m, a.n), true);
  }
  std::vector<uint64_t> w = coeffs.words();
  moebius_inplace(w, a.n);
  return BooleanFunction::from_words(a.n, std::move(w));
}

}  // namespace avalanche
