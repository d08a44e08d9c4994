#include "avalanche/boolean_function.hpp"

#include <bit>
#include <stdexcept>

namespace avalanche {

namespace {

// masks selecting the positions where index bit s is 0 / 1 (s < 6)
constexpr uint64_t kLow[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

uint64_t word_count(int n) {
  uint64_t bits = uint64_t{1} << n;
  return bits <= 64 ? 1 : bits / 64;
}

uint64_t tail_mask(int n) {
  return n >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << n)) - 1;
}

void check_vars(int n) {
  if (n < kMinVars || n > kMaxVars)
    throw std::invalid_argument("variable count out of range 1..24");
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_vars(n);
  words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_bits(int n, std::span<const uint8_t> bits) {
  BooleanFunction f(n);
  if (bits.size() != f.size())
    throw std::invalid_argument("bit vector length must be 2^n");
  for (uint64_t i = 0; i < bits.size(); ++i)
    if (bits[i]) f.set_bit(i, true);
  return f;
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<uint64_t> words) {
  BooleanFunction f(n);
  if (words.size() != f.words_.size())
    throw std::invalid_argument("word vector length must cover 2^n bits");
  f.words_ = std::move(words);
  f.words_.back() &= tail_mask(n);
  return f;
}

void BooleanFunction::set_bit(uint64_t i, bool v) {
  uint64_t m = uint64_t{1} << (i & 63);
  if (v)
    words_[i >> 6] |= m;
  else
    words_[i >> 6] &= ~m;
}

uint64_t BooleanFunction::weight() const {
  uint64_t w = 0;
  for (uint64_t word : words_) w += std::popcount(word);
  return w;
}

BooleanFunction BooleanFunction::complemented() const {
  BooleanFunction out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.words_.back() &= tail_mask(n_);
  return out;
}

BooleanFunction BooleanFunction::shifted(uint64_t a) const {
  if (a >= size()) throw std::invalid_argument("shift vector outside V_n");
  BooleanFunction out = *this;
  for (int s = 0; s < n_ && s < 6; ++s) {
    if (!((a >> s) & 1)) continue;
    int sh = 1 << s;
    for (uint64_t& w : out.words_)
      w = ((w & kLow[s]) << sh) | ((w >> sh) & kLow[s]);
  }
  for (int s = 6; s < n_; ++s) {
    if (!((a >> s) & 1)) continue;
    uint64_t stride = uint64_t{1} << (s - 6);
    for (uint64_t base = 0; base < out.words_.size(); base += 2 * stride)
      for (uint64_t k = 0; k < stride; ++k)
        std::swap(out.words_[base + k], out.words_[base + stride + k]);
  }
  return out;
}

BooleanFunction BooleanFunction::half(int which) const {
  if (n_ < 2) throw std::invalid_argument("half() needs n >= 2");
  BooleanFunction out(n_ - 1);
  uint64_t offset = which ? size() / 2 : 0;
  for (uint64_t i = 0; i < out.size(); ++i) out.set_bit(i, bit(offset + i));
  return out;
}

BooleanFunction operator^(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.num_vars() != g.num_vars())
    throw std::invalid_argument("dimension mismatch");
  BooleanFunction out = f;
  for (size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= g.words_[i];
  return out;
}

uint64_t distance(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.num_vars() != g.num_vars())
    throw std::invalid_argument("dimension mismatch");
  uint64_t d = 0;
  for (size_t i = 0; i < f.words().size(); ++i)
    d += std::popcount(f.words()[i] ^ g.words()[i]);
  return d;
}

BooleanFunction concat(const BooleanFunction& h1, const BooleanFunction& h2) {
  if (h1.num_vars() != h2.num_vars())
    throw std::invalid_argument("dimension mismatch");
  if (h1.num_vars() >= kMaxVars)
    throw std::invalid_argument("concatenation would exceed 24 variables");
  BooleanFunction out(h1.num_vars() + 1);
  uint64_t halfsize = h1.size();
  for (uint64_t i = 0; i < halfsize; ++i) {
    if (h1.bit(i)) out.set_bit(i, true);
    if (h2.bit(i)) out.set_bit(halfsize + i, true);
  }
  return out;
}

BooleanFunction affine_function(int m, uint32_t coeffs, bool constant) {
  BooleanFunction f(m);
  if (coeffs >> m) throw std::invalid_argument("coefficient index out of range");
  uint64_t index_mask = reverse_mask(coeffs, m);
  for (uint64_t i = 0; i < f.size(); ++i) {
    int v = (std::popcount(i & index_mask) & 1) ^ (constant ? 1 : 0);
    if (v) f.set_bit(i, true);
  }
  return f;
}

}  // namespace avalanche
