#include "avalanche/blocks.hpp"

#include <array>
#include <stdexcept>

#include "avalanche/anf.hpp"

namespace avalanche {

namespace {

constexpr uint8_t kPattern[8] = {
    0b0011,  // A
    0b0101,  // B
    0b0110,  // C
    0b0000,  // D
    0b1000,  // U
    0b0001,  // V
    0b0100,  // X
    0b0010,  // Y
};

constexpr char kSymbol[8] = {'A', 'B', 'C', 'D', 'U', 'V', 'X', 'Y'};

// nibble value -> (base, complemented)
constexpr std::array<BlockLetter, 16> make_decode() {
  std::array<BlockLetter, 16> t{};
  for (int b = 0; b < 8; ++b) {
    t[kPattern[b]] = {static_cast<BlockBase>(b), false};
    t[kPattern[b] ^ 0xF] = {static_cast<BlockBase>(b), true};
  }
  return t;
}

constexpr std::array<BlockLetter, 16> kDecode = make_decode();

// reverse the bit order of a nibble (table order <-> packed-word order)
constexpr uint8_t kRev4[16] = {0x0, 0x8, 0x4, 0xc, 0x2, 0xa, 0x6, 0xe,
                               0x1, 0x9, 0x5, 0xd, 0x3, 0xb, 0x7, 0xf};

}  // namespace

uint8_t BlockLetter::nibble() const {
  uint8_t p = kPattern[static_cast<int>(base)];
  return complemented ? p ^ 0xF : p;
}

BlockLetter BlockLetter::from_nibble(uint8_t nib) { return kDecode[nib & 0xF]; }

char BlockLetter::symbol() const { return kSymbol[static_cast<int>(base)]; }

BlockSequence blockseq_of(const BooleanFunction& f) {
  if (f.num_vars() < 2)
    throw std::invalid_argument("block rendering needs n >= 2");
  BlockSequence bs;
  bs.n = f.num_vars();
  bs.blocks.reserve(f.size() / 4);
  for (uint64_t j = 0; j < f.size() / 4; ++j) {
    uint8_t packed = (f.words()[j >> 4] >> ((j & 15) * 4)) & 0xF;
    bs.blocks.push_back(BlockLetter::from_nibble(kRev4[packed]));
  }
  return bs;
}

BooleanFunction function_of(const BlockSequence& bs) {
  if (bs.n < 2 || bs.blocks.size() != uint64_t{1} << (bs.n - 2))
    throw std::invalid_argument("block count must be 2^{n-2}");
  BooleanFunction f(bs.n);
  std::vector<uint64_t> w(f.words().size(), 0);
  for (uint64_t j = 0; j < bs.blocks.size(); ++j)
    w[j >> 4] |= uint64_t{kRev4[bs.blocks[j].nibble()]} << ((j & 15) * 4);
  return BooleanFunction::from_words(bs.n, std::move(w));
}

bool is_blockwise_affine(const BooleanFunction& f) {
  if (f.num_vars() < 2)
    throw std::invalid_argument("blockwise test needs n >= 2");
  for (int s = 1; s < f.num_vars(); ++s) {
    uint64_t window = uint64_t{1} << (s + 1);
    uint64_t half = window / 2;
    for (uint64_t off = 0; off < f.size(); off += window) {
      bool eq = true, comp = true;
      for (uint64_t j = 0; j < half; ++j) {
        if (f.bit(off + j) == f.bit(off + half + j))
          comp = false;
        else
          eq = false;
      }
      if (!eq && !comp) return false;
    }
  }
  return to_anf(f).degree() <= 1;
}

BlockLetter base_block(int m, uint32_t coeffs, bool constant) {
  if (m < 2) throw std::invalid_argument("base letter needs m >= 2");
  if (coeffs >> m) throw std::invalid_argument("coefficient index out of range");
  bool clast = coeffs & (uint32_t{1} << (m - 1));
  bool cprev = coeffs & (uint32_t{1} << (m - 2));
  BlockBase base;
  if (cprev && !clast)
    base = BlockBase::A;
  else if (!cprev && clast)
    base = BlockBase::B;
  else if (cprev && clast)
    base = BlockBase::C;
  else
    base = BlockBase::D;
  return {base, constant};
}

bool based_on_single_letter(const BlockSequence& bs) {
  for (const BlockLetter& b : bs.blocks)
    if (b.base != bs.blocks.front().base) return false;
  return true;
}

}  // namespace avalanche
