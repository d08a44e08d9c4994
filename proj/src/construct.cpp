#include "avalanche/construct.hpp"

#include <algorithm>
#include <string>

namespace avalanche {

BooleanFunction inner_g(int m, bool b) {
  uint32_t all = (m >= 32) ? ~uint32_t{0} : (uint32_t{1} << m) - 1;
  return affine_function(m, all, b);
}

SacConcatResult sac_concat(const BooleanFunction& h, bool b,
                           std::optional<uint64_t> a) {
  if (h.num_vars() < 2)
    throw construct_error("h must have at least 2 variables");
  BooleanFunction g = inner_g(h.num_vars(), b);
  BooleanFunction l = h;
  if (a) {
    if (*a == 0 || *a >= h.size() || hamming_weight(*a) % 2 == 0)
      throw construct_error("a must have odd weight");
    l = h.shifted(*a);
  }
  SacConcatResult out{concat(h, l ^ g), false};
  out.balanced = out.f.is_balanced();
  return out;
}

namespace {

// shared recursion for both granularities
std::vector<uint8_t> opposite_units(const std::vector<uint8_t>& x,
                                    uint8_t comp_mask) {
  std::vector<uint8_t> y(x.size());
  y[0] = x[0];
  for (size_t len = 1; len < x.size(); len *= 2) {
    bool repeats = std::equal(x.data(), x.data() + len, x.data() + len);
    for (size_t j = 0; j < len; ++j)
      y[len + j] = repeats ? uint8_t(y[j] ^ comp_mask) : y[j];
  }
  return y;
}

}  // namespace

BooleanFunction opposite(const BooleanFunction& g, Granularity gran) {
  if (g.num_vars() < 2 || !is_blockwise_affine(g))
    throw construct_error("opposite transform needs an affine input");
  if (gran == Granularity::Block) {
    BlockSequence bs = blockseq_of(g);
    std::vector<uint8_t> units(bs.blocks.size());
    for (size_t i = 0; i < units.size(); ++i) units[i] = bs.blocks[i].nibble();
    std::vector<uint8_t> out = opposite_units(units, 0xF);
    BlockSequence res;
    res.n = bs.n;
    res.blocks.reserve(out.size());
    for (uint8_t nib : out) res.blocks.push_back(BlockLetter::from_nibble(nib));
    return function_of(res);
  }
  std::vector<uint8_t> bits(g.size());
  for (uint64_t i = 0; i < g.size(); ++i) bits[i] = g.bit(i);
  return BooleanFunction::from_bits(g.num_vars(), opposite_units(bits, 1));
}

int theorem2_segment_vars(int n) {
  int k = n / 2;
  return (n % 2 == 0) ? k - 2 : k - 1;
}

std::vector<AffineSpec> theorem2_default_selection(int n) {
  if (n < 8 || (n % 2 == 1 && n < 9) || n > kMaxVars)
    throw construct_error("n must satisfy n=2k>=8 or n=2k+1>=9");
  const int k = n / 2;
  const int m = theorem2_segment_vars(n);
  const uint64_t per_letter = uint64_t{1} << (k - 4);
  // (c_{m-1}, c_m) per class, A then B then C then D
  const std::pair<int, int> classes[4] = {{1, 0}, {0, 1}, {1, 1}, {0, 0}};
  std::vector<AffineSpec> sel;
  sel.reserve(uint64_t{1} << (k - 2));
  for (auto [cprev, clast] : classes) {
    for (uint64_t free = 0; free < per_letter; ++free) {
      // free bits are c_1..c_{m-2} read as a binary number, c_1 high
      uint32_t coeffs = 0;
      for (int j = 0; j < m - 2; ++j)
        if ((free >> (m - 3 - j)) & 1) coeffs |= uint32_t{1} << j;
      if (cprev) coeffs |= uint32_t{1} << (m - 2);
      if (clast) coeffs |= uint32_t{1} << (m - 1);
      sel.push_back({coeffs, false});
    }
  }
  return sel;
}

BooleanFunction theorem2_family(int n, const std::vector<AffineSpec>* selection,
                                Granularity gran) {
  if (n < 8 || (n % 2 == 1 && n < 9) || n > kMaxVars)
    throw construct_error("n must satisfy n=2k>=8 or n=2k+1>=9");
  const int k = n / 2;
  const int m = theorem2_segment_vars(n);
  const uint64_t nseg = uint64_t{1} << (k - 2);

  std::vector<AffineSpec> sel =
      selection ? *selection : theorem2_default_selection(n);
  if (sel.size() != nseg)
    throw construct_error("selection must list exactly " +
                          std::to_string(nseg) + " functions");
  // condition (i): a quarter of the g_i based on each of A, B, C, D
  uint64_t per_base[4] = {0, 0, 0, 0};
  for (const AffineSpec& s : sel) {
    if (s.coeffs >> m)
      throw construct_error("selection coefficient index out of range");
    BlockLetter letter = base_block(m, s.coeffs, s.constant);
    ++per_base[static_cast<int>(letter.base)];
  }
  for (uint64_t count : per_base)
    if (count != nseg / 4)
      throw construct_error(
          "condition (i) violated: base letters not in equal quarters");
  // condition (ii): all g_i ^ g_j balanced, i.e. distinct linear parts
  for (size_t i = 0; i < sel.size(); ++i)
    for (size_t j = i + 1; j < sel.size(); ++j)
      if (sel[i].coeffs == sel[j].coeffs)
        throw construct_error(
            "condition (ii) violated: some g_i ^ g_j is unbalanced");

  std::vector<BooleanFunction> gs, hs;
  gs.reserve(nseg);
  hs.reserve(nseg);
  for (const AffineSpec& s : sel) {
    gs.push_back(affine_function(m, s.coeffs, s.constant));
    hs.push_back(opposite(gs.back(), gran));
  }

  // quarters of the table:
  //   q1 = g h g ~h   q2 = h ~g ~h ~g   q3 = ~h g h g   q4 = ~g ~h ~g h
  BooleanFunction f(n);
  uint64_t pos = 0;
  auto emit = [&](const BooleanFunction& u, bool comp) {
    for (uint64_t i = 0; i < u.size(); ++i, ++pos)
      if (u.bit(i) != comp) f.set_bit(pos, true);
  };
  for (uint64_t i = 0; i < nseg; ++i) {
    emit(gs[i], false); emit(hs[i], false); emit(gs[i], false); emit(hs[i], true);
  }
  for (uint64_t i = 0; i < nseg; ++i) {
    emit(hs[i], false); emit(gs[i], true); emit(hs[i], true); emit(gs[i], true);
  }
  for (uint64_t i = 0; i < nseg; ++i) {
    emit(hs[i], true); emit(gs[i], false); emit(hs[i], false); emit(gs[i], false);
  }
  for (uint64_t i = 0; i < nseg; ++i) {
    emit(gs[i], true); emit(hs[i], true); emit(gs[i], true); emit(hs[i], false);
  }
  return f;
}

}  // namespace avalanche
