#include "avalanche/criteria.hpp"

#include <cstdlib>
#include <stdexcept>

#include "avalanche/anf.hpp"

namespace avalanche {

int64_t nonlinearity(const WalshSpectrum& s) {
  return (int64_t{1} << (s.n - 1)) - s.max_abs() / 2;
}

GacIndicators gac_indicators(const AutocorrVector& ac) {
  GacIndicators out;
  for (size_t a = 0; a < ac.values.size(); ++a) {
    int64_t v = ac.values[a];
    out.sigma += uint128(v < 0 ? -v : v) * uint128(v < 0 ? -v : v);
    if (a != 0 && std::abs(v) > out.delta_abs) out.delta_abs = std::abs(v);
  }
  return out;
}

PcProfile pc_profile(const AutocorrVector& ac) {
  PcProfile p;
  const uint64_t size = uint64_t{1} << ac.n;
  std::vector<uint8_t> weight_has_failure(ac.n + 1, 0);
  for (uint64_t a = 1; a < size; ++a) {
    if (ac.values[a] == 0) {
      p.pc_vectors.push_back(a);
    } else {
      p.non_pc_vectors.push_back(a);
      weight_has_failure[hamming_weight(a)] = 1;
    }
  }
  while (p.pc_degree < ac.n && !weight_has_failure[p.pc_degree + 1])
    ++p.pc_degree;
  p.sac = p.pc_degree >= 1;
  return p;
}

LinearStructures linear_structures(const AutocorrVector& ac) {
  LinearStructures out;
  const int64_t full = int64_t{1} << ac.n;
  const uint64_t size = uint64_t{1} << ac.n;
  for (uint64_t a = 1; a < size; ++a) {
    if (std::abs(ac.values[a]) == full) {
      out.vectors.push_back(a);
      if (hamming_weight(a) % 2 == 0) ++out.count_even_weight;
    }
  }
  return out;
}

namespace {

// number of 0s minus number of 1s in the XOR of two 4-bit blocks
int block_dot(uint8_t m, uint8_t nib) {
  return 4 - 2 * hamming_weight(static_cast<uint64_t>((m ^ nib) & 0xF));
}

uint8_t table_nibble(const BooleanFunction& f, uint64_t j) {
  // packed-word order; the pair sums only need XOR weights, so the bit
  // order inside the nibble is irrelevant as long as it is consistent
  return (f.words()[j >> 4] >> ((j & 15) * 4)) & 0xF;
}

}  // namespace

bool sac_check_blockwise(const BooleanFunction& f) {
  const int n = f.num_vars();
  if (n < 3) throw std::invalid_argument("pair-sum SAC check needs n >= 3");
  const uint64_t size = f.size();
  // scales 1 and 2: plain signed bit pairs
  for (int i = 1; i <= 2; ++i) {
    uint64_t chunk = uint64_t{1} << i;
    uint64_t half = chunk / 2;
    int64_t sum = 0;
    for (uint64_t base = 0; base < size; base += chunk)
      for (uint64_t j = 0; j < half; ++j)
        sum += int64_t{f.sign(base + j)} * f.sign(base + half + j);
    if (sum != 0) return false;
  }
  // scales >= 3: 4-bit blocks paired within each chunk
  const uint64_t nblocks = size / 4;
  for (int i = 3; i <= n; ++i) {
    uint64_t chunk_blocks = uint64_t{1} << (i - 2);
    uint64_t half_blocks = chunk_blocks / 2;
    int64_t sum = 0;
    for (uint64_t base = 0; base < nblocks; base += chunk_blocks)
      for (uint64_t j = 0; j < half_blocks; ++j)
        sum += block_dot(table_nibble(f, base + j),
                         table_nibble(f, base + half_blocks + j));
    if (sum != 0) return false;
  }
  return true;
}

GacReport analyze(const BooleanFunction& f) {
  GacReport r;
  r.n = f.num_vars();
  r.weight = f.weight();
  r.balanced = f.is_balanced();

  WalshSpectrum s = walsh_transform(f);
  r.nonlinearity = nonlinearity(s);

  uint128 sigma_w4 = 0;
  for (int64_t w : s.values) {
    uint128 sq = uint128(w < 0 ? -w : w) * uint128(w < 0 ? -w : w);
    sigma_w4 += sq * sq;
  }
  sigma_w4 >>= r.n;

  AutocorrVector ac = autocorrelation(f);
  GacIndicators ind = gac_indicators(ac);
  if (ind.sigma != sigma_w4)
    throw std::logic_error("sigma cross-check failed");
  r.sigma = ind.sigma;
  r.delta_abs = ind.delta_abs;

  PcProfile p = pc_profile(ac);
  r.sac = p.sac;
  r.pc_degree = p.pc_degree;
  r.pc_vectors = std::move(p.pc_vectors);
  r.non_pc_vectors = std::move(p.non_pc_vectors);

  LinearStructures ls = linear_structures(ac);
  r.linear_structures = std::move(ls.vectors);
  r.linear_structures_even_weight = ls.count_even_weight;

  r.algebraic_degree = anf_summary(f).degree;
  return r;
}

}  // namespace avalanche
