#include "avalanche/transforms.hpp"

#include <cstdlib>
#include <stdexcept>

namespace avalanche {

int64_t WalshSpectrum::max_abs() const {
  int64_t m = 0;
  for (int64_t v : values)
    if (std::abs(v) > m) m = std::abs(v);
  return m;
}

void walsh_butterfly(std::vector<int64_t>& v) {
  const uint64_t n = v.size();
  for (uint64_t len = 1; len < n; len <<= 1) {
    for (uint64_t i = 0; i < n; i += len << 1) {
      for (uint64_t j = i; j < i + len; ++j) {
        int64_t a = v[j];
        int64_t b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const BooleanFunction& f) {
  WalshSpectrum s;
  s.n = f.num_vars();
  s.values.resize(f.size());
  for (uint64_t i = 0; i < f.size(); ++i) s.values[i] = f.sign(i);
  walsh_butterfly(s.values);
  return s;
}

AutocorrVector autocorrelation(const BooleanFunction& f) {
  WalshSpectrum s = walsh_transform(f);
  AutocorrVector ac;
  ac.n = s.n;
  ac.values = std::move(s.values);
  for (int64_t& v : ac.values) v *= v;
  walsh_butterfly(ac.values);
  const int64_t scale = int64_t{1} << ac.n;
  for (int64_t& v : ac.values) {
    if (v % scale != 0)
      throw std::logic_error("autocorrelation: inexact division");
    v /= scale;
  }
  return ac;
}

int64_t derivative_weight(const BooleanFunction& f, uint64_t alpha) {
  return static_cast<int64_t>(distance(f, f.shifted(alpha)));
}

}  // namespace avalanche
