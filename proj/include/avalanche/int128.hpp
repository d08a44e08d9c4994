#pragma once

#include <cstdint>
#include <string>

namespace avalanche {

// Sum-of-squares indicators reach 2^{3n} (n <= 24), beyond uint64_t.
using uint128 = unsigned __int128;

inline uint128 pow2_128(int e) { return uint128{1} << e; }

inline std::string to_string(uint128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = sizeof(buf);
  while (v != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, sizeof(buf) - pos);
}

}  // namespace avalanche
