#pragma once

#include <cstdint>
#include <set>

#include "avalanche/boolean_function.hpp"

namespace avalanche {

/// Algebraic normal form: an XOR of monomials. Each monomial is a mask with
/// bit j-1 standing for x_j; the empty mask is the constant-1 term. An empty
/// set is the zero function.
struct Anf {
  int n = 0;
  std::set<uint32_t> monomials;

  int degree() const {
    int d = 0;
    for (uint32_t m : monomials)
      if (hamming_weight(m) > d) d = hamming_weight(m);
    return d;
  }

  bool operator==(const Anf&) const = default;
};

/// Moebius transform of the truth table; inverse of from_anf.
Anf to_anf(const BooleanFunction& f);

BooleanFunction from_anf(const Anf& a);

/// Term count and degree without materializing the monomial set.
struct AnfSummary {
  uint64_t terms = 0;
  int degree = 0;
};
AnfSummary anf_summary(const BooleanFunction& f);

}  // namespace avalanche
