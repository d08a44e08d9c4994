#pragma once

#include <cstdint>
#include <vector>

#include "avalanche/boolean_function.hpp"

namespace avalanche {

// Definition-sum implementations used to cross-check the fast paths. These
// deliberately avoid the butterfly, the spectrum, and the autocorrelation
// code; keep them that way.

/// W(w) = sum_x (-1)^{f(x) ^ parity(w & x)}, summed literally.
std::vector<int64_t> walsh_by_definition(const BooleanFunction& f);

/// Delta(a) = sum_x (-1)^{f(x)} (-1)^{f(x^a)}, summed literally.
std::vector<int64_t> autocorrelation_by_definition(const BooleanFunction& f);

/// min over all 2^{n+1} affine functions of the Hamming distance.
int64_t nonlinearity_by_affine_distance(const BooleanFunction& f);

/// SAC via the n unit-vector derivatives, each counted bit by bit.
bool sac_by_unit_derivatives(const BooleanFunction& f);

}  // namespace avalanche
