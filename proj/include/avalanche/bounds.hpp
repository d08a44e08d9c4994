#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "avalanche/criteria.hpp"
#include "avalanche/int128.hpp"

namespace avalanche {

/// Piecewise sigma lower bound for a balanced function that is PC with
/// respect to t vectors. Case 3 is rational; num/den keeps it exact.
struct SungBound {
  int case_no = 0;  // 1: t odd, 2: t even, 3: large t
  uint128 num = 0;
  uint64_t den = 1;
  /// The even case at t exceeds the odd case at t-1, so the piecewise
  /// family is not monotone there.
  bool non_monotone = false;

  std::string text() const;
};

uint128 zz_sigma_lower(int n);   // 2^{2n}
uint128 zz_sigma_upper(int n);   // 2^{3n}
uint128 son_sigma_lower(int n);  // 2^{2n} + 2^{n+3}, balanced f
SungBound sung_sigma_lower(int n, uint64_t t);  // 0 <= t <= 2^n - 2
uint128 thm1_sigma_lower(int n, uint64_t l_h_even);  // 2^{2n} (1 + L)
uint128 thm1_sigma_upper(int n);                     // 2^{3n-2}

/// Largest N with N <= 2^{n-1} - sqrt(sigma / 2^n) / 2, found by exact
/// squared comparison.
int64_t nl_upper_from_sigma(int n, uint128 sigma);

// exact satisfaction checks (square roots eliminated by cross-squaring)
bool sigma_meets_sung(int n, uint64_t t, uint128 sigma);
bool nl_meets_sigma_upper(int n, uint128 sigma, int64_t nl);
bool nl_within_thm1_band(int n, uint64_t l_h_even, int64_t nl);
bool nl_meets_zz2_upper(int n, int64_t nl);   // n even
bool nl_meets_sung_upper(int n, int64_t nl);  // n > 2

/// One evaluated bound; `satisfied` is empty when the bound does not apply
/// to the supplied report (or no report was supplied).
struct BoundLine {
  std::string name;
  std::string value;
  std::optional<bool> satisfied;
  std::string note;
};

struct BoundsReport {
  int n = 0;
  std::optional<uint64_t> t;
  std::optional<uint64_t> l_h_even;
  std::optional<uint128> sigma;

  uint128 zz_lower = 0, zz_upper = 0, son_lower = 0;
  std::optional<SungBound> sung_lower;
  std::optional<int64_t> nl_upper_sigma;
  int64_t sac_nl_lower = 0;
  std::optional<uint128> thm1_lower;
  uint128 thm1_upper = 0;
  std::optional<double> nl_band_upper;
  std::optional<double> zz2_nl_upper;
  std::optional<double> sung_nl_upper;

  std::vector<BoundLine> lines;
  std::vector<std::string> violations;  // applicable bounds that failed
};

/// Evaluates every formula from (n, t, l_h_even) and, when a report is
/// supplied, marks each applicable bound satisfied or violated. t defaults
/// to the report's PC count.
BoundsReport bounds_report(int n, std::optional<uint64_t> t,
                           std::optional<uint64_t> l_h_even,
                           const GacReport* gac = nullptr);

}  // namespace avalanche
