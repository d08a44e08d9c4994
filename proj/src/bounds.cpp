#include "avalanche/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace avalanche {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string SungBound::text() const {
  if (num % den == 0) return to_string(num / den);
  return to_string(num) + "/" + std::to_string(den);
}

uint128 zz_sigma_lower(int n) { return pow2_128(2 * n); }
uint128 zz_sigma_upper(int n) { return pow2_128(3 * n); }
uint128 son_sigma_lower(int n) { return pow2_128(2 * n) + pow2_128(n + 3); }

SungBound sung_sigma_lower(int n, uint64_t t) {
  const uint64_t size = uint64_t{1} << n;
  if (t > size - 2) throw std::invalid_argument("t out of range 0..2^n-2");
  SungBound b;
  // threshold t <= 2^n - 2^{n-3} - 1, kept integral by scaling by 8
  bool small_t = 8 * t <= 8 * size - size - 8;
  if (small_t) {
    if (t % 2 == 1) {
      b.case_no = 1;
      b.num = pow2_128(2 * n) + uint128{64} * (size - t - 1);
    } else {
      b.case_no = 2;
      b.num = pow2_128(2 * n) + uint128{64} * (size - t + 2);
      // at even t the value jumps above the odd-case value at t-1
      b.non_monotone = t >= 1;
    }
    b.den = 1;
  } else {
    b.case_no = 3;
    b.num = pow2_128(2 * n) * (size - t);
    b.den = size - 1 - t;
  }
  return b;
}

uint128 thm1_sigma_lower(int n, uint64_t l_h_even) {
  return pow2_128(2 * n) * (1 + uint128(l_h_even));
}

uint128 thm1_sigma_upper(int n) { return pow2_128(3 * n - 2); }

namespace {

// N <= 2^{n-1} - sqrt(sigma/2^n)/2  <=>  2^n (2^n - 2N)^2 >= sigma
bool nl_le_sigma_bound(int n, uint128 sigma, int64_t nl) {
  if (nl > int64_t{1} << (n - 1)) return false;
  uint128 gap = uint128((int64_t{1} << n) - 2 * nl);
  return (gap * gap << n) >= sigma;
}

}  // namespace

int64_t nl_upper_from_sigma(int n, uint128 sigma) {
  int64_t lo = 0, hi = int64_t{1} << (n - 1);
  if (!nl_le_sigma_bound(n, sigma, lo)) return -1;  // sigma beyond 2^{3n}
  while (lo < hi) {
    int64_t mid = lo + (hi - lo + 1) / 2;
    if (nl_le_sigma_bound(n, sigma, mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bool sigma_meets_sung(int n, uint64_t t, uint128 sigma) {
  SungBound b = sung_sigma_lower(n, t);
  return sigma * b.den >= b.num;
}

bool nl_meets_sigma_upper(int n, uint128 sigma, int64_t nl) {
  return nl_le_sigma_bound(n, sigma, nl);
}

// N <= 2^{n-1} - 2^{n/2-1} sqrt(1+L)  <=>  (2^{n-1} - N)^2 >= 2^{n-2} (1+L)
bool nl_within_thm1_band(int n, uint64_t l_h_even, int64_t nl) {
  if (nl < int64_t{1} << (n - 2)) return false;
  int64_t gap = (int64_t{1} << (n - 1)) - nl;
  if (gap < 0) return false;
  return uint128(gap) * uint128(gap) >= pow2_128(n - 2) * (1 + uint128(l_h_even));
}

// N <= 2^{n-1} - sqrt(2^n + 2^{n/2+3} + 2^4)/2  <=>
// (2^n - 2N)^2 >= 2^n + 2^{n/2+3} + 2^4
bool nl_meets_zz2_upper(int n, int64_t nl) {
  if (n % 2 != 0) throw std::invalid_argument("zz2 nonlinearity bound needs even n");
  int64_t gap = (int64_t{1} << n) - 2 * nl;
  if (gap < 0) return false;
  uint128 rhs = pow2_128(n) + pow2_128(n / 2 + 3) + 16;
  return uint128(gap) * uint128(gap) >= rhs;
}

// N <= 2^{n-1} - sqrt(2^n + 2^6 - (n+-1) 2^6 / 2^n)/2, scaled by 2^n
bool nl_meets_sung_upper(int n, int64_t nl) {
  if (n <= 2) throw std::invalid_argument("sung nonlinearity bound needs n > 2");
  int64_t gap = (int64_t{1} << n) - 2 * nl;
  if (gap < 0) return false;
  uint64_t odd_even = (n % 2 == 1) ? n + 1 : n - 1;
  uint128 rhs = pow2_128(2 * n) + pow2_128(n + 6) - uint128{64} * odd_even;
  return (uint128(gap) * uint128(gap) << n) >= rhs;
}

BoundsReport bounds_report(int n, std::optional<uint64_t> t,
                           std::optional<uint64_t> l_h_even,
                           const GacReport* gac) {
  if (n < 2 || n > kMaxVars)
    throw std::invalid_argument("variable count out of range 2..24");
  BoundsReport r;
  r.n = n;
  r.l_h_even = l_h_even;
  if (gac) r.sigma = gac->sigma;
  if (t)
    r.t = t;
  else if (gac)
    r.t = gac->pc_vectors.size();

  const bool balanced = gac && gac->balanced;
  const bool sac = gac && gac->sac;
  auto row = [&](std::string name, std::string value,
                 std::optional<bool> satisfied, std::string note) {
    if (satisfied && !*satisfied) r.violations.push_back(name);
    r.lines.push_back({std::move(name), std::move(value), satisfied,
                       std::move(note)});
  };

  r.zz_lower = zz_sigma_lower(n);
  r.zz_upper = zz_sigma_upper(n);
  std::optional<bool> zz_ok;
  if (gac) zz_ok = gac->sigma >= r.zz_lower && gac->sigma <= r.zz_upper;
  row("zz_sigma_range", to_string(r.zz_lower) + ".." + to_string(r.zz_upper),
      zz_ok, "any f");

  r.son_lower = son_sigma_lower(n);
  std::optional<bool> son_ok;
  if (balanced) son_ok = gac->sigma >= r.son_lower;
  row("son_sigma_lower", to_string(r.son_lower), son_ok, "balanced f");

  if (r.t && *r.t <= (uint64_t{1} << n) - 2) {
    r.sung_lower = sung_sigma_lower(n, *r.t);
    std::optional<bool> ok;
    if (balanced) ok = sigma_meets_sung(n, *r.t, gac->sigma);
    std::string note = "balanced PC(t) f, case " +
                       std::to_string(r.sung_lower->case_no) + ", t=" +
                       std::to_string(*r.t);
    if (r.sung_lower->non_monotone) note += ", non-monotone at even t";
    row("sung_sigma_lower", r.sung_lower->text(), ok, note);
  }

  if (r.sigma) {
    r.nl_upper_sigma = nl_upper_from_sigma(n, *r.sigma);
    std::optional<bool> ok;
    if (balanced) ok = nl_meets_sigma_upper(n, *r.sigma, gac->nonlinearity);
    row("nl_upper_from_sigma", std::to_string(*r.nl_upper_sigma), ok,
        "balanced f");
  }

  r.sac_nl_lower = int64_t{1} << (n - 2);
  std::optional<bool> sac_nl_ok;
  if (sac) sac_nl_ok = gac->nonlinearity >= r.sac_nl_lower;
  row("sac_nl_lower", std::to_string(r.sac_nl_lower), sac_nl_ok, "SAC f");

  r.thm1_upper = thm1_sigma_upper(n);
  if (l_h_even) {
    r.thm1_lower = thm1_sigma_lower(n, *l_h_even);
    std::optional<bool> ok;
    if (balanced && sac)
      ok = gac->sigma >= *r.thm1_lower && gac->sigma <= r.thm1_upper;
    row("thm1_sigma_band",
        to_string(*r.thm1_lower) + ".." + to_string(r.thm1_upper), ok,
        "balanced SAC concatenation, L_h_even=" + std::to_string(*l_h_even));

    r.nl_band_upper = std::ldexp(1.0, n - 1) -
                      std::sqrt(std::ldexp(1.0, n - 2) *
                                (1.0 + static_cast<double>(*l_h_even)));
    std::optional<bool> band_ok;
    if (balanced && sac)
      band_ok = nl_within_thm1_band(n, *l_h_even, gac->nonlinearity);
    row("nl_band", std::to_string(r.sac_nl_lower) + ".." +
        fmt_double(*r.nl_band_upper), band_ok, "same class");
  }

  if (n % 2 == 0) {
    r.zz2_nl_upper =
        std::ldexp(1.0, n - 1) -
        0.5 * std::sqrt(std::ldexp(1.0, n) + std::ldexp(1.0, n / 2 + 3) + 16.0);
    std::optional<bool> ok;
    if (balanced && sac) ok = nl_meets_zz2_upper(n, gac->nonlinearity);
    row("zz2_nl_upper", fmt_double(*r.zz2_nl_upper), ok,
        "balanced SAC f, even n");
  }

  if (n > 2) {
    uint64_t odd_even = (n % 2 == 1) ? n + 1 : n - 1;
    double inner = std::ldexp(1.0, n) + 64.0 -
                   static_cast<double>(odd_even) * 64.0 / std::ldexp(1.0, n);
    r.sung_nl_upper = std::ldexp(1.0, n - 1) - 0.5 * std::sqrt(inner);
    std::optional<bool> ok;
    if (balanced && sac) ok = nl_meets_sung_upper(n, gac->nonlinearity);
    row("sung_nl_upper", fmt_double(*r.sung_nl_upper), ok,
        "balanced SAC f");
  }

  return r;
}

}  // namespace avalanche
