#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "avalanche/boolean_function.hpp"

namespace avalanche {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline constexpr uint64_t kDefaultSeed = 1;

/// Suites: oracles | bounds | paper-examples | exhaustive-n3 | thm1 | thm2.
/// Throws parse_error for an unknown name. Deterministic under a fixed seed.
SuiteResult run_suite(const std::string& name, uint64_t seed = kDefaultSeed);

std::vector<std::string> suite_names();

/// Deterministic generator; all sampling goes through the raw engine so the
/// stream is identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t bound) { return eng_() % bound; }
  bool flip() { return eng_() & 1; }

  BooleanFunction function(int n);
  BooleanFunction balanced_function(int n);
  BooleanFunction affine(int n);
  /// Random function with at least one even-weight nonzero linear structure.
  BooleanFunction with_even_linear_structure(int n);

 private:
  std::mt19937_64 eng_;
};

// Reference fixtures: two published n = 8 examples in both renderings.
extern const char kExample1Blocks[];
extern const char kExample1Anf[];
extern const char kExample1Hex[];
extern const char kExample2Blocks[];
extern const char kExample2Anf[];

/// Nonzero non-PC table offsets of example 1 (ascending).
inline constexpr uint64_t kExample1NonPc[3] = {76, 140, 192};

}  // namespace avalanche
