#pragma once

#include <cstdint>
#include <vector>

#include "motzseg/correspondence.hpp"

namespace motzseg {

struct SelftestOptions {
  int n_max = 8;             // exhaustive path-side cap
  int samples = 1000;        // randomized cases per sampled check
  std::uint64_t seed = 0;    // sampling is deterministic given the seed
  int oracle_max = 5;        // brute-force universe cap (6 allowed)
};

/// Runs the whole invariant battery: codecs, column statistics, monoid laws,
/// restrictions, factorization, path combinatorics, the correspondence in
/// both directions and the brute-force oracle comparison.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt);

}  // namespace motzseg
