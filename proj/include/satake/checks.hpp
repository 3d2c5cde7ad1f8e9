#pragma once

#include <string>
#include <vector>

#include "satake/multiplicity.hpp"
#include "satake/root_datum.hpp"

namespace satake {

struct CheckResult {
  std::string name;
  bool pass = false;
  Int cases = 0;
  std::string detail;  // first offender when failing, summary otherwise
};

// The engine-wide invariant suite behind the `check` command: two-algorithm
// multiplicity agreement, weight-table sum rules, attracting/repelling
// intersection-dimension consistency and three-way emptiness agreement,
// vanishing of the semismall defect with a monotone convolution fiber
// dimension, and rigidity of the identity object. Sweeps every dominant
// coweight of doubled height <= height_bound (pairs of them where a pair is
// needed).
std::vector<CheckResult> run_invariant_suite(const RootDatum& d, Int height_bound,
                                             Int weyl_cap = kDefaultWeylCap,
                                             PartitionCache* cache = nullptr);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace satake
