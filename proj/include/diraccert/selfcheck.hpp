#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace diraccert {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;  // e.g. constant values, first failures

  bool passed() const { return failures == 0; }
};

struct SelfCheckOptions {
  std::uint64_t seed = 12345;
  // Negative-control hook: perturbs one entry of alpha_1 before running
  // the anticommutation suite, which must then fail.
  bool corrupt_representation = false;
};

// Runs the built-in validation suites:
//   anticommutation  exact Clifford relations + trace identities, both reps
//   hs_oracle        |kernel|_HS^2 against the closed form, random points
//   dominance        hs_bound >= hs_closed_form on a random sweep
//   constants        runtime recomputation of embedded literals
//   symmetry         f conjugation/reflection symmetry + massless identity
std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& opts = {});

// Renders per-suite count lines (and notes) to `os`; returns true iff all
// suites passed.
bool report_selfcheck(std::ostream& os, const std::vector<SuiteResult>& results);

}  // namespace diraccert
