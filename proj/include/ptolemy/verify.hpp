#pragma once

// Exhaustive verification sweep over every triangulation of the (n+3)-gon
// and every diagonal, driving `ptolemy verify`.

#include <cstddef>
#include <string>
#include <vector>

namespace ptolemy {

enum class VerifyLevel { quick, full };

struct CheckTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool skipped = false;
  std::vector<std::string> examples;  // first few failure descriptions
};

struct VerifyReport {
  int n = 0;
  VerifyLevel level = VerifyLevel::quick;
  std::size_t triangulations = 0;
  std::size_t diagonals = 0;
  std::vector<CheckTally> checks;
  double seconds = 0.0;

  bool passed() const;
  const CheckTally* find(const std::string& name) const;
};

std::size_t catalan(int k);

// quick: counts, expansion vs exchange recursion, orientation independence,
// positivity, distinct weights, denominator vectors.
// full adds: brute-force enumerator agreement (n <= 4), partition and
// bijection checks, trivial-coefficient specialization, exchange-matrix
// shape, flip graph shape, and exchange relations on expansions (n <= 3).
// `jobs` worker threads split the triangulations.
VerifyReport run_verification(int n, VerifyLevel level, unsigned jobs = 1);

std::string format_report(const VerifyReport& report);

}  // namespace ptolemy
