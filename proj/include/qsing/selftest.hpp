#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qsing {

struct SelftestOptions {
  int max_dim = 6;
  int max_points = 9;
  double tolerance = 1e-6;
};

struct SelftestCheck {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> discrepancies;
  bool passed() const noexcept { return discrepancies.empty(); }
};

struct SelftestReport {
  SelftestOptions options;
  std::vector<SelftestCheck> checks;
  bool passed() const noexcept;
};

/// Cross-checks over 2 <= n <= max_dim, 1 <= d <= max_points: numeric oracle
/// against the per-cycle construction and closed form, the minimal-age and
/// index laws, class-size sums, and the Burnside identity for 0 <= p, d <= 10.
/// Throws InvalidInput when max_dim * max_points exceeds the oracle matrix cap.
SelftestReport run_selftest(const SelftestOptions &options);

} // namespace qsing
