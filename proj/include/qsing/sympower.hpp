#pragma once

#include <string>
#include <vector>

#include "qsing/agecalc.hpp"
#include "qsing/errors.hpp"
#include "qsing/monomial.hpp"

// Local model of the symmetric power S^d X of an n-dimensional smooth variety:
// C^{nd} / S_d with S_d acting by n copies of its permutation representation.
namespace qsing::sympower {

/// Raised for n <= 1, where transpositions act as quasi-reflections.
class UnsupportedDimension : public QuasiReflectionError {
public:
  explicit UnsupportedDimension(int n);
};

constexpr int kDefaultMatrixCap = 64;

/// One AgeRecord per partition of d, in canonical partition order.
std::vector<AgeRecord> class_table(int n, int d);

/// Verdict from the class table alone; the group is never materialized.
/// The witness is the cycle type of minimal age.
SingularityVerdict verdict(int n, int d);

struct ClassCheck {
  CycleType cycle_type;
  bool exponents_match = false;
  bool age_match = false;
  double max_deviation = 0.0;
  std::string detail;
  bool passed() const noexcept { return exponents_match && age_match; }
};

struct BruteforceReport {
  int n;
  int d;
  double tolerance;
  std::vector<ClassCheck> classes;
  bool passed() const noexcept;
};

/// Per class: build the nd x nd permutation matrix, recover exponents
/// numerically, and compare with the per-cycle construction and the closed-form
/// age. Throws InvalidInput when n*d exceeds matrix_cap.
BruteforceReport bruteforce_check(int n, int d, double tolerance = 1e-6,
                                  int matrix_cap = kDefaultMatrixCap);

/// S_d on C^{nd} as an explicit monomial group (adjacent transpositions as
/// generators, root order 1). Not closed.
MonomialRep materialize(int n, int d);

} // namespace qsing::sympower
