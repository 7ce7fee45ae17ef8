#pragma once

#include <cstdint>
#include <vector>

#include "qsing/combinatorics.hpp"
#include "qsing/types.hpp"

namespace qsing {

/// Eigenvalues of a finite-order linear map, written as eps^a for a fixed
/// primitive order-th root of unity eps. Exponents are kept sorted.
class EigenExponents {
public:
  /// Throws InvalidInput unless order >= 1 and every exponent is in [0, order).
  EigenExponents(std::uint64_t order, std::vector<std::uint64_t> exponents);

  std::uint64_t order() const noexcept { return order_; }
  const std::vector<std::uint64_t> &exponents() const noexcept { return exponents_; }
  std::size_t dimension() const noexcept { return exponents_.size(); }

  /// Number of nonzero exponents, i.e. eigenvalues different from 1.
  std::size_t nonunit_count() const noexcept;

  friend bool operator==(const EigenExponents &, const EigenExponents &) = default;

private:
  std::uint64_t order_;
  std::vector<std::uint64_t> exponents_;
};

/// Sum of exponents S and the age S / order.
struct AgeValue {
  std::uint64_t s_sum;
  Rational age;
  friend bool operator==(const AgeValue &, const AgeValue &) = default;
};

/// One row of a symmetric-power class table.
struct AgeRecord {
  CycleType cycle_type;
  int n;
  std::uint64_t order;
  std::uint64_t s_sum;
  Rational age;
  bool det_is_plus_one;
  BigInt class_size;
};

/// Exponents of the permutation representation of a cycle type acting on C^d.
/// A cycle of length l contributes {j * (r / l) : 0 <= j < l} at order r.
EigenExponents cycle_eigen_exponents(const CycleType &t);

/// Direct sum of n copies: every multiplicity scaled by n.
EigenExponents nfold(const EigenExponents &e, int n);

AgeValue age(const EigenExponents &e);

/// S = (n/2) * sum_i (r/r_i) r_i (r_i - 1), evaluated without truncation.
AgeValue age_closed_form(const CycleType &t, int n);

/// det of n copies of the permutation matrix: sign(sigma)^n.
int det_sign(const CycleType &t, int n);

/// Exactly one eigenvalue differs from 1.
bool is_quasi_reflection(const EigenExponents &e);

} // namespace qsing
