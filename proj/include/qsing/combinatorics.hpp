#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsing/types.hpp"

namespace qsing {

/// Cycle type of a permutation in S_d: an integer partition of d with fixed
/// points kept as explicit parts of size 1. Parts are stored non-increasing.
class CycleType {
public:
  /// Parts may be given in any order; they are sorted. Throws InvalidInput on
  /// an empty list or a non-positive part.
  explicit CycleType(std::vector<int> parts);

  /// The identity class (1,1,...,1) of S_d.
  static CycleType identity(int d);
  /// The transposition class (2,1,...,1) of S_d, d >= 2.
  static CycleType transposition(int d);

  const std::vector<int> &parts() const noexcept { return parts_; }
  int degree() const noexcept { return degree_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  bool is_identity() const noexcept { return num_parts() == degree_; }

  /// Sign of any permutation of this type, (-1)^(d - number of parts).
  int sign() const noexcept { return (degree_ - num_parts()) % 2 == 0 ? 1 : -1; }

  /// "(3,2,1)"
  std::string to_string() const;

  friend bool operator==(const CycleType &, const CycleType &) = default;

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Conjugacy-class data for one cycle type.
struct ClassInfo {
  CycleType cycle_type;
  BigInt size;
  std::uint64_t order;
};

/// Every partition of d exactly once, in reverse-lexicographic order:
/// (d), (d-1,1), ..., (1,...,1). Throws InvalidInput for d < 1.
std::vector<CycleType> partitions(int d);

/// Number of permutations of the given cycle type, d! / prod(i^m_i * m_i!).
BigInt class_size(const CycleType &t);

/// lcm of the parts.
std::uint64_t element_order(const CycleType &t);

/// partitions(d) annotated with class size and element order.
std::vector<ClassInfo> conjugacy_classes(int d);

BigInt factorial(int d);

/// Cycle type of a permutation given as 0-based images.
CycleType cycle_type_of(const std::vector<int> &images);

} // namespace qsing
