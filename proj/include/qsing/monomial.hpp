#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qsing/agecalc.hpp"
#include "qsing/combinatorics.hpp"
#include "qsing/types.hpp"

namespace qsing {

/// A monomial matrix over the m-th roots of unity. Column i has its single
/// nonzero entry zeta_m^exponents[i] in row perm[i] (0-based).
struct MonomialElement {
  std::vector<int> perm;
  std::vector<std::uint32_t> exponents;

  static MonomialElement identity(std::size_t dimension);
  std::size_t dimension() const noexcept { return perm.size(); }
  bool is_identity() const noexcept;

  friend bool operator==(const MonomialElement &, const MonomialElement &) = default;
  friend auto operator<=>(const MonomialElement &, const MonomialElement &) = default;
};

constexpr std::size_t kDefaultClosureCap = 20000;

/// Cap from QC_CLOSURE_CAP when set to a positive integer, else the default.
std::size_t closure_cap_from_environment();

/// A finite group of monomial matrices given by generators. The element list
/// is populated by close_group().
class MonomialRep {
public:
  /// Exponents are reduced mod root_order. Throws InvalidInput on dimension 0,
  /// root_order 0, or a generator that is not a monomial matrix of this size.
  MonomialRep(std::size_t dimension, std::uint32_t root_order,
              std::vector<MonomialElement> generators);

  std::size_t dimension() const noexcept { return dimension_; }
  std::uint32_t root_order() const noexcept { return root_order_; }
  const std::vector<MonomialElement> &generators() const noexcept { return generators_; }

  bool closed() const noexcept { return elements_.has_value(); }
  /// Throws std::logic_error when the rep has not been closed.
  const std::vector<MonomialElement> &elements() const;

  /// (a * b) as matrices: apply b first.
  MonomialElement multiply(const MonomialElement &a, const MonomialElement &b) const;

  friend MonomialRep close_group(const MonomialRep &rep, std::size_t cap);

private:
  std::size_t dimension_;
  std::uint32_t root_order_;
  std::vector<MonomialElement> generators_;
  std::optional<std::vector<MonomialElement>> elements_;
};

/// Full multiplicative closure, identity first, then breadth-first order in
/// the generators. Throws GroupTooLarge once more than cap elements appear.
MonomialRep close_group(const MonomialRep &rep, std::size_t cap = kDefaultClosureCap);

std::uint64_t element_order(const MonomialElement &g, std::uint32_t root_order);

/// Eigenvalue exponents at the element's own order. A cycle of length l whose
/// entries multiply to zeta_m^K has eigenvalues the l-th roots of zeta_m^K.
EigenExponents element_eigen_exponents(const MonomialElement &g, std::uint32_t root_order);

/// det(g) = zeta_{2m}^e; returns e in [0, 2m).
std::uint64_t det_exponent(const MonomialElement &g, std::uint32_t root_order);

/// Multiplicative order of det(g).
std::uint64_t det_order(const MonomialElement &g, std::uint32_t root_order);

using Witness = std::variant<CycleType, MonomialElement>;

struct SingularityVerdict {
  bool canonical = true;
  bool terminal = true;
  bool gorenstein = true;
  std::uint64_t index = 1;
  std::vector<MonomialElement> quasi_reflections;
  /// Minimum age over non-identity elements; empty means +infinity (trivial group).
  std::optional<Rational> min_age;
  std::optional<Witness> witness;
  BigInt group_order = 1;
};

/// Age-criterion classification of C^N / G. Requires a closed rep; throws
/// QuasiReflectionError listing the offenders if G contains quasi-reflections.
SingularityVerdict analyze(const MonomialRep &rep);

} // namespace qsing
