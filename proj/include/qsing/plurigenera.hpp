#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsing/types.hpp"

namespace qsing {

/// Kodaira dimension: -infinity or a nonnegative integer.
class KodairaDim {
public:
  static KodairaDim negative_infinity() { return KodairaDim(); }
  /// Throws InvalidInput for a negative value.
  static KodairaDim finite(std::int64_t value);
  /// Accepts "-inf" or a nonnegative decimal integer.
  static KodairaDim parse(const std::string &text);

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws std::logic_error for -infinity.
  std::int64_t value() const;
  std::string to_string() const;

  friend bool operator==(const KodairaDim &, const KodairaDim &) = default;

private:
  KodairaDim() = default;
  std::optional<std::int64_t> value_;
};

/// kappa(Sigma_d) = d * kappa(X), with -infinity absorbing.
KodairaDim kodaira_scale(const KodairaDim &kappa, int d);

/// Dimension of the d-th symmetric power of a p-dimensional space,
/// binomial(p + d - 1, d); zero when p = 0.
BigInt sym_dim(std::uint64_t p, int d);

/// dim (V^{(x)d})^{S_d} for dim V = p, by averaging p^{#cycles} over S_d.
BigInt invariant_dim_burnside(std::uint64_t p, int d);

BigInt binomial(std::uint64_t a, std::uint64_t k);

struct PlurigenusInput {
  std::uint64_t m;
  std::uint64_t p_m_x;
};

struct PlurigenusRow {
  std::uint64_t m;
  std::uint64_t p_m_x;
  BigInt p_m_sigma;
  /// m*n even: the only rows for which the symmetric-power formula is a theorem.
  bool valid;
};

struct PlurigenusTable {
  int n;
  int d;
  std::vector<PlurigenusRow> rows;
};

PlurigenusTable plurigenus_table(int n, int d, const std::vector<PlurigenusInput> &rows);

enum class GenusRegime { NonnegativeKodaira, GeneralType };

/// Smallest genus an irreducible curve through d general points can have:
/// d for kappa >= 0, d + 1 for general type.
std::uint64_t genus_bound(GenusRegime regime, int d);

/// Least-squares slope of log P_m(Sigma_d) against log m over the valid rows
/// with P_m(Sigma_d) > 0. Throws InvalidInput with fewer than 3 such rows.
double growth_exponent_check(const PlurigenusTable &table);

} // namespace qsing
