#pragma once

// Test-only reference computations. Nothing here calls into the library's
// enumeration or closed forms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace qsing_test {

/// p(d) by Euler's pentagonal-number recurrence.
inline std::uint64_t euler_partition_count(int d) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= d; ++k) {
    std::int64_t s = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k)
        break;
      const int sign = j % 2 ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k)
        s += sign * p[static_cast<std::size_t>(k - g2)];
    }
    p[static_cast<std::size_t>(k)] = s;
  }
  return static_cast<std::uint64_t>(p[static_cast<std::size_t>(d)]);
}

/// Recursive partition generator, largest part first.
inline std::vector<std::vector<int>> recursive_partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

inline std::vector<int> brute_cycle_lengths(const std::vector<int> &perm) {
  std::vector<int> lengths;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

/// Walks all d! permutations and buckets them by cycle type.
inline std::map<std::vector<int>, std::uint64_t> brute_class_counts(int d) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, std::uint64_t> counts;
  do {
    ++counts[brute_cycle_lengths(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

/// Number of degree-d monomials in p variables, by direct enumeration.
inline std::uint64_t count_monomials(int p, int d) {
  if (p == 0)
    return 0;
  std::function<std::uint64_t(int, int)> rec = [&](int vars, int deg) -> std::uint64_t {
    if (vars == 1)
      return 1;
    std::uint64_t total = 0;
    for (int k = 0; k <= deg; ++k)
      total += rec(vars - 1, deg - k);
    return total;
  };
  return rec(p, d);
}

inline std::mt19937 &rng() {
  static std::mt19937 gen(20261016u);
  return gen;
}

} // namespace qsing_test
