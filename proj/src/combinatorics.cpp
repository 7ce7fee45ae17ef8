#include "qsing/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qsing/errors.hpp"

namespace qsing {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw InvalidInput("cycle type must have at least one part");
  for (int p : parts_) {
    if (p < 1)
      throw InvalidInput("cycle type parts must be positive, got " + std::to_string(p));
    degree_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::identity(int d) {
  if (d < 1)
    throw InvalidInput("degree must be >= 1, got " + std::to_string(d));
  return CycleType(std::vector<int>(d, 1));
}

CycleType CycleType::transposition(int d) {
  if (d < 2)
    throw InvalidInput("transposition needs degree >= 2, got " + std::to_string(d));
  std::vector<int> parts(d - 1, 1);
  parts[0] = 2;
  return CycleType(std::move(parts));
}

std::string CycleType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<CycleType> partitions(int d) {
  if (d < 1)
    throw InvalidInput("partitions: degree must be >= 1, got " + std::to_string(d));

  std::vector<CycleType> out;
  std::vector<int> cur{d};
  for (;;) {
    out.emplace_back(cur);
    // Step to the reverse-lex successor: strip trailing 1s, decrement the
    // last part > 1, and refill greedily with parts no larger than it.
    int ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty())
      break;
    int k = --cur.back();
    int rest = ones + 1;
    while (rest > 0) {
      int p = std::min(k, rest);
      cur.push_back(p);
      rest -= p;
    }
  }
  return out;
}

BigInt factorial(int d) {
  BigInt f = 1;
  for (int i = 2; i <= d; ++i)
    f *= i;
  return f;
}

BigInt class_size(const CycleType &t) {
  std::map<int, int> mult;
  for (int p : t.parts())
    ++mult[p];
  BigInt denom = 1;
  for (auto [part, m] : mult) {
    for (int j = 0; j < m; ++j)
      denom *= part;
    denom *= factorial(m);
  }
  return factorial(t.degree()) / denom;
}

std::uint64_t element_order(const CycleType &t) {
  std::uint64_t r = 1;
  for (int p : t.parts())
    r = std::lcm(r, static_cast<std::uint64_t>(p));
  return r;
}

std::vector<ClassInfo> conjugacy_classes(int d) {
  std::vector<ClassInfo> out;
  for (auto &t : partitions(d)) {
    auto size = class_size(t);
    auto order = element_order(t);
    out.push_back({std::move(t), std::move(size), order});
  }
  return out;
}

CycleType cycle_type_of(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  if (n == 0)
    throw InvalidInput("empty permutation");
  std::vector<bool> hit(n, false);
  for (int img : images) {
    if (img < 0 || img >= n || hit[img])
      throw InvalidInput("not a permutation of 0.." + std::to_string(n - 1));
    hit[img] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

} // namespace qsing
