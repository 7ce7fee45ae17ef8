#include "qsing/agecalc.hpp"

#include <algorithm>

#include "qsing/errors.hpp"

namespace qsing {

EigenExponents::EigenExponents(std::uint64_t order, std::vector<std::uint64_t> exponents)
    : order_(order), exponents_(std::move(exponents)) {
  if (order_ == 0)
    throw InvalidInput("eigen exponents: order must be >= 1");
  for (auto a : exponents_)
    if (a >= order_)
      throw InvalidInput("eigen exponent " + std::to_string(a) + " outside [0, " +
                         std::to_string(order_) + ")");
  std::sort(exponents_.begin(), exponents_.end());
}

std::size_t EigenExponents::nonunit_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exponents_.begin(), exponents_.end(), [](auto a) { return a != 0; }));
}

EigenExponents cycle_eigen_exponents(const CycleType &t) {
  const std::uint64_t r = element_order(t);
  std::vector<std::uint64_t> exps;
  exps.reserve(t.degree());
  for (int len : t.parts()) {
    const std::uint64_t step = r / static_cast<std::uint64_t>(len);
    for (int j = 0; j < len; ++j)
      exps.push_back(step * static_cast<std::uint64_t>(j));
  }
  return EigenExponents(r, std::move(exps));
}

EigenExponents nfold(const EigenExponents &e, int n) {
  if (n < 1)
    throw InvalidInput("nfold: n must be >= 1, got " + std::to_string(n));
  std::vector<std::uint64_t> exps;
  exps.reserve(e.dimension() * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    exps.insert(exps.end(), e.exponents().begin(), e.exponents().end());
  return EigenExponents(e.order(), std::move(exps));
}

AgeValue age(const EigenExponents &e) {
  std::uint64_t s = 0;
  for (auto a : e.exponents())
    s += a;
  return {s, Rational(static_cast<std::int64_t>(s), static_cast<std::int64_t>(e.order()))};
}

AgeValue age_closed_form(const CycleType &t, int n) {
  if (n < 1)
    throw InvalidInput("age_closed_form: n must be >= 1, got " + std::to_string(n));
  const std::uint64_t r = element_order(t);
  std::uint64_t bracket = 0;
  for (int len : t.parts()) {
    const auto ri = static_cast<std::uint64_t>(len);
    bracket += (r / ri) * ri * (ri - 1);
  }
  // n * bracket is always even: each term is r * (r_i - 1) with r_i - 1 even
  // whenever r_i is odd, and r even whenever some r_i is even.
  const std::uint64_t twice = static_cast<std::uint64_t>(n) * bracket;
  if (twice % 2 != 0)
    throw std::logic_error("age_closed_form: odd numerator " + std::to_string(twice));
  const std::uint64_t s = twice / 2;
  return {s, Rational(static_cast<std::int64_t>(s), static_cast<std::int64_t>(r))};
}

int det_sign(const CycleType &t, int n) {
  if (n < 1)
    throw InvalidInput("det_sign: n must be >= 1, got " + std::to_string(n));
  return (t.sign() == 1 || n % 2 == 0) ? 1 : -1;
}

bool is_quasi_reflection(const EigenExponents &e) { return e.nonunit_count() == 1; }

} // namespace qsing
