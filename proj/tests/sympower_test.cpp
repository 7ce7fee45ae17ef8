#include <doctest.h>

#include "qsing/combinatorics.hpp"
#include "qsing/errors.hpp"
#include "qsing/sympower.hpp"

using namespace qsing;

TEST_CASE("verdict examples") {
  auto v25 = sympower::verdict(2, 5);
  CHECK(v25.canonical);
  CHECK_FALSE(v25.terminal);
  CHECK(v25.gorenstein);
  CHECK(v25.index == 1);
  CHECK(*v25.min_age == Rational(1));
  CHECK(v25.group_order == 120);

  auto v32 = sympower::verdict(3, 2);
  CHECK(v32.canonical);
  CHECK(v32.terminal);
  CHECK_FALSE(v32.gorenstein);
  CHECK(v32.index == 2);
  CHECK(*v32.min_age == Rational(3, 2));
  CHECK(std::get<CycleType>(*v32.witness) == CycleType({2}));

  auto v41 = sympower::verdict(4, 1);
  CHECK(v41.canonical);
  CHECK(v41.terminal);
  CHECK(v41.gorenstein);
  CHECK(v41.index == 1);
  CHECK_FALSE(v41.min_age.has_value());
}

TEST_CASE("n <= 1 is rejected as a quasi-reflection case") {
  CHECK_THROWS_AS(sympower::verdict(1, 3), sympower::UnsupportedDimension);
  CHECK_THROWS_AS(sympower::verdict(1, 3), QuasiReflectionError);
  CHECK_THROWS_AS(sympower::verdict(0, 3), QuasiReflectionError);
  CHECK_THROWS_AS(sympower::class_table(1, 2), QuasiReflectionError);
  CHECK_THROWS_AS(sympower::verdict(2, 0), InvalidInput);
  try {
    sympower::verdict(1, 3);
  } catch (const QuasiReflectionError &e) {
    CHECK(std::string(e.what()).find("quasi-reflection") != std::string::npos);
  }
}

TEST_CASE("class_table examples") {
  auto t22 = sympower::class_table(2, 2);
  REQUIRE(t22.size() == 2);
  CHECK(t22[0].cycle_type == CycleType({2}));
  CHECK(t22[0].age == Rational(1));
  CHECK(t22[0].class_size == 1);
  CHECK(t22[1].cycle_type == CycleType({1, 1}));
  CHECK(t22[1].age == Rational(0));
  CHECK(t22[1].class_size == 1);

  auto t33 = sympower::class_table(3, 3);
  REQUIRE(t33.size() == 3);
  CHECK(t33[0].cycle_type == CycleType({3}));
  CHECK(t33[0].s_sum == 9);
  CHECK(t33[0].order == 3);
  CHECK(t33[0].age == Rational(3));
  CHECK(t33[1].cycle_type == CycleType({2, 1}));
  CHECK(t33[1].age == Rational(3, 2));
  CHECK_FALSE(t33[1].det_is_plus_one);

  for (const auto &row : sympower::class_table(2, 4))
    if (row.cycle_type == CycleType({2, 2})) {
      CHECK(row.order == 2);
      CHECK(row.age == Rational(2));
    }
}

TEST_CASE("class_table sizes sum to d!") {
  for (int d = 1; d <= 9; ++d) {
    BigInt total = 0;
    for (const auto &row : sympower::class_table(3, d))
      total += row.class_size;
    CHECK(total == factorial(d));
  }
}

TEST_CASE("proposition over the full range") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 9; ++d) {
      const auto v = sympower::verdict(n, d);
      CHECK(v.canonical);
      const std::uint64_t index = (n % 2 == 0 || d == 1) ? 1 : 2;
      CHECK(v.index == index);
      CHECK(v.gorenstein == (index == 1));
      if (d >= 2) {
        CHECK(*v.min_age == Rational(n, 2));
        CHECK(v.terminal == (n >= 3));
      }
    }
}

TEST_CASE("bruteforce_check") {
  auto r23 = sympower::bruteforce_check(2, 3);
  CHECK(r23.classes.size() == 3);
  CHECK(r23.passed());

  auto r35 = sympower::bruteforce_check(3, 5);
  CHECK(r35.classes.size() == 7);
  CHECK(r35.passed());
  for (const auto &c : r35.classes)
    CHECK(c.max_deviation < 1e-6);

  auto r21 = sympower::bruteforce_check(2, 1);
  CHECK(r21.classes.size() == 1);
  CHECK(r21.passed());

  CHECK_THROWS_AS(sympower::bruteforce_check(8, 9), InvalidInput);
  CHECK_THROWS_AS(sympower::bruteforce_check(1, 3), QuasiReflectionError);
}

TEST_CASE("bruteforce_check reports a discrepancy when tolerance is unattainable") {
  auto r = sympower::bruteforce_check(2, 4, 0.0);
  CHECK_FALSE(r.passed());
  for (const auto &c : r.classes)
    CHECK(c.detail.find(c.cycle_type.to_string()) != std::string::npos);
}

TEST_CASE("materialized group agrees with the class-table verdict") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) {
      const auto rep = close_group(sympower::materialize(n, d));
      CHECK(rep.dimension() == static_cast<std::size_t>(n * d));
      const auto a = analyze(rep);
      const auto b = sympower::verdict(n, d);
      CHECK(a.canonical == b.canonical);
      CHECK(a.terminal == b.terminal);
      CHECK(a.gorenstein == b.gorenstein);
      CHECK(a.index == b.index);
      CHECK(a.min_age == b.min_age);
      CHECK(a.group_order == b.group_order);
    }
}
