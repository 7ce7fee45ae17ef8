#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qsing/combinatorics.hpp"
#include "qsing/errors.hpp"

using namespace qsing;

TEST_CASE("partitions of small degrees") {
  auto one = partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == std::vector<int>{1});

  auto four = partitions(4);
  std::vector<std::vector<int>> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(four.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(four[i].parts() == expected[i]);
  CHECK(qsing_test::euler_partition_count(4) == 5);

  CHECK(partitions(10).size() == 42);
  CHECK(qsing_test::euler_partition_count(10) == 42);
}

TEST_CASE("partition order matches the recursive reference and the pentagonal count") {
  for (int d = 1; d <= 16; ++d) {
    const auto got = partitions(d);
    const auto ref = qsing_test::recursive_partitions(d);
    REQUIRE(got.size() == ref.size());
    CHECK(got.size() == qsing_test::euler_partition_count(d));
    std::set<std::vector<int>> unique;
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].parts() == ref[i]);
      CHECK(got[i].degree() == d);
      CHECK(std::is_sorted(got[i].parts().rbegin(), got[i].parts().rend()));
      unique.insert(got[i].parts());
    }
    CHECK(unique.size() == got.size());
  }
}

TEST_CASE("partitions rejects non-positive degree") {
  CHECK_THROWS_AS(partitions(0), InvalidInput);
  CHECK_THROWS_AS(partitions(-3), InvalidInput);
}

TEST_CASE("CycleType validates and normalizes") {
  CycleType t({1, 3, 2});
  CHECK(t.parts() == std::vector<int>{3, 2, 1});
  CHECK(t.degree() == 6);
  CHECK(t.num_parts() == 3);
  CHECK(t.to_string() == "(3,2,1)");
  CHECK(t.sign() == -1);
  CHECK_THROWS_AS(CycleType({}), InvalidInput);
  CHECK_THROWS_AS(CycleType({2, 0}), InvalidInput);
  CHECK(CycleType::identity(3).is_identity());
  CHECK(CycleType::transposition(4).parts() == std::vector<int>{2, 1, 1});
}

TEST_CASE("class sizes") {
  CHECK(class_size(CycleType({1, 1, 1})) == 1);
  CHECK(class_size(CycleType({2, 1})) == 3);
  CHECK(class_size(CycleType({3, 2})) == 20);
}

TEST_CASE("class sizes agree with brute-force bucketing of S_d") {
  for (int d = 1; d <= 7; ++d) {
    const auto counts = qsing_test::brute_class_counts(d);
    const auto classes = partitions(d);
    CHECK(classes.size() == counts.size());
    for (const auto &t : classes)
      CHECK(class_size(t) == counts.at(t.parts()));
  }
}

TEST_CASE("class sizes sum to d!") {
  for (int d = 1; d <= 10; ++d) {
    BigInt total = 0;
    for (const auto &c : conjugacy_classes(d))
      total += c.size;
    CHECK(total == factorial(d));
  }
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("element orders") {
  CHECK(element_order(CycleType::identity(5)) == 1);
  CHECK(element_order(CycleType({3, 2})) == 6);
  CHECK(element_order(CycleType({6, 4})) == 12);

  for (int d = 1; d <= 10; ++d) {
    for (const auto &t : partitions(d)) {
      const auto r = element_order(t);
      CHECK((factorial(d) % r) == 0);
      for (int p : t.parts())
        CHECK(r % static_cast<std::uint64_t>(p) == 0);
      CHECK((r == 1) == t.is_identity());
    }
  }
}

TEST_CASE("cycle_type_of reads a permutation") {
  CHECK(cycle_type_of({1, 2, 0, 4, 3}) == CycleType({3, 2}));
  CHECK(cycle_type_of({0, 1}) == CycleType::identity(2));
  CHECK_THROWS_AS(cycle_type_of({0, 0}), InvalidInput);
  CHECK_THROWS_AS(cycle_type_of({0, 5}), InvalidInput);
}
