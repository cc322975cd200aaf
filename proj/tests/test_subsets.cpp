#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "pcwkit/subsets.hpp"

using namespace pcwkit;

TEST_CASE("ColumnSubset validation and membership") {
  const ColumnSubset s({1, 3, 4});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.position_of(1) == 0);
  CHECK(s.position_of(4) == 2);
  CHECK_THROWS_AS(s.position_of(2), std::invalid_argument);
  CHECK(s.erase(3) == ColumnSubset({1, 4}));
  CHECK_THROWS_AS(s.erase(0), std::invalid_argument);
  CHECK(s.complement(6) == std::vector<std::size_t>{0, 2, 5});

  CHECK_THROWS_AS(ColumnSubset({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ColumnSubset({3, 1}), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(20, 16) == 4845);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("enumerator walks subsets in lexicographic order") {
  SubsetEnumerator stream(5, 3);
  CHECK(stream.total() == 10);
  std::vector<ColumnSubset> seen;
  do {
    seen.push_back(stream.current());
  } while (stream.next());
  CHECK(seen.size() == 10);
  CHECK(seen.front() == ColumnSubset({0, 1, 2}));
  CHECK(seen[1] == ColumnSubset({0, 1, 3}));
  CHECK(seen.back() == ColumnSubset({2, 3, 4}));
  CHECK(seen == all_subsets(5, 3));
}

TEST_CASE("enumerator start rank matches the full walk") {
  const auto full = all_subsets(6, 3);
  for (std::uint64_t r = 0; r < full.size(); ++r) {
    SubsetEnumerator stream(6, 3, r);
    CHECK(stream.current() == full[r]);
    CHECK(SubsetEnumerator::unrank(6, 3, r) == full[r]);
  }
  CHECK_THROWS_AS(SubsetEnumerator::unrank(6, 3, 20), std::out_of_range);
}

TEST_CASE("enumerator degenerate sizes") {
  SubsetEnumerator empty(4, 0);
  CHECK(empty.total() == 1);
  CHECK(empty.current() == ColumnSubset());
  CHECK_FALSE(empty.next());

  CHECK_THROWS_AS(SubsetEnumerator(3, 5), std::invalid_argument);
}
