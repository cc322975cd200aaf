#include <doctest.h>

#include <stdexcept>

#include "pcwkit/codegen.hpp"
#include "pcwkit/exact_linalg.hpp"
#include "pcwkit/matrix.hpp"
#include "pcwkit/tanner.hpp"
#include "support.hpp"

using namespace pcwkit;
using testsupport::brute_min_distance;

TEST_CASE("the [4,2,2] example matrix") {
  const BinaryMatrix h = example_h422();
  CHECK(h == BinaryMatrix::from_rows({{1, 1, 1, 0}, {0, 1, 1, 1}}));
  CHECK(count_four_cycles(h) == 1);
}

TEST_CASE("dumbbell construction") {
  CHECK_THROWS_AS(dumbbell(2), std::invalid_argument);

  for (std::size_t k = 3; k <= 6; ++k) {
    const BinaryMatrix h = dumbbell(k);
    CHECK(h.rows() == 2 * k);
    CHECK(h.cols() == 2 * k + 1);
    CHECK(rank_gf2(h) == 2 * k - 1);

    // Bridge bit k sits on exactly the two degree-3 checks k-1 and k.
    CHECK(h.col_support(k) == std::vector<std::size_t>{k - 1, k});
    CHECK(h.row_weight(k - 1) == 3);
    CHECK(h.row_weight(k) == 3);
    std::size_t degree_three = 0;
    for (std::size_t j = 0; j < h.rows(); ++j) {
      CHECK((h.row_weight(j) == 2 || h.row_weight(j) == 3));
      if (h.row_weight(j) == 3) ++degree_three;
    }
    CHECK(degree_three == 2);
  }
}

TEST_CASE("dumbbell code parameters") {
  // [7,2,3] and [9,2,4]: dimension n - rank, distance by exhaustion.
  const BinaryMatrix d3 = dumbbell(3);
  CHECK(d3.cols() - rank_gf2(d3) == 2);
  CHECK(brute_min_distance(d3) == 3);

  const BinaryMatrix d4 = dumbbell(4);
  CHECK(d4.cols() - rank_gf2(d4) == 2);
  CHECK(brute_min_distance(d4) == 4);
}

TEST_CASE("regular LDPC generation") {
  const LdpcSpec spec{20, 3, 4, 7};
  const BinaryMatrix h = random_regular_ldpc(spec);
  CHECK(h.rows() == 15);
  CHECK(h.cols() == 20);
  for (std::size_t i = 0; i < h.cols(); ++i) CHECK(h.col_weight(i) == 3);
  for (std::size_t j = 0; j < h.rows(); ++j) CHECK(h.row_weight(j) == 4);

  CHECK(random_regular_ldpc(spec) == h);
  CHECK_FALSE(random_regular_ldpc({20, 3, 4, 8}) == h);

  CHECK_THROWS_AS(random_regular_ldpc({10, 3, 4, 1}), std::invalid_argument);
}

TEST_CASE("four-cycle counting") {
  CHECK(count_four_cycles(example_h422()) == 1);
  CHECK(count_four_cycles(dumbbell(3)) == 0);

  // Two columns sharing three rows give C(3,2) = 3 four-cycles.
  const BinaryMatrix h = BinaryMatrix::from_rows({{1, 1}, {1, 1}, {1, 1}});
  CHECK(count_four_cycles(h) == 3);
}

TEST_CASE("four-cycle removal") {
  const BinaryMatrix h = random_regular_ldpc({20, 3, 4, 1});
  REQUIRE(count_four_cycles(h) > 0);

  const FourCycleRemoval removal = remove_four_cycles(h, 1);
  CHECK(removal.success);
  CHECK(removal.remaining_four_cycles == 0);
  CHECK(count_four_cycles(removal.matrix) == 0);

  for (std::size_t i = 0; i < 20; ++i) CHECK(removal.matrix.col_weight(i) == 3);
  for (std::size_t j = 0; j < 15; ++j) CHECK(removal.matrix.row_weight(j) == 4);

  const FourCycleRemoval again = remove_four_cycles(h, 1);
  CHECK(again.matrix == removal.matrix);

  CHECK_THROWS_AS(remove_four_cycles(example_h422(), 1), std::invalid_argument);
}

TEST_CASE("four-cycle removal budget exhaustion") {
  const BinaryMatrix h = random_regular_ldpc({20, 3, 4, 1});
  const FourCycleRemoval removal = remove_four_cycles(h, 1, 1);
  CHECK_FALSE(removal.success);
  CHECK(removal.remaining_four_cycles > 0);
  CHECK(removal.remaining_four_cycles <= count_four_cycles(h));
}
