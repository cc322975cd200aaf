#include <doctest.h>

#include <random>

#include "pcwkit/codegen.hpp"
#include "pcwkit/exact_linalg.hpp"
#include "pcwkit/matrix.hpp"
#include "support.hpp"

using namespace pcwkit;
using testsupport::random_int_matrix;
using testsupport::reference_determinant;
using testsupport::reference_permanent;

TEST_CASE("determinant matches the permutation expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = trial % 7;
    const IntMatrix m = random_int_matrix(rng, k, -4, 4);
    CHECK(determinant(m) == reference_determinant(m));
  }
}

TEST_CASE("determinant edge cases") {
  CHECK(determinant(IntMatrix(0, 0)) == 1);

  IntMatrix ident(3, 3);
  for (std::size_t i = 0; i < 3; ++i) ident(i, i) = 1;
  CHECK(determinant(ident) == 1);

  IntMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK(determinant(singular) == 0);

  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("permanent matches the permutation expansion") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = trial % 7;
    const IntMatrix m = random_int_matrix(rng, k, 0, 3);
    CHECK(permanent(m) == reference_permanent(m));
  }
}

TEST_CASE("permanent edge cases") {
  CHECK(permanent(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(permanent(IntMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(permanent(IntMatrix(5, 5), 4), std::invalid_argument);

  IntMatrix ones(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) ones(r, c) = 1;
  CHECK(permanent(ones) == 6);
}

TEST_CASE("gram matrix") {
  IntMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 0;
  a(1, 1) = 1;
  const IntMatrix g = gram_matrix(a);
  CHECK(g(0, 0) == 1);
  CHECK(g(0, 1) == 1);
  CHECK(g(1, 0) == 1);
  CHECK(g(1, 1) == 2);
}

TEST_CASE("rank over GF(2)") {
  CHECK(rank_gf2(example_h422()) == 2);
  CHECK(rank_gf2(dumbbell(3)) == 5);

  const BinaryMatrix zero = BinaryMatrix::from_rows({{0, 0}, {0, 0}});
  CHECK(rank_gf2(zero) == 0);

  const BinaryMatrix sum = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rank_gf2(sum) == 2);
}

TEST_CASE("rank over the rationals") {
  IntMatrix dependent(2, 2);
  dependent(0, 0) = 1;
  dependent(0, 1) = 2;
  dependent(1, 0) = 2;
  dependent(1, 1) = 4;
  CHECK(rank_exact(dependent) == 1);

  // Rank 2 over GF(2) but full rank over Q: the lift has determinant 2.
  const BinaryMatrix cyc = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(rank_exact(lift(cyc)) == 3);
  CHECK(rank_exact(IntMatrix(0, 0)) == 0);
}
