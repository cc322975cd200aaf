#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "pcwkit/batch.hpp"
#include "pcwkit/codegen.hpp"
#include "pcwkit/io.hpp"
#include "support.hpp"

using namespace pcwkit;
using testsupport::make_vec;

TEST_CASE("compute covers all subsets in lexicographic order") {
  ComputeOptions opt;
  opt.kind = VectorKind::kAbsdet;
  const auto rows = compute_vectors(example_h422(), opt);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].subset == ColumnSubset({0, 1, 2}));
  CHECK(rows[1].subset == ColumnSubset({0, 1, 3}));
  CHECK(rows[2].subset == ColumnSubset({0, 2, 3}));
  CHECK(rows[3].subset == ColumnSubset({1, 2, 3}));
  CHECK(rows[0].vec == make_vec({0, 1, 1, 0}));
  CHECK(rows[3].vec == make_vec({0, 1, 1, 0}));
  for (const auto& row : rows) {
    CHECK(row.unscaled);
    CHECK(row.minimal == -1);
  }
  CHECK(rows[0].weight.value == 2);
  CHECK(rows[1].weight.value == 3);
}

TEST_CASE("dedupe keeps the first row per distinct vector") {
  ComputeOptions opt;
  opt.kind = VectorKind::kAbsdet;
  opt.dedupe = true;
  const auto rows = compute_vectors(example_h422(), opt);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].subset == ColumnSubset({0, 1, 2}));
  CHECK(rows[1].subset == ColumnSubset({0, 1, 3}));
  CHECK(rows[2].subset == ColumnSubset({0, 2, 3}));
}

TEST_CASE("explicit subsets are processed in the given order") {
  ComputeOptions opt;
  opt.kind = VectorKind::kPerm;
  opt.subsets = {ColumnSubset({1, 2, 3}), ColumnSubset({0, 1, 2})};
  const auto rows = compute_vectors(example_h422(), opt);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].vec == make_vec({0, 1, 1, 2}));
  CHECK(rows[1].vec == make_vec({2, 1, 1, 0}));
}

TEST_CASE("det kind serializes signs but judges the magnitude") {
  ComputeOptions opt;
  opt.kind = VectorKind::kDet;
  opt.with_minimal = true;
  const auto rows = compute_vectors(example_h422(), opt);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].vec == make_vec({0, -1, 1, 0}));
  CHECK(rows[0].unscaled);
  CHECK(rows[0].weight.value == 2);
  CHECK(rows[0].minimal == 1);
}

TEST_CASE("minimality column tracks the zero vector") {
  ComputeOptions opt;
  opt.kind = VectorKind::kAbsdet;
  opt.with_minimal = true;
  const ColumnSubset all9({0, 1, 2, 3, 4, 5, 6, 7, 8});
  const auto rows = compute_vectors(dumbbell(4), opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].subset == all9);
  CHECK(rows[0].weight.zero_vector);
  CHECK(rows[0].minimal == -1);

  ComputeOptions perm = opt;
  perm.kind = VectorKind::kPerm;
  const auto prows = compute_vectors(dumbbell(4), perm);
  CHECK(prows[0].minimal == 1);
}

TEST_CASE("thread count does not change the result") {
  const BinaryMatrix h = random_regular_ldpc({12, 2, 3, 5});
  ComputeOptions base;
  base.kind = VectorKind::kAbsdet;
  base.with_minimal = false;
  const auto serial = compute_vectors(h, base);

  for (unsigned threads : {2u, 4u, 8u, 32u}) {
    ComputeOptions opt = base;
    opt.threads = threads;
    const auto parallel = compute_vectors(h, opt);
    REQUIRE(parallel.size() == serial.size());
    CHECK(rows_to_csv(parallel, false) == rows_to_csv(serial, false));
  }
}

TEST_CASE("CSV rendering") {
  ComputeOptions opt;
  opt.kind = VectorKind::kPerm;
  opt.with_minimal = true;
  const auto rows = compute_vectors(example_h422(), opt);
  const std::string csv = rows_to_csv(rows, true);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "subset,vector,is_unscaled_pcw,pseudo_weight,is_zero,is_minimal");
  std::getline(lines, line);
  CHECK(line == "\"0 1 2\",\"2 1 1 0\",1,2.66666666667,0,1");

  const std::string bare = rows_to_csv(rows, false);
  CHECK(bare.substr(0, bare.find('\n')) == "subset,vector,is_unscaled_pcw,pseudo_weight,is_zero");
}

TEST_CASE("square matrices are rejected") {
  const BinaryMatrix square = BinaryMatrix::from_rows({{1, 0}, {0, 1}});
  ComputeOptions opt;
  CHECK_THROWS_AS(compute_vectors(square, opt), std::invalid_argument);
}
