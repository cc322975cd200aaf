#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pcwkit/batch.hpp"
#include "pcwkit/codegen.hpp"
#include "pcwkit/io.hpp"
#include "support.hpp"

using namespace pcwkit;
using testsupport::random_binary_matrix;

namespace {

const char* kH422Alist =
    "4 2\n"
    "2 3\n"
    "1 2 2 1\n"
    "3 3\n"
    "1\n"
    "1 2\n"
    "1 2\n"
    "2\n"
    "1 2 3\n"
    "2 3 4\n";

std::size_t thrown_line(const std::string& text) {
  try {
    parse_alist(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("alist serialization of the [4,2,2] example") {
  CHECK(write_alist(example_h422()) == kH422Alist);
  CHECK(parse_alist(kH422Alist) == example_h422());
}

TEST_CASE("alist round trips") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryMatrix h = random_binary_matrix(rng, 3 + trial % 4, 5 + trial % 5);
    CHECK(parse_alist(write_alist(h)) == h);
  }
  CHECK(parse_alist(write_alist(dumbbell(4))) == dumbbell(4));

  // A zero column serializes as the padding entry alone.
  const BinaryMatrix zerocol = BinaryMatrix::from_rows({{1, 0}, {1, 0}});
  const std::string text = write_alist(zerocol);
  CHECK(parse_alist(text) == zerocol);
}

TEST_CASE("alist accepts classic zero padding") {
  const char* padded =
      "4 2\n"
      "2 3\n"
      "1 2 2 1\n"
      "3 3\n"
      "1 0\n"
      "1 2\n"
      "1 2\n"
      "2 0\n"
      "1 2 3\n"
      "2 3 4\n";
  CHECK(parse_alist(padded) == example_h422());
}

TEST_CASE("alist parse errors carry line numbers") {
  // File-level failure: no line to point at.
  CHECK(thrown_line("") == 0);
  CHECK(thrown_line("4\n") == 1);
  CHECK(thrown_line("4 2\nx 3\n") == 2);
  // Degree line with the wrong count.
  CHECK(thrown_line("4 2\n2 3\n1 2 2\n") == 3);
  // Truncated inside the adjacency section.
  CHECK(thrown_line("4 2\n2 3\n1 2 2 1\n3 3\n1\n1 2\n") == 6);
  // Duplicate row index inside a column.
  CHECK(thrown_line("4 2\n2 3\n1 2 2 1\n3 3\n1\n1 1\n1 2\n2\n1 2 3\n2 3 4\n") == 6);
  // Row section inconsistent with the column section.
  CHECK(thrown_line("4 2\n2 3\n1 2 2 1\n3 3\n1\n1 2\n1 2\n2\n1 2 4\n2 3 4\n") == 9);
  // Out-of-range row index.
  CHECK(thrown_line("4 2\n2 3\n1 2 2 1\n3 3\n3\n1 2\n1 2\n2\n1 2 3\n2 3 4\n") == 5);
}

TEST_CASE("dense round trips and errors") {
  CHECK(parse_dense("1 1 1 0\n0 1 1 1\n") == example_h422());
  CHECK(parse_dense("1 1 1 0\n\n0 1 1 1\n\n") == example_h422());
  CHECK(write_dense(example_h422()) == "1 1 1 0\n0 1 1 1\n");

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const BinaryMatrix h = random_binary_matrix(rng, 2 + trial % 5, 3 + trial % 6);
    CHECK(parse_dense(write_dense(h)) == h);
  }

  CHECK_THROWS_AS(parse_dense(""), ParseError);
  CHECK_THROWS_AS(parse_dense("1 0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_dense("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dense("1 x\n"), ParseError);
}

TEST_CASE("matrix files dispatch on the extension") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pcwkit_io_test";
  fs::create_directories(dir);
  const fs::path alist = dir / "m.alist";
  const fs::path dense = dir / "m.txt";
  std::ofstream(alist) << write_alist(dumbbell(3));
  std::ofstream(dense) << write_dense(dumbbell(3));
  CHECK(read_matrix_file(alist.string()) == dumbbell(3));
  CHECK(read_matrix_file(dense.string()) == dumbbell(3));
  CHECK_THROWS_AS(read_matrix_file((dir / "missing.txt").string()), ParseError);
  fs::remove_all(dir);
}

TEST_CASE("weight formatting uses 12 significant digits") {
  CHECK(format_weight(6.4) == "6.4");
  CHECK(format_weight(8.0 / 3.0) == "2.66666666667");
  CHECK(format_weight(2.0) == "2");
  CHECK(format_weight(0.5) == "0.5");
}

TEST_CASE("vector and subset serialization") {
  CHECK(serialize_vector(testsupport::make_vec({2, -1, 0, 14})) == "2 -1 0 14");
  CHECK(serialize_subset(ColumnSubset({0, 2, 5})) == "0 2 5");
}

TEST_CASE("histogram exports") {
  std::vector<PseudoWeight> weights;
  weights.push_back(PseudoWeight{BigRat(3), false});
  weights.push_back(PseudoWeight{BigRat(3), false});
  weights.push_back(PseudoWeight{BigRat(4), false});
  weights.push_back(PseudoWeight{BigRat(0), true});
  const WeightHistogram hist = cumulative_histogram(weights, {2.0, 3.0, 5.0});

  std::ostringstream csv;
  write_histogram_csv(csv, hist);
  CHECK(csv.str() ==
        "# zero_count=1\n"
        "edge,cumulative_count\n"
        "2,0\n"
        "3,2\n"
        "5,3\n");

  std::ostringstream gnuplot;
  write_histogram_gnuplot(gnuplot, hist);
  CHECK(gnuplot.str() ==
        "# zero_count=1\n"
        "2 0\n"
        "3 2\n"
        "5 3\n");
}

TEST_CASE("gaussian export shape") {
  const GaussianLimitReport report =
      verify_gaussian_limit(example_h422(), ColumnSubset({0, 1, 2}), {0.1, 0.01});
  std::ostringstream out;
  write_gaussian_csv(out, report);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "bit,epsilon,product,target,relative_error");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4 * 2);
}

TEST_CASE("compute CSV parses back") {
  ComputeOptions opt;
  opt.kind = VectorKind::kPerm;
  const auto rows = compute_vectors(example_h422(), opt);
  const std::string csv = rows_to_csv(rows, false);
  const auto weights = parse_compute_csv(csv);
  REQUIRE(weights.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(weights[k].zero_vector == rows[k].weight.zero_vector);
    CHECK(to_double(weights[k].value) ==
          doctest::Approx(to_double(rows[k].weight.value)).epsilon(1e-10));
  }
}
