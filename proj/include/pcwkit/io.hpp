#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcwkit/cone.hpp"
#include "pcwkit/gaussian.hpp"
#include "pcwkit/matrix.hpp"
#include "pcwkit/subsets.hpp"

namespace pcwkit {

/// Parse failure with the 1-based line it was detected on (0 for
/// file-level problems such as an unreadable path).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// alist text layout: "n m", "max_col_deg max_row_deg", the n column
/// degrees, the m row degrees, then one line of 1-based row indices per
/// column and one line of 1-based column indices per row. Zero entries in
/// the adjacency lines are padding and are skipped. The column and row
/// sections must describe the same matrix.
BinaryMatrix parse_alist(const std::string& text);
std::string write_alist(const BinaryMatrix& h);

/// Whitespace-separated 0/1 tokens, one matrix row per line.
BinaryMatrix parse_dense(const std::string& text);
std::string write_dense(const BinaryMatrix& h);

/// Reads a matrix file, picking the format by extension: ".alist" uses
/// the alist parser, anything else the dense parser.
BinaryMatrix read_matrix_file(const std::string& path);

/// Double formatting used in every CSV: 12 significant digits.
std::string format_weight(double value);

std::string serialize_vector(const IntVector& v);
std::string serialize_subset(const ColumnSubset& s);

void write_histogram_csv(std::ostream& out, const WeightHistogram& hist);
/// Two-column "edge count" rows for plotting tools.
void write_histogram_gnuplot(std::ostream& out, const WeightHistogram& hist);

void write_gaussian_csv(std::ostream& out, const GaussianLimitReport& report);

/// Reads the pseudo_weight / is_zero columns back out of a compute CSV.
std::vector<PseudoWeight> parse_compute_csv(const std::string& text);

}  // namespace pcwkit
