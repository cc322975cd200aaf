#include "pcwkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pcwkit {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::size_t parse_size(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, std::string(what) + ": expected a nonnegative integer, got '" +
                               token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError(line, std::string(what) + ": value out of range");
  }
}

/// Positional line access with end-of-file diagnostics.
struct LineReader {
  const std::vector<std::string>& lines;
  std::size_t cursor = 0;  // 0-based index of the next line

  std::size_t line_no() const { return cursor + 1; }

  std::vector<std::string> next(const char* what) {
    while (cursor < lines.size()) {
      auto toks = tokens_of(lines[cursor]);
      ++cursor;
      return toks;
    }
    throw ParseError(lines.size(), std::string("unexpected end of file: missing ") + what);
  }

  void expect_trailing_blank() const {
    for (std::size_t k = cursor; k < lines.size(); ++k) {
      if (!tokens_of(lines[k]).empty()) {
        throw ParseError(k + 1, "unexpected trailing content");
      }
    }
  }
};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

BinaryMatrix parse_alist(const std::string& text) {
  const auto lines = split_lines(text);
  LineReader reader{lines};

  std::size_t line = reader.line_no();
  auto header = reader.next("size header");
  if (header.size() != 2) {
    throw ParseError(line, "size header must be 'n m'");
  }
  const std::size_t n = parse_size(header[0], line, "block length");
  const std::size_t m = parse_size(header[1], line, "check count");
  if (n == 0 || m == 0) {
    throw ParseError(line, "matrix dimensions must be positive");
  }

  line = reader.line_no();
  auto max_line = reader.next("maximum degree line");
  if (max_line.size() != 2) {
    throw ParseError(line, "expected 'max_col_deg max_row_deg'");
  }
  const std::size_t max_col = parse_size(max_line[0], line, "max column degree");
  const std::size_t max_row = parse_size(max_line[1], line, "max row degree");

  line = reader.line_no();
  auto col_deg_tokens = reader.next("column degree line");
  if (col_deg_tokens.size() != n) {
    throw ParseError(line, "expected " + std::to_string(n) + " column degrees, got " +
                               std::to_string(col_deg_tokens.size()));
  }
  std::vector<std::size_t> col_deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    col_deg[i] = parse_size(col_deg_tokens[i], line, "column degree");
  }
  if (n > 0 && *std::max_element(col_deg.begin(), col_deg.end()) != max_col) {
    throw ParseError(line, "column degrees disagree with the declared maximum");
  }

  line = reader.line_no();
  auto row_deg_tokens = reader.next("row degree line");
  if (row_deg_tokens.size() != m) {
    throw ParseError(line, "expected " + std::to_string(m) + " row degrees, got " +
                               std::to_string(row_deg_tokens.size()));
  }
  std::vector<std::size_t> row_deg(m);
  for (std::size_t j = 0; j < m; ++j) {
    row_deg[j] = parse_size(row_deg_tokens[j], line, "row degree");
  }
  if (m > 0 && *std::max_element(row_deg.begin(), row_deg.end()) != max_row) {
    throw ParseError(line, "row degrees disagree with the declared maximum");
  }

  BinaryMatrix h(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    line = reader.line_no();
    auto entries = reader.next(("adjacency of column " + std::to_string(i)).c_str());
    std::size_t listed = 0;
    for (const auto& tok : entries) {
      const std::size_t value = parse_size(tok, line, "row index");
      if (value == 0) continue;  // padding
      if (value > m) {
        throw ParseError(line, "row index " + std::to_string(value) + " out of range");
      }
      if (h(value - 1, i)) {
        throw ParseError(line, "duplicate row index " + std::to_string(value));
      }
      h.set(value - 1, i, true);
      ++listed;
    }
    if (listed != col_deg[i]) {
      throw ParseError(line, "column " + std::to_string(i) + " lists " +
                                 std::to_string(listed) + " entries but declares " +
                                 std::to_string(col_deg[i]));
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    line = reader.line_no();
    auto entries = reader.next(("adjacency of row " + std::to_string(j)).c_str());
    std::vector<bool> seen(n, false);
    std::size_t listed = 0;
    for (const auto& tok : entries) {
      const std::size_t value = parse_size(tok, line, "column index");
      if (value == 0) continue;
      if (value > n) {
        throw ParseError(line, "column index " + std::to_string(value) + " out of range");
      }
      if (seen[value - 1]) {
        throw ParseError(line, "duplicate column index " + std::to_string(value));
      }
      seen[value - 1] = true;
      ++listed;
      if (!h(j, value - 1)) {
        throw ParseError(line, "row adjacency disagrees with the column section");
      }
    }
    if (listed != row_deg[j] || listed != h.row_weight(j)) {
      throw ParseError(line, "row " + std::to_string(j) + " lists " + std::to_string(listed) +
                                 " entries but declares " + std::to_string(row_deg[j]));
    }
  }

  reader.expect_trailing_blank();
  return h;
}

std::string write_alist(const BinaryMatrix& h) {
  std::ostringstream out;
  const std::size_t n = h.cols();
  const std::size_t m = h.rows();
  out << n << " " << m << "\n";

  std::size_t max_col = 0, max_row = 0;
  for (std::size_t i = 0; i < n; ++i) max_col = std::max(max_col, h.col_weight(i));
  for (std::size_t j = 0; j < m; ++j) max_row = std::max(max_row, h.row_weight(j));
  out << max_col << " " << max_row << "\n";

  for (std::size_t i = 0; i < n; ++i) out << h.col_weight(i) << (i + 1 < n ? " " : "\n");
  for (std::size_t j = 0; j < m; ++j) out << h.row_weight(j) << (j + 1 < m ? " " : "\n");

  for (std::size_t i = 0; i < n; ++i) {
    const auto support = h.col_support(i);
    if (support.empty()) {
      out << "0\n";
      continue;
    }
    for (std::size_t k = 0; k < support.size(); ++k) {
      out << (support[k] + 1) << (k + 1 < support.size() ? " " : "\n");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto support = h.row_support(j);
    if (support.empty()) {
      out << "0\n";
      continue;
    }
    for (std::size_t k = 0; k < support.size(); ++k) {
      out << (support[k] + 1) << (k + 1 < support.size() ? " " : "\n");
    }
  }
  return out.str();
}

BinaryMatrix parse_dense(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<std::vector<std::uint8_t>> rows;
  std::size_t width = 0;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto toks = tokens_of(lines[k]);
    if (toks.empty()) continue;
    std::vector<std::uint8_t> row;
    row.reserve(toks.size());
    for (const auto& tok : toks) {
      if (tok == "0") {
        row.push_back(0);
      } else if (tok == "1") {
        row.push_back(1);
      } else {
        throw ParseError(k + 1, "entry '" + tok + "' is not 0 or 1");
      }
    }
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError(k + 1, "row has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(width));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(0, "matrix text contains no rows");
  }
  BinaryMatrix h(rows.size(), width);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      if (rows[j][i]) h.set(j, i, true);
    }
  }
  return h;
}

std::string write_dense(const BinaryMatrix& h) {
  std::ostringstream out;
  for (std::size_t j = 0; j < h.rows(); ++j) {
    for (std::size_t i = 0; i < h.cols(); ++i) {
      out << static_cast<int>(h(j, i)) << (i + 1 < h.cols() ? " " : "\n");
    }
  }
  return out.str();
}

BinaryMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const bool alist = path.size() >= 6 && path.compare(path.size() - 6, 6, ".alist") == 0;
  return alist ? parse_alist(text) : parse_dense(text);
}

std::string format_weight(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

std::string serialize_vector(const IntVector& v) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out << " ";
    out << v[k];
  }
  return out.str();
}

std::string serialize_subset(const ColumnSubset& s) {
  std::ostringstream out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out << " ";
    out << s[k];
  }
  return out.str();
}

void write_histogram_csv(std::ostream& out, const WeightHistogram& hist) {
  out << "# zero_count=" << hist.zero_count << "\n";
  out << "edge,cumulative_count\n";
  for (std::size_t k = 0; k < hist.edges.size(); ++k) {
    out << format_weight(hist.edges[k]) << "," << hist.cumulative[k] << "\n";
  }
}

void write_histogram_gnuplot(std::ostream& out, const WeightHistogram& hist) {
  out << "# zero_count=" << hist.zero_count << "\n";
  for (std::size_t k = 0; k < hist.edges.size(); ++k) {
    out << format_weight(hist.edges[k]) << " " << hist.cumulative[k] << "\n";
  }
}

void write_gaussian_csv(std::ostream& out, const GaussianLimitReport& report) {
  out << "bit,epsilon,product,target,relative_error\n";
  for (const GaussianBitRecord& rec : report.bits) {
    for (std::size_t k = 0; k < report.schedule.size(); ++k) {
      double err = rec.abs_errors[k];
      if (rec.target != 0) err /= to_double(rec.target);
      out << rec.bit << "," << format_weight(report.schedule[k]) << ","
          << format_weight(rec.products[k]) << "," << rec.target << ","
          << format_weight(err) << "\n";
    }
  }
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"') {
        quoted = false;
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::vector<PseudoWeight> parse_compute_csv(const std::string& text) {
  const auto lines = split_lines(text);
  std::size_t header_line = 0;
  while (header_line < lines.size() &&
         (lines[header_line].empty() || lines[header_line][0] == '#')) {
    ++header_line;
  }
  if (header_line == lines.size()) {
    throw ParseError(0, "compute CSV contains no header");
  }
  const auto header = split_csv_row(lines[header_line]);
  std::size_t weight_col = header.size(), zero_col = header.size();
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == "pseudo_weight") weight_col = k;
    if (header[k] == "is_zero") zero_col = k;
  }
  if (weight_col == header.size() || zero_col == header.size()) {
    throw ParseError(header_line + 1,
                     "compute CSV header must contain pseudo_weight and is_zero");
  }

  std::vector<PseudoWeight> weights;
  for (std::size_t k = header_line + 1; k < lines.size(); ++k) {
    if (lines[k].empty() || lines[k][0] == '#') continue;
    const auto fields = split_csv_row(lines[k]);
    if (fields.size() <= std::max(weight_col, zero_col)) {
      throw ParseError(k + 1, "compute CSV row has too few fields");
    }
    PseudoWeight pw;
    if (fields[zero_col] == "1") {
      pw.zero_vector = true;
    } else if (fields[zero_col] == "0") {
      try {
        pw.value = BigRat(std::stod(fields[weight_col]));
      } catch (const std::exception&) {
        throw ParseError(k + 1, "bad pseudo_weight '" + fields[weight_col] + "'");
      }
    } else {
      throw ParseError(k + 1, "is_zero must be 0 or 1");
    }
    weights.push_back(pw);
  }
  return weights;
}

}  // namespace pcwkit
